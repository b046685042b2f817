#include "bu/braid_word.hpp"

#include <cstdlib>
#include <sstream>

#include "bu/errors.hpp"

namespace bu {

namespace {

void free_reduce_into(std::vector<int>& out, const std::vector<int>& in) {
  for (int e : in) {
    if (!out.empty() && out.back() == -e)
      out.pop_back();
    else
      out.push_back(e);
  }
}

}  // namespace

BraidWord::BraidWord(int n, std::vector<int> letters) : n_(n), letters_(std::move(letters)) {
  if (n < 1) throw InputError("strand count must be at least 1");
  for (int e : letters_) {
    if (e == 0 || std::abs(e) > n - 1)
      throw InputError("letter " + std::to_string(e) + " out of range for n=" + std::to_string(n));
  }
}

BraidWord BraidWord::sigma(int n, int i, int exponent) {
  std::vector<int> letters(static_cast<std::size_t>(std::abs(exponent)), exponent < 0 ? -i : i);
  return BraidWord(n, std::move(letters));
}

BraidWord BraidWord::cyclic_generator(int n) {
  std::vector<int> letters;
  for (int i = 1; i < n; ++i) letters.push_back(i);
  return BraidWord(n, std::move(letters));
}

BraidWord BraidWord::permutation_braid(const Permutation& p) {
  // Peel off left divisors sigma_i while the permutation has a descent at i.
  std::vector<int> raw = p.raw();
  const int n = p.degree();
  std::vector<int> letters;
  for (int i = 0; i + 1 < n;) {
    if (raw[i] > raw[i + 1]) {
      letters.push_back(i + 1);
      std::swap(raw[i], raw[i + 1]);
      i = i > 0 ? i - 1 : 0;
    } else {
      ++i;
    }
  }
  return BraidWord(std::max(n, 1), std::move(letters));
}

BraidWord BraidWord::half_twist(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[i] = n - i;
  return permutation_braid(Permutation::from_images(images));
}

BraidWord BraidWord::parse(const std::string& text) {
  std::istringstream in(text);
  std::string head;
  if (!(in >> head) || head.rfind("n=", 0) != 0)
    throw InputError("braid word must start with n=<k>: '" + text + "'");
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(head.substr(2), &used);
    if (used != head.size() - 2) throw InputError("bad strand count");
  } catch (const std::logic_error&) {
    throw InputError("bad strand count in '" + head + "'");
  }
  std::vector<int> letters;
  for (std::string tok; in >> tok;) {
    try {
      std::size_t used = 0;
      const int e = std::stoi(tok, &used);
      if (used != tok.size()) throw InputError("bad letter");
      letters.push_back(e);
    } catch (const std::logic_error&) {
      throw InputError("bad letter '" + tok + "'");
    }
  }
  return BraidWord(n, std::move(letters));
}

std::string BraidWord::to_string() const {
  std::string out = "n=" + std::to_string(n_);
  for (int e : letters_) out += " " + std::to_string(e);
  return out;
}

BraidWord BraidWord::inverse() const {
  std::vector<int> letters(letters_.rbegin(), letters_.rend());
  for (int& e : letters) e = -e;
  return BraidWord(n_, std::move(letters)).reduced();
}

BraidWord BraidWord::reduced() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  free_reduce_into(out, letters_);
  BraidWord w;
  w.n_ = n_;
  w.letters_ = std::move(out);
  return w;
}

BraidWord BraidWord::pow(long long e) const {
  const BraidWord base = e < 0 ? inverse() : reduced();
  const unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  std::vector<int> out;
  out.reserve(base.letters_.size() * k);
  for (unsigned long long i = 0; i < k; ++i) free_reduce_into(out, base.letters_);
  BraidWord w;
  w.n_ = n_;
  w.letters_ = std::move(out);
  return w;
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  if (a.n_ != b.n_) throw InputError("strand count mismatch in braid product");
  std::vector<int> out;
  out.reserve(a.letters_.size() + b.letters_.size());
  free_reduce_into(out, a.letters_);
  free_reduce_into(out, b.letters_);
  BraidWord w;
  w.n_ = a.n_;
  w.letters_ = std::move(out);
  return w;
}

Permutation permutation(const BraidWord& w) {
  // at[position] = strand that started there
  std::vector<int> at(static_cast<std::size_t>(w.strands()));
  for (int i = 0; i < w.strands(); ++i) at[i] = i;
  for (int e : w.letters()) {
    const int i = std::abs(e) - 1;
    std::swap(at[i], at[i + 1]);
  }
  std::vector<int> raw(at.size());
  for (std::size_t p = 0; p < at.size(); ++p) raw[at[p]] = static_cast<int>(p);
  return Permutation::from_raw(std::move(raw));
}

long long exponent_sum(const BraidWord& w) {
  long long s = 0;
  for (int e : w.letters()) s += e > 0 ? 1 : -1;
  return s;
}

BraidWord conjugate(const BraidWord& c, const BraidWord& w) { return c * w * c.inverse(); }

BraidWord commutator(const BraidWord& a, const BraidWord& b) {
  return a * b * a.inverse() * b.inverse();
}

}  // namespace bu
