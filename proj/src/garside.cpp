#include "bu/garside.hpp"

#include <cstdlib>
#include <utility>

#include "bu/errors.hpp"

namespace bu {

namespace {

// A permutation braid held with its inverse, 0-based.
struct Simple {
  std::vector<int> perm;
  std::vector<int> inv;

  static Simple from_perm(std::vector<int> p) {
    Simple s{std::move(p), {}};
    s.inv.resize(s.perm.size());
    for (std::size_t i = 0; i < s.perm.size(); ++i) s.inv[s.perm[i]] = static_cast<int>(i);
    return s;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < perm.size(); ++i)
      if (perm[i] != static_cast<int>(i)) return false;
    return true;
  }

  bool is_delta() const {
    const int n = static_cast<int>(perm.size());
    for (int i = 0; i < n; ++i)
      if (perm[i] != n - 1 - i) return false;
    return true;
  }
};

std::vector<int> delta_perm(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[i] = n - 1 - i;
  return p;
}

// Conjugation by Delta: sigma_i -> sigma_{n-i}.
std::vector<int> flip(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  std::vector<int> out(p.size());
  for (int x = 0; x < n; ++x) out[x] = n - 1 - p[n - 1 - x];
  return out;
}

std::vector<int> flip_pow(std::vector<int> p, long long e) {
  return (e % 2 != 0) ? flip(p) : p;
}

// Moves sigma_i from the front of b to the back of a while that keeps a simple
// and sigma_i left-divides b. Returns whether anything moved.
bool make_left_weighted(Simple& a, Simple& b) {
  const int n = static_cast<int>(a.perm.size());
  bool changed = false;
  for (int i = 0; i + 1 < n;) {
    if (b.perm[i] > b.perm[i + 1] && a.inv[i] < a.inv[i + 1]) {
      std::swap(a.perm[a.inv[i]], a.perm[a.inv[i + 1]]);
      std::swap(a.inv[i], a.inv[i + 1]);
      std::swap(b.perm[i], b.perm[i + 1]);
      std::swap(b.inv[b.perm[i]], b.inv[b.perm[i + 1]]);
      changed = true;
      i = i > 0 ? i - 1 : 0;
    } else {
      ++i;
    }
  }
  return changed;
}

bool is_left_weighted(const Simple& a, const Simple& b) {
  const int n = static_cast<int>(a.perm.size());
  for (int i = 0; i + 1 < n; ++i)
    if (b.perm[i] > b.perm[i + 1] && a.inv[i] < a.inv[i + 1]) return false;
  return true;
}

}  // namespace

// Accumulates positive simple factors into left-weighted form.
class NormalFormBuilder {
 public:
  explicit NormalFormBuilder(int n) : n_(n) {}

  void set_inf(long long inf) { inf_ = inf; }

  void push(Simple s) {
    factors_.push_back(std::move(s));
    settle();
  }

  NormalForm finish() {
    NormalForm nf(n_);
    std::size_t lead = 0;
    while (lead < factors_.size() && factors_[lead].is_delta()) ++lead;
    std::size_t end = factors_.size();
    while (end > lead && factors_[end - 1].is_identity()) --end;
    nf.inf_ = inf_ + static_cast<long long>(lead);
    nf.factors_.reserve(end - lead);
    for (std::size_t i = lead; i < end; ++i) nf.factors_.push_back(Permutation::from_raw(factors_[i].perm));
    return nf;
  }

 private:
  void settle() {
    for (;;) {
      for (std::size_t j = factors_.size(); j-- > 1;) {
        if (!make_left_weighted(factors_[j - 1], factors_[j])) break;
      }
      bool ok = true;
      for (std::size_t j = 1; j < factors_.size() && ok; ++j) ok = is_left_weighted(factors_[j - 1], factors_[j]);
      if (ok) return;
      // Fall back to a full right-to-left sweep.
      for (std::size_t j = factors_.size(); j-- > 1;) make_left_weighted(factors_[j - 1], factors_[j]);
    }
  }

  int n_;
  long long inf_ = 0;
  std::vector<Simple> factors_;
};

NormalForm normal_form(const BraidWord& w) {
  const int n = w.strands();
  const auto& letters = w.letters();
  // sigma_i^{-1} = Delta^{-1} (Delta sigma_i^{-1}); every Delta^{-1} is pushed to
  // the far left, conjugating the factors it passes.
  long long negatives_after = 0;
  for (int e : letters)
    if (e < 0) ++negatives_after;
  NormalFormBuilder builder(n);
  builder.set_inf(-negatives_after);
  const std::vector<int> delta = delta_perm(n);
  for (int e : letters) {
    const int i = std::abs(e) - 1;
    std::vector<int> p(static_cast<std::size_t>(n));
    if (e > 0) {
      for (int x = 0; x < n; ++x) p[x] = x;
      std::swap(p[i], p[i + 1]);
    } else {
      // Delta sigma_i^{-1}: apply Delta, then the transposition (i, i+1).
      for (int x = 0; x < n; ++x) {
        int y = delta[x];
        if (y == i)
          y = i + 1;
        else if (y == i + 1)
          y = i;
        p[x] = y;
      }
      --negatives_after;
    }
    builder.push(Simple::from_perm(flip_pow(std::move(p), negatives_after)));
  }
  return builder.finish();
}

NormalForm operator*(const NormalForm& a, const NormalForm& b) {
  if (a.n_ != b.n_) throw InputError("strand count mismatch in normal form product");
  NormalFormBuilder builder(a.n_);
  builder.set_inf(a.inf_ + b.inf_);
  for (const auto& f : a.factors_) builder.push(Simple::from_perm(flip_pow(f.raw(), b.inf_)));
  for (const auto& f : b.factors_) builder.push(Simple::from_perm(f.raw()));
  return builder.finish();
}

NormalForm NormalForm::inverse() const {
  // (Delta^r A_1..A_k)^{-1} = Delta^{-r-k} tau^{k+r}(dA_k) ... tau^{1+r}(dA_1),
  // where dA = A^{-1} Delta is the right complement.
  const long long k = static_cast<long long>(factors_.size());
  NormalFormBuilder builder(n_);
  builder.set_inf(-inf_ - k);
  const std::vector<int> delta = delta_perm(n_);
  for (long long j = k; j >= 1; --j) {
    const Permutation& f = factors_[static_cast<std::size_t>(j - 1)];
    const Permutation inv = f.inverse();
    std::vector<int> comp(static_cast<std::size_t>(n_));
    for (int x = 0; x < n_; ++x) comp[x] = delta[inv.raw()[x]];
    builder.push(Simple::from_perm(flip_pow(std::move(comp), j + inf_)));
  }
  return builder.finish();
}

BraidWord NormalForm::to_word() const {
  BraidWord result = BraidWord::half_twist(n_).pow(inf_);
  for (const auto& f : factors_) result = result * BraidWord::permutation_braid(f);
  return result;
}

std::string NormalForm::to_string() const {
  std::string out = "n=" + std::to_string(n_) + " inf=" + std::to_string(inf_);
  for (const auto& f : factors_) out += " | " + f.to_cycle_string();
  return out;
}

bool equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw InputError("cannot compare braids with different strand counts");
  return normal_form(a) == normal_form(b);
}

bool is_trivial(const BraidWord& w) { return normal_form(w).is_identity(); }

std::vector<int> starting_set(const Permutation& simple) {
  std::vector<int> out;
  const auto& p = simple.raw();
  for (int i = 0; i + 1 < simple.degree(); ++i)
    if (p[i] > p[i + 1]) out.push_back(i + 1);
  return out;
}

std::vector<int> finishing_set(const Permutation& simple) {
  return starting_set(simple.inverse());
}

}  // namespace bu
