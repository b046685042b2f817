#include "bu/cyclic_braid.hpp"

#include <sstream>

#include "bu/errors.hpp"
#include "bu/garside.hpp"

namespace bu {

ZnElement::ZnElement(long long value, int modulus) : n_(modulus) {
  if (modulus < 1) throw InputError("modulus must be positive");
  long long r = value % modulus;
  if (r < 0) r += modulus;
  value_ = static_cast<int>(r);
}

ZnElement operator+(ZnElement a, ZnElement b) {
  if (a.n_ != b.n_) throw InputError("modulus mismatch");
  return ZnElement(static_cast<long long>(a.value_) + b.value_, a.n_);
}

ZnElement operator-(ZnElement a) { return ZnElement(-static_cast<long long>(a.value_), a.n_); }

ZnElement operator*(long long k, ZnElement a) { return ZnElement((k % a.n_) * a.value_, a.n_); }

std::string ZnElement::to_string() const { return std::to_string(value_) + " mod " + std::to_string(n_); }

ZnElement ZnElement::parse(const std::string& text) {
  std::istringstream in(text);
  long long v = 0;
  std::string word;
  int n = 0;
  if (!(in >> v >> word >> n) || word != "mod") throw InputError("expected '<m> mod <n>': " + text);
  return ZnElement(v, n);
}

ZnElement cyclic_class(const Permutation& p) {
  const int n = p.degree();
  // (1,n,...,2)^m sends 1 to 1-m (mod n).
  const int m = ((1 - p(1)) % n + n) % n;
  if (Permutation::cyclic_generator(n).pow(m) != p)
    throw MembershipError("permutation " + p.to_cycle_string() + " is not a power of the cyclic generator");
  return ZnElement(m, n);
}

bool in_cyclic_subgroup(const BraidWord& w) {
  try {
    cyclic_class(permutation(w));
    return true;
  } catch (const MembershipError&) {
    return false;
  }
}

CyclicBraid::CyclicBraid(BraidWord word) : word_(std::move(word)), klass_(cyclic_class(permutation(word_))) {}

CyclicBraid operator*(const CyclicBraid& a, const CyclicBraid& b) {
  return CyclicBraid(a.word_ * b.word_, a.klass_ + b.klass_);
}

CyclicBraid CyclicBraid::inverse() const { return CyclicBraid(word_.inverse(), -klass_); }

CyclicBraid CyclicBraid::pow(long long e) const { return CyclicBraid(word_.pow(e), e * klass_); }

CyclicBraid CyclicBraid::generator(int n) { return CyclicBraid(BraidWord::cyclic_generator(n)); }

ZnElement pi2(const CyclicBraid& b) { return b.klass(); }

Decomposition decompose(const CyclicBraid& b) {
  const int m = b.klass().value();
  const BraidWord g = BraidWord::cyclic_generator(b.strands());
  return Decomposition{PureBraid(b.word() * g.pow(-m)), m};
}

Report verify_presentation(int n) {
  if (n < 2) throw InputError("presentation check needs n >= 2");
  Report report;
  const BraidWord g = BraidWord::cyclic_generator(n);
  const BraidWord g_inv = g.inverse();
  auto A = [n](int i, int j) { return a_gen(i, j, n).word(); };

  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const BraidWord lhs = g * A(i, j) * g_inv;
      if (j <= n - 1) {
        report.add(check_braid_identity("II.shift", {i, j}, lhs, A(i + 1, j + 1)));
      } else {
        BraidWord prefix(n);
        for (int k = 1; k <= n - 1; ++k) prefix = prefix * A(k, n);
        report.add(check_braid_identity("II.wrap", {i, j}, lhs, prefix * A(1, i + 1) * prefix.inverse()));
        // The conjugator that actually works: A_{1,2} A_{1,3} ... A_{1,n}.
        BraidWord first_row(n);
        for (int k = 2; k <= n; ++k) first_row = first_row * A(1, k);
        report.add(check_braid_identity("II.wrap_corrected", {i, j}, lhs, first_row * A(1, i + 1) * first_row.inverse()));
      }
    }

  BraidWord product(n);
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) product = product * A(i, j);
  const BraidWord g_n = g.pow(n);
  report.add(check_braid_identity("IV.power", {n}, g_n, product));
  const BraidWord delta = BraidWord::half_twist(n);
  report.add(check_braid_identity("IV.full_twist", {n}, g_n, delta * delta));

  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      report.add(check_braid_identity("A.alternative", {i, j}, A(i, j), a_gen_alternative(i, j, n)));
  return report;
}

}  // namespace bu
