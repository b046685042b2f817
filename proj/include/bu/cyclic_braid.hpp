#pragma once

#include <string>
#include <utility>

#include "bu/braid_word.hpp"
#include "bu/pure_braid.hpp"
#include "bu/report.hpp"

namespace bu {

/// A residue class modulo n, always reduced to 0..n-1.
class ZnElement {
 public:
  ZnElement(long long value, int modulus);

  int modulus() const { return n_; }
  int value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  friend ZnElement operator+(ZnElement a, ZnElement b);
  friend ZnElement operator-(ZnElement a);
  friend ZnElement operator*(long long k, ZnElement a);
  friend bool operator==(const ZnElement&, const ZnElement&) = default;

  /// "m mod n"
  std::string to_string() const;
  static ZnElement parse(const std::string& text);

 private:
  int value_ = 0;
  int n_ = 1;
};

/// An element of B_{Z_n}(R^2): a braid whose permutation is a power of (1,n,...,2).
class CyclicBraid {
 public:
  /// Throws MembershipError if the permutation is outside the cyclic subgroup.
  explicit CyclicBraid(BraidWord word);

  const BraidWord& word() const { return word_; }
  int strands() const { return word_.strands(); }
  /// The cached image under pi_2.
  ZnElement klass() const { return klass_; }

  friend CyclicBraid operator*(const CyclicBraid& a, const CyclicBraid& b);
  CyclicBraid inverse() const;
  CyclicBraid pow(long long e) const;

  /// g = sigma_1 ... sigma_{n-1}, with pi_2(g) = 1.
  static CyclicBraid generator(int n);

 private:
  CyclicBraid(BraidWord word, ZnElement klass) : word_(std::move(word)), klass_(klass) {}
  BraidWord word_;
  ZnElement klass_;
};

/// The residue m with permutation = (1,n,...,2)^m; throws MembershipError otherwise.
ZnElement cyclic_class(const Permutation& p);
bool in_cyclic_subgroup(const BraidWord& w);

ZnElement pi2(const CyclicBraid& b);

struct Decomposition {
  PureBraid pure;
  int m;
};

/// The unique factorization b = w g^m with w pure and 0 <= m <= n-1.
Decomposition decompose(const CyclicBraid& b);

/// Audits the conjugation relations g A_{i,j} g^{-1}, the power relation for g^n,
/// g^n = Delta^2, and the agreement of the two words for each A_{i,j}.
///
/// For j = n the relation is recorded twice: "II.wrap" with the conjugator
/// A_{1,n} ... A_{n-1,n}, which fails for n >= 3, and "II.wrap_corrected" with
/// A_{1,2} ... A_{1,n}, which holds.
Report verify_presentation(int n);

}  // namespace bu
