#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "bu/permutation.hpp"

namespace bu {

/// A word in the Artin generators of B_n. Letter +i is sigma_i, -i is sigma_i^{-1}.
///
/// Words are immutable values. The constructor keeps the letters as given;
/// products, inverses and powers are freely reduced.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int n, std::vector<int> letters = {});

  static BraidWord identity(int n) { return BraidWord(n); }
  static BraidWord sigma(int n, int i, int exponent = 1);
  /// g = sigma_1 sigma_2 ... sigma_{n-1}.
  static BraidWord cyclic_generator(int n);
  /// The positive half twist Delta_n (permutation braid of i -> n+1-i).
  static BraidWord half_twist(int n);
  /// The positive permutation braid whose permutation is p.
  static BraidWord permutation_braid(const Permutation& p);

  /// Text form "n=<k> l1 l2 ...".
  static BraidWord parse(const std::string& text);
  std::string to_string() const;

  int strands() const { return n_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  BraidWord inverse() const;
  BraidWord pow(long long e) const;
  BraidWord reduced() const;

  friend BraidWord operator*(const BraidWord& a, const BraidWord& b);
  /// Letter-wise identity of words (not braid equality; see bu::equal).
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int n_ = 1;
  std::vector<int> letters_;
};

/// The permutation of a braid: sigma_i maps to the transposition (i, i+1).
Permutation permutation(const BraidWord& w);

/// Sum of letter signs; the abelianization B_n -> Z.
long long exponent_sum(const BraidWord& w);

/// Product of the conjugate c w c^{-1}.
BraidWord conjugate(const BraidWord& c, const BraidWord& w);

/// Commutator [a, b] = a b a^{-1} b^{-1}.
BraidWord commutator(const BraidWord& a, const BraidWord& b);

}  // namespace bu
