#pragma once

#include <string>
#include <vector>

#include "bu/braid_word.hpp"
#include "bu/permutation.hpp"

namespace bu {

/// Left-greedy Garside normal form Delta^inf A_1 ... A_k.
///
/// Each A_i is a permutation braid, identified with its permutation, and is
/// neither the identity nor Delta. Consecutive factors are left-weighted:
/// the finishing set of A_i contains the starting set of A_{i+1}. Two braids
/// are equal in B_n iff their normal forms coincide.
class NormalForm {
 public:
  NormalForm() = default;
  explicit NormalForm(int n) : n_(n) {}

  int strands() const { return n_; }
  long long inf() const { return inf_; }
  const std::vector<Permutation>& factors() const { return factors_; }
  std::size_t canonical_length() const { return factors_.size(); }
  bool is_identity() const { return inf_ == 0 && factors_.empty(); }

  NormalForm inverse() const;
  friend NormalForm operator*(const NormalForm& a, const NormalForm& b);
  friend bool operator==(const NormalForm&, const NormalForm&) = default;

  /// Delta^inf followed by the positive words of the factors.
  BraidWord to_word() const;
  /// "n=<k> inf=<r> | (..) | (..)" with factors in cycle notation.
  std::string to_string() const;

 private:
  friend NormalForm normal_form(const BraidWord& w);
  friend class NormalFormBuilder;
  int n_ = 1;
  long long inf_ = 0;
  std::vector<Permutation> factors_;
};

NormalForm normal_form(const BraidWord& w);

/// Braid equality in B_n, decided by comparing normal forms.
bool equal(const BraidWord& a, const BraidWord& b);
bool is_trivial(const BraidWord& w);

/// Starting set {i : sigma_i left-divides A} of a permutation braid, 1-based.
std::vector<int> starting_set(const Permutation& simple);
/// Finishing set {i : sigma_i right-divides A} of a permutation braid, 1-based.
std::vector<int> finishing_set(const Permutation& simple);

}  // namespace bu
