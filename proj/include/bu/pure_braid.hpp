#pragma once

#include <string>
#include <vector>

#include "bu/braid_word.hpp"
#include "bu/report.hpp"

namespace bu {

/// A braid word whose permutation is the identity.
class PureBraid {
 public:
  /// Throws DomainError if the word is not pure.
  explicit PureBraid(BraidWord word);

  const BraidWord& word() const { return word_; }
  int strands() const { return word_.strands(); }

  friend PureBraid operator*(const PureBraid& a, const PureBraid& b);
  PureBraid inverse() const;

 private:
  struct Unchecked {};
  PureBraid(BraidWord word, Unchecked) : word_(std::move(word)) {}
  BraidWord word_;
};

/// A_{i,j} = sigma_{j-1} ... sigma_{i+1} sigma_i^2 sigma_{i+1}^{-1} ... sigma_{j-1}^{-1}.
PureBraid a_gen(int i, int j, int n);

/// The alternative form sigma_i^{-1} ... sigma_{j-2}^{-1} sigma_{j-1}^2 sigma_{j-2} ... sigma_i.
BraidWord a_gen_alternative(int i, int j, int n);

/// The evaluation homomorphism P_n -> Z with A_{i,j} -> 1 (half the exponent sum).
long long epsilon(const PureBraid& p);
/// Throws DomainError when w is not pure.
long long epsilon(const BraidWord& w);

/// Delta_n^2 as the ordered product prod_{j=2}^{n} prod_{i=1}^{j-1} A_{i,j}.
PureBraid full_twist(int n);

/// Record for one braid identity lhs = rhs, decided by braid equality.
CheckRecord check_braid_identity(const std::string& relation, std::vector<int> indices, const BraidWord& lhs,
                                 const BraidWord& rhs);

/// Audits every instance of the conjugation relations A_{r,s}^{-1} A_{i,j} A_{r,s}
/// among the pure braid generators, by braid equality.
Report check_relations_I(int n);

}  // namespace bu
