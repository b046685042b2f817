#pragma once

#include <optional>
#include <vector>

#include "bu/bu_engine.hpp"
#include "bu/permutation.hpp"
#include "bu/presentation.hpp"
#include "bu/report.hpp"

namespace bu {

/// pi_1(T^2 # T^2) = <a1, b1, a2, b2 | [a1,b1][a2,b2]>.
GroupPresentation n1_presentation();
/// pi_1(RP^2 # T^2) = <c, a1, b1 | c^2 [a1,b1]>, with c orientation-reversing.
GroupPresentation n2_presentation();

/// A homomorphism onto Sigma_n given by generator images.
struct SymHom {
  GroupPresentation source;
  int n = 0;
  std::vector<Permutation> images;

  Permutation evaluate(const GroupWord& w) const;
  bool respects_relators() const;
  /// Closure count for n <= 8; otherwise looks for an adjacent transposition and an n-cycle.
  bool surjective() const;
};

/// which = 1: a1, b1 -> (1,2) and a2, b2 -> (1,n,...,2).
/// which = 2: c -> (1,2) and a1, b1 -> (1,n,...,2). Requires n > 2.
SymHom build_theta(int which, int n);

/// Checks psi: relators to the identity braid and pi o psi = theta generator-wise.
Report verify_sym_witness(const SymHom& theta, const std::vector<BraidWord>& psi);

/// psi(a1) = psi(b1) = sigma_1, psi(a2) = psi(b2) = g, checked against theta_1.
Report witness_M1(int n);

/// epsilon-invariance of every A_{i,j} under conjugation by sigma_1 and g, the factorization
/// of psi(c^2 [a1,b1]) on sample pure braids, and the parity contradiction 2 eps(x) + 1 = 0.
Report parity_obstruction_M2(int n);

struct M2CyclicResult {
  int n = 0;
  bool has_bu_property = false;
  /// "criterion" when decided by n mod 4 alone, "homology" after the subgroup computation.
  std::string basis;
  std::vector<Permutation> lambdas;
  std::vector<GroupWord> lambda_words;
  GroupWord w;
  Report checks;
  std::size_t index = 0;
  int generators = 0;
  int relators = 0;
  int rank = 0;
  std::vector<long long> torsion;
  std::optional<ZnElement> theta_delta;
  std::optional<WitnessHom> witness;
};

/// Conjugators lambda_i with lambda_i (1,2) lambda_i^{-1} = (i, 2k+1+i), products read left to right.
Permutation lambda_permutation(int n, int i);
/// Shortest word (breadth-first, letters c, a1, b1 and inverses) whose theta_2 image conjugates
/// (1,2) to (i, 2k+1+i). Throws SearchError beyond max_length.
GroupWord lambda_preimage(const SymHom& theta2, int i, int max_length = 8);

/// The Z_n-restriction of the Sigma_n cover of N_2. Runs the subgroup computation for n = 6 and,
/// when allow_large is set, for larger n = 2 mod 4; throws UnsupportedError otherwise.
M2CyclicResult decide_M2_cyclic(int n, bool allow_large = false);

}  // namespace bu
