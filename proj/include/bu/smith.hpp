#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "bu/presentation.hpp"

namespace bu {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

/// Smith normal form D = U A V of an integer matrix.
///
/// Row t of V^{-1} expresses the t-th new basis vector of Z^cols in the
/// original coordinates; row j of V expresses original vector j in the new basis.
struct SmithForm {
  std::size_t rows = 0;
  std::size_t cols = 0;
  /// Nonzero diagonal entries d_1 | d_2 | ..., all positive.
  std::vector<BigInt> diagonal;
  IntMatrix v;
  IntMatrix v_inverse;
};

SmithForm smith_normal_form(IntMatrix a, std::size_t cols);

/// Relator exponent matrix: one row per relator, one column per generator.
IntMatrix exponent_matrix(const GroupPresentation& p);

struct Abelianization {
  int rank = 0;
  /// Invariant factors greater than 1.
  std::vector<BigInt> torsion;
  /// For each torsion factor, a generator of that cyclic summand as exponents over the original generators.
  std::vector<std::vector<BigInt>> torsion_generators;
  std::vector<std::vector<BigInt>> free_generators;

  std::vector<long long> torsion_values() const;
};

Abelianization abelianization(const GroupPresentation& p);

/// Sum of coefficient_i * images_i modulo n.
ZnElement evaluate_vector(const std::vector<BigInt>& coefficients, const std::vector<ZnElement>& images, int n);

/// An integer-valued homomorphism phi with phi = theta mod n on every generator
/// and phi(r) = 0 for every relator, or nullopt if none exists.
std::optional<std::vector<BigInt>> integer_lift(const GroupPresentation& p, const std::vector<ZnElement>& theta,
                                                int n);

}  // namespace bu
