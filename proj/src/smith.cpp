#include "bu/smith.hpp"

#include <cstdlib>
#include <utility>

#include "bu/errors.hpp"

namespace bu {
namespace {

struct Reducer {
  IntMatrix& a;
  IntMatrix& v;
  IntMatrix& vinv;
  std::size_t rows;
  std::size_t cols;

  void swap_rows(std::size_t i, std::size_t j) { std::swap(a[i], a[j]); }

  void swap_cols(std::size_t i, std::size_t j) {
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : v) std::swap(row[i], row[j]);
    std::swap(vinv[i], vinv[j]);
  }

  // row i -= q * row j
  void row_sub(std::size_t i, std::size_t j, const BigInt& q) {
    for (std::size_t c = 0; c < cols; ++c)
      if (!a[j][c].is_zero()) a[i][c] -= q * a[j][c];
  }

  // col i -= q * col j, in A and V; V^{-1} row j += q * row i
  void col_sub(std::size_t i, std::size_t j, const BigInt& q) {
    for (std::size_t r = 0; r < rows; ++r)
      if (!a[r][j].is_zero()) a[r][i] -= q * a[r][j];
    for (std::size_t r = 0; r < cols; ++r)
      if (!v[r][j].is_zero()) v[r][i] -= q * v[r][j];
    for (std::size_t c = 0; c < cols; ++c)
      if (!vinv[i][c].is_zero()) vinv[j][c] += q * vinv[i][c];
  }

  void negate_col(std::size_t j) {
    for (std::size_t r = 0; r < rows; ++r) a[r][j] = -a[r][j];
    for (std::size_t r = 0; r < cols; ++r) v[r][j] = -v[r][j];
    for (auto& x : vinv[j]) x = -x;
  }

  bool find_pivot(std::size_t t, std::size_t& pr, std::size_t& pc) const {
    bool found = false;
    BigInt best;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c) {
        if (a[r][c].is_zero()) continue;
        BigInt v = abs(a[r][c]);
        if (!found || v < best) {
          found = true;
          best = v;
          pr = r;
          pc = c;
          if (best == 1) return true;
        }
      }
    return found;
  }

  // Clears row t and column t outside the pivot; returns false if a remainder was left.
  bool clear_cross(std::size_t t) {
    bool clean = true;
    for (std::size_t r = t + 1; r < rows; ++r) {
      if (a[r][t].is_zero()) continue;
      BigInt q = a[r][t] / a[t][t];
      row_sub(r, t, q);
      if (!a[r][t].is_zero()) clean = false;
    }
    for (std::size_t c = t + 1; c < cols; ++c) {
      if (a[t][c].is_zero()) continue;
      BigInt q = a[t][c] / a[t][t];
      col_sub(c, t, q);
      if (!a[t][c].is_zero()) clean = false;
    }
    return clean;
  }
};

}  // namespace

SmithForm smith_normal_form(IntMatrix a, std::size_t cols) {
  const std::size_t rows = a.size();
  for (const auto& row : a)
    if (row.size() != cols) throw InputError("ragged matrix");
  SmithForm out;
  out.rows = rows;
  out.cols = cols;
  out.v.assign(cols, std::vector<BigInt>(cols));
  out.v_inverse.assign(cols, std::vector<BigInt>(cols));
  for (std::size_t i = 0; i < cols; ++i) out.v[i][i] = out.v_inverse[i][i] = 1;

  Reducer red{a, out.v, out.v_inverse, rows, cols};
  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    std::size_t pr = 0, pc = 0;
    if (!red.find_pivot(t, pr, pc)) break;
    for (;;) {
      if (pr != t) red.swap_rows(pr, t);
      if (pc != t) red.swap_cols(pc, t);
      if (!red.clear_cross(t)) {
        red.find_pivot(t, pr, pc);
        continue;
      }
      bool divisible = true;
      for (std::size_t r = t + 1; r < rows && divisible; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (!a[r][c].is_zero() && a[r][c] % a[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[r][k];
            divisible = false;
            break;
          }
      if (divisible) break;
      red.find_pivot(t, pr, pc);
    }
    if (a[t][t] < 0) red.negate_col(t);
    out.diagonal.push_back(a[t][t]);
  }
  return out;
}

IntMatrix exponent_matrix(const GroupPresentation& p) {
  p.validate();
  IntMatrix m(p.relators.size(), std::vector<BigInt>(static_cast<std::size_t>(p.generators)));
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (int e : p.relators[r]) m[r][static_cast<std::size_t>(std::abs(e) - 1)] += e > 0 ? 1 : -1;
  return m;
}

Abelianization abelianization(const GroupPresentation& p) {
  const auto cols = static_cast<std::size_t>(p.generators);
  SmithForm s = smith_normal_form(exponent_matrix(p), cols);
  Abelianization ab;
  ab.rank = static_cast<int>(cols - s.diagonal.size());
  for (std::size_t t = 0; t < s.diagonal.size(); ++t)
    if (s.diagonal[t] > 1) {
      ab.torsion.push_back(s.diagonal[t]);
      ab.torsion_generators.push_back(s.v_inverse[t]);
    }
  for (std::size_t t = s.diagonal.size(); t < cols; ++t) ab.free_generators.push_back(s.v_inverse[t]);
  return ab;
}

std::vector<long long> Abelianization::torsion_values() const {
  std::vector<long long> out;
  for (const auto& t : torsion) out.push_back(t.convert_to<long long>());
  return out;
}

ZnElement evaluate_vector(const std::vector<BigInt>& coefficients, const std::vector<ZnElement>& images, int n) {
  if (coefficients.size() != images.size()) throw InputError("coefficient and image counts differ");
  BigInt sum = 0;
  for (std::size_t i = 0; i < coefficients.size(); ++i) sum += coefficients[i] * images[i].value();
  BigInt r = sum % n;
  if (r < 0) r += n;
  return ZnElement(r.convert_to<long long>(), n);
}

std::optional<std::vector<BigInt>> integer_lift(const GroupPresentation& p, const std::vector<ZnElement>& theta,
                                                int n) {
  const auto cols = static_cast<std::size_t>(p.generators);
  if (theta.size() != cols) throw InputError("expected one image per generator");
  const SmithForm s = smith_normal_form(exponent_matrix(p), cols);
  // Values of the lift on the new basis: zero on relation directions, residues on free ones.
  std::vector<BigInt> on_basis(cols);
  for (std::size_t t = 0; t < cols; ++t) {
    const ZnElement value = evaluate_vector(s.v_inverse[t], theta, n);
    if (t < s.diagonal.size()) {
      if (!value.is_zero()) return std::nullopt;
    } else {
      on_basis[t] = value.value();
    }
  }
  std::vector<BigInt> lift(cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t t = s.diagonal.size(); t < cols; ++t) lift[j] += s.v[j][t] * on_basis[t];
  return lift;
}

}  // namespace bu
