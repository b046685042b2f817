#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace bu {

/// A permutation of {1,...,n}.
///
/// Products are read from left to right: (p * q)(i) = q(p(i)), so that the
/// permutation of a braid product is the product of the permutations.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);  // identity

  /// Images given 1-based: images[i-1] = p(i). Throws InputError if not a bijection.
  static Permutation from_images(const std::vector<int>& images);
  /// Product of the given cycles, each written in 1-based one-line cycle notation.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);
  static Permutation transposition(int degree, int i, int j);
  /// The n-cycle (1, n, n-1, ..., 2), i.e. i -> i-1 (mod n).
  static Permutation cyclic_generator(int degree);
  /// Parses "(1,4,3,2)(5,6)" or "()" for the identity.
  static Permutation parse_cycles(int degree, const std::string& text);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1] + 1; }
  std::vector<int> images() const;  // 1-based

  bool is_identity() const;
  Permutation inverse() const;
  Permutation pow(long long e) const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  /// One-line cycle notation with 1-based points; identity is "()".
  std::string to_cycle_string() const;

  // 0-based storage, exposed for the normal-form routines.
  const std::vector<int>& raw() const { return images_; }
  static Permutation from_raw(std::vector<int> images0);

 private:
  std::vector<int> images_;
};

/// Closure of a set of generators, enumerated breadth-first from the identity.
std::vector<Permutation> generated_group(const std::vector<Permutation>& generators,
                                         std::size_t limit = 1'000'000);

}  // namespace bu

template <>
struct std::hash<bu::Permutation> {
  std::size_t operator()(const bu::Permutation& p) const noexcept;
};
