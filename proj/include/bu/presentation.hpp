#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bu/cyclic_braid.hpp"
#include "bu/report.hpp"

namespace bu {

/// A word in a free group: letter +k is generator k (1-based), -k its inverse.
using GroupWord = std::vector<int>;

GroupWord inverse_word(const GroupWord& w);
GroupWord free_reduce(const GroupWord& w);

/// A finite presentation <x_1..x_g | r_1..r_k>.
///
/// Optional generator names, and optional orientation marks (+1 preserving,
/// -1 reversing) used by orientation_character.
struct GroupPresentation {
  int generators = 0;
  std::vector<GroupWord> relators;
  std::vector<std::string> names;
  std::vector<int> marks;

  /// Throws InputError if any relator letter is out of range.
  void validate() const;
  std::string name(int generator) const;
  /// 1-based generator index by name, or nullopt.
  std::optional<int> index_of(const std::string& name) const;
};

enum class SurfaceCase { OrientableI, NonOrientableOddII, NonOrientableEvenIII };

std::string to_string(SurfaceCase c);
SurfaceCase parse_surface_case(const std::string& text);

/// The fundamental group of a closed surface in one of three standard forms:
///   I   <a_1..a_{2m} | [a_1,a_2]...[a_{2m-1},a_{2m}]>                 (orientable, genus m)
///   II  <c, a_1..a_{2m} | c^2 [a_1,a_2]...>                            (non-orientable genus 2m+1)
///   III <u, v, a_1..a_{2m} | u v u v^{-1} [a_1,a_2]...>               (non-orientable genus 2m+2)
/// The distinguished element is 1, c or u respectively.
class SurfacePresentation {
 public:
  SurfacePresentation(SurfaceCase c, int m);

  SurfaceCase surface_case() const { return case_; }
  int handles() const { return m_; }
  bool orientable() const { return case_ == SurfaceCase::OrientableI; }
  int generator_count() const;
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(const std::string& name) const;
  /// 1-based index of c or u; nullopt in the orientable case.
  std::optional<int> delta_index() const;
  /// 1-based index of v in case III.
  std::optional<int> v_index() const;
  /// 1-based index of a_i.
  int a_index(int i) const;

  GroupWord relator() const;
  /// The relator split into its natural factors: the c^2 or u v u v^{-1} block, then each commutator.
  std::vector<GroupWord> relator_blocks() const;
  int euler_characteristic() const;
  /// Default orientation marks: c and v reverse orientation, everything else preserves it.
  std::vector<int> default_marks() const;
  GroupPresentation to_group() const;

  friend bool operator==(const SurfacePresentation& a, const SurfacePresentation& b) {
    return a.case_ == b.case_ && a.m_ == b.m_;
  }

 private:
  SurfaceCase case_;
  int m_;
  std::vector<std::string> names_;
};

/// A homomorphism theta: pi_1(surface) -> Z_n given by generator images.
struct CyclicHom {
  SurfacePresentation source;
  int n;
  std::vector<ZnElement> images;

  ZnElement image(int generator) const { return images.at(static_cast<std::size_t>(generator - 1)); }
  ZnElement evaluate(const GroupWord& w) const;
};

/// Builds a CyclicHom from residues listed in generator order.
CyclicHom make_hom(SurfacePresentation source, int n, const std::vector<long long>& residues);

/// Checks that the relator maps to 0 and that the images generate Z_n.
Report validate_hom(const CyclicHom& theta);
bool is_valid_hom(const CyclicHom& theta);

ZnElement theta_of_delta(const CyclicHom& theta);

/// Product of marks over the letters of w. Throws InputError on a missing mark.
int orientation_character(const GroupPresentation& p, const GroupWord& w);
int orientation_character(const SurfacePresentation& p, const GroupWord& w);

}  // namespace bu
