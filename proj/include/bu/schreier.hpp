#pragma once

#include <cstddef>
#include <vector>

#include "bu/permutation.hpp"
#include "bu/presentation.hpp"

namespace bu {

/// A homomorphism from a presented group to a permutation group, by generator images.
struct PermutationHom {
  std::vector<Permutation> images;

  Permutation evaluate(const GroupWord& w, int degree) const;
};

/// Checks that every relator maps to the identity.
bool respects_relators(const GroupPresentation& p, const PermutationHom& h);

struct SubgroupPresentation {
  /// Coset representatives, shortlex-least words; entry 0 is the empty word.
  std::vector<GroupWord> transversal;
  /// The presentation of the preimage of K.
  GroupPresentation presentation;
  /// Each new generator as a word in the original generators.
  std::vector<GroupWord> generator_words;

  std::size_t index() const { return transversal.size(); }
  int deficiency() const {
    return presentation.generators - static_cast<int>(presentation.relators.size());
  }
};

/// Reidemeister-Schreier presentation of H^{-1}(K), where K is the subgroup generated by k_generators.
///
/// Throws UnsupportedError if the image group exceeds image_limit elements.
SubgroupPresentation subgroup_presentation(const GroupPresentation& p, const PermutationHom& h,
                                           const std::vector<Permutation>& k_generators,
                                           std::size_t image_limit = 100000);

}  // namespace bu
