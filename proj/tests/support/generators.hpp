#pragma once

#include <cstdlib>
#include <random>
#include <vector>

#include "bu/braid_word.hpp"
#include "bu/pure_braid.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline bu::BraidWord random_word(Rng& rng, int n, int length) {
  std::vector<int> letters;
  if (n >= 2)
    for (int i = 0; i < length; ++i) {
      const int g = uniform(rng, 1, n - 1);
      letters.push_back(uniform(rng, 0, 1) ? g : -g);
    }
  return bu::BraidWord(n, std::move(letters));
}

inline bu::BraidWord random_word_upto(Rng& rng, int n, int max_length) {
  return random_word(rng, n, uniform(rng, 0, max_length));
}

inline bu::BraidWord random_pure(Rng& rng, int n, int factors) {
  bu::BraidWord w(n);
  for (int f = 0; f < factors && n >= 2; ++f) {
    const int j = uniform(rng, 2, n);
    const int i = uniform(rng, 1, j - 1);
    const bu::BraidWord a = bu::a_gen(i, j, n).word();
    w = w * (uniform(rng, 0, 1) ? a : a.inverse());
  }
  return w;
}

/// A word equal to w in B_n, produced by random applications of the defining relations.
inline bu::BraidWord relation_variant(Rng& rng, const bu::BraidWord& w, int moves) {
  const int n = w.strands();
  std::vector<int> l = w.letters();
  for (int m = 0; m < moves; ++m) {
    const int kind = uniform(rng, 0, 3);
    if (kind == 0 && n >= 2) {
      const int g = uniform(rng, 1, n - 1);
      const auto pos = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(l.size())));
      const int s = uniform(rng, 0, 1) ? g : -g;
      l.insert(l.begin() + static_cast<long>(pos), {s, -s});
    } else if (kind == 1 && l.size() >= 2) {
      const auto p = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(l.size()) - 2));
      if (std::abs(std::abs(l[p]) - std::abs(l[p + 1])) >= 2) std::swap(l[p], l[p + 1]);
    } else if (kind == 2 && l.size() >= 3) {
      const auto p = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(l.size()) - 3));
      const int a = l[p], b = l[p + 1], c = l[p + 2];
      if (a == c && std::abs(std::abs(a) - std::abs(b)) == 1 && (a > 0) == (b > 0)) {
        l[p] = b;
        l[p + 1] = a;
        l[p + 2] = b;
      }
    } else if (kind == 3 && l.size() >= 2) {
      const auto p = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(l.size()) - 2));
      if (l[p] == -l[p + 1]) l.erase(l.begin() + static_cast<long>(p), l.begin() + static_cast<long>(p) + 2);
    }
  }
  return bu::BraidWord(n, std::move(l));
}

}  // namespace gen
