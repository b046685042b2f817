#include "bu/schreier.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <unordered_set>

#include "bu/errors.hpp"

namespace bu {

Permutation PermutationHom::evaluate(const GroupWord& w, int degree) const {
  Permutation p(degree);
  for (int e : w) {
    const auto& img = images.at(static_cast<std::size_t>(std::abs(e) - 1));
    p = p * (e > 0 ? img : img.inverse());
  }
  return p;
}

bool respects_relators(const GroupPresentation& p, const PermutationHom& h) {
  if (static_cast<int>(h.images.size()) != p.generators) return false;
  const int degree = h.images.empty() ? 1 : h.images.front().degree();
  return std::all_of(p.relators.begin(), p.relators.end(),
                     [&](const GroupWord& r) { return h.evaluate(r, degree).is_identity(); });
}

SubgroupPresentation subgroup_presentation(const GroupPresentation& p, const PermutationHom& h,
                                           const std::vector<Permutation>& k_generators, std::size_t image_limit) {
  p.validate();
  if (static_cast<int>(h.images.size()) != p.generators)
    throw InputError("homomorphism must give one image per generator");
  if (h.images.empty()) throw InputError("presentation has no generators");
  const int degree = h.images.front().degree();
  for (const auto& g : h.images)
    if (g.degree() != degree) throw InputError("generator images have mixed degrees");
  if (!respects_relators(p, h)) throw InputError("homomorphism does not respect the relators");

  const auto image = generated_group(h.images, image_limit);
  const std::unordered_set<Permutation> image_set(image.begin(), image.end());
  for (const auto& k : k_generators)
    if (!image_set.contains(k)) throw InputError("subgroup generator lies outside the image");
  std::vector<Permutation> k_elements =
      k_generators.empty() ? std::vector<Permutation>{Permutation(degree)} : generated_group(k_generators, image_limit);

  auto coset_key = [&](const Permutation& x) {
    Permutation best = k_elements.front() * x;
    for (const auto& k : k_elements) best = std::min(best, k * x);
    return best;
  };

  std::vector<int> letters;
  for (int g = 1; g <= p.generators; ++g) {
    letters.push_back(g);
    letters.push_back(-g);
  }
  auto image_of = [&](int e) { return e > 0 ? h.images[e - 1] : h.images[-e - 1].inverse(); };

  SubgroupPresentation out;
  std::vector<Permutation> rep_elements;
  std::map<Permutation, std::size_t> index_of;
  // action[c][g-1] = coset of (coset c) * x_g
  std::vector<std::vector<std::size_t>> action;

  out.transversal.push_back({});
  rep_elements.push_back(Permutation(degree));
  index_of.emplace(coset_key(rep_elements.front()), 0);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t c = queue.front();
    queue.pop_front();
    for (int e : letters) {
      Permutation next = rep_elements[c] * image_of(e);
      auto key = coset_key(next);
      if (index_of.contains(key)) continue;
      index_of.emplace(std::move(key), out.transversal.size());
      GroupWord w = out.transversal[c];
      w.push_back(e);
      out.transversal.push_back(std::move(w));
      rep_elements.push_back(std::move(next));
      queue.push_back(out.transversal.size() - 1);
    }
  }

  const std::size_t index = out.transversal.size();
  action.assign(index, std::vector<std::size_t>(static_cast<std::size_t>(p.generators)));
  for (std::size_t c = 0; c < index; ++c)
    for (int g = 1; g <= p.generators; ++g)
      action[c][g - 1] = index_of.at(coset_key(rep_elements[c] * h.images[g - 1]));

  // Schreier generator s_{c,g}; 0 marks a tree edge.
  std::vector<std::vector<int>> schreier(index, std::vector<int>(static_cast<std::size_t>(p.generators), 0));
  auto& q = out.presentation;
  for (std::size_t c = 0; c < index; ++c)
    for (int g = 1; g <= p.generators; ++g) {
      GroupWord w = out.transversal[c];
      w.push_back(g);
      const GroupWord back = inverse_word(out.transversal[action[c][g - 1]]);
      w.insert(w.end(), back.begin(), back.end());
      w = free_reduce(w);
      if (w.empty()) continue;
      schreier[c][g - 1] = ++q.generators;
      out.generator_words.push_back(w);
      if (!p.names.empty()) q.names.push_back(p.name(g) + "@" + std::to_string(c));
      if (!p.marks.empty()) q.marks.push_back(orientation_character(p, w));
    }

  for (std::size_t c0 = 0; c0 < index; ++c0)
    for (const auto& r : p.relators) {
      GroupWord rewritten;
      std::size_t c = c0;
      for (int e : r) {
        const int g = std::abs(e);
        if (e > 0) {
          if (int s = schreier[c][g - 1]) rewritten.push_back(s);
          c = action[c][g - 1];
        } else {
          const std::size_t d = index_of.at(coset_key(rep_elements[c] * h.images[g - 1].inverse()));
          if (int s = schreier[d][g - 1]) rewritten.push_back(-s);
          c = d;
        }
      }
      if (c != c0) throw DomainError("relator does not close up in the coset graph");
      q.relators.push_back(free_reduce(rewritten));
    }
  return out;
}

}  // namespace bu
