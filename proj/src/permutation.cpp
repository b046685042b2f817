#include "bu/permutation.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "bu/errors.hpp"

namespace bu {

Permutation::Permutation(int degree) : images_(static_cast<std::size_t>(std::max(degree, 0))) {
  if (degree < 0) throw InputError("permutation degree must be non-negative");
  for (int i = 0; i < degree; ++i) images_[i] = i;
}

Permutation Permutation::from_raw(std::vector<int> images0) {
  Permutation p;
  p.images_ = std::move(images0);
  return p;
}

Permutation Permutation::from_images(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  std::vector<int> raw(images.size());
  std::vector<bool> seen(images.size(), false);
  for (int i = 0; i < n; ++i) {
    const int v = images[i];
    if (v < 1 || v > n || seen[v - 1]) throw InputError("images do not form a bijection of {1..n}");
    seen[v - 1] = true;
    raw[i] = v - 1;
  }
  return from_raw(std::move(raw));
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Permutation result(degree);
  for (const auto& cycle : cycles) {
    std::vector<int> raw(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) raw[i] = i;
    std::vector<bool> used(static_cast<std::size_t>(degree), false);
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int a = cycle[k];
      if (a < 1 || a > degree || used[a - 1]) throw InputError("invalid cycle");
      used[a - 1] = true;
      raw[a - 1] = cycle[(k + 1) % cycle.size()] - 1;
    }
    result = result * from_raw(std::move(raw));
  }
  return result;
}

Permutation Permutation::transposition(int degree, int i, int j) {
  if (i == j) throw InputError("transposition needs distinct points");
  return from_cycles(degree, {{i, j}});
}

Permutation Permutation::cyclic_generator(int degree) {
  std::vector<int> raw(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) raw[i] = (i + degree - 1) % degree;
  return from_raw(std::move(raw));
}

Permutation Permutation::parse_cycles(int degree, const std::string& text) {
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw InputError("expected '(' in cycle notation: " + text);
    const auto close = text.find(')', pos);
    if (close == std::string::npos) throw InputError("unterminated cycle: " + text);
    std::string body = text.substr(pos + 1, close - pos - 1);
    std::replace(body.begin(), body.end(), ',', ' ');
    std::istringstream in(body);
    std::vector<int> cycle;
    for (int v; in >> v;) cycle.push_back(v);
    if (!in.eof()) throw InputError("non-integer point in cycle: " + text);
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    pos = close + 1;
    skip_ws();
  }
  return from_cycles(degree, cycles);
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1;
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<int>(i);
  return from_raw(std::move(inv));
}

Permutation Permutation::pow(long long e) const {
  Permutation base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1 : static_cast<unsigned long long>(e);
  Permutation result(degree());
  while (k > 0) {
    if (k & 1U) result = result * base;
    base = base * base;
    k >>= 1U;
  }
  return result;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw InputError("permutation degree mismatch");
  std::vector<int> raw(p.images_.size());
  for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = q.images_[p.images_[i]];
  return Permutation::from_raw(std::move(raw));
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == static_cast<int>(start)) continue;
    out += '(';
    std::size_t i = start;
    bool first = true;
    while (!seen[i]) {
      seen[i] = true;
      if (!first) out += ',';
      out += std::to_string(i + 1);
      first = false;
      i = static_cast<std::size_t>(images_[i]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::vector<Permutation> generated_group(const std::vector<Permutation>& generators, std::size_t limit) {
  if (generators.empty()) return {};
  const int n = generators.front().degree();
  std::vector<Permutation> elements{Permutation(n)};
  std::unordered_set<Permutation> seen{elements.front()};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : generators) {
      Permutation next = elements[head] * g;
      if (seen.insert(next).second) {
        if (elements.size() >= limit) throw UnsupportedError("group closure exceeds enumeration limit");
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

}  // namespace bu

std::size_t std::hash<bu::Permutation>::operator()(const bu::Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (int v : p.raw()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ULL;
  return h;
}
