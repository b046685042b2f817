#include "bu/presentation.hpp"

#include <cstdlib>
#include <numeric>

#include "bu/errors.hpp"

namespace bu {

GroupWord inverse_word(const GroupWord& w) {
  GroupWord out(w.rbegin(), w.rend());
  for (int& e : out) e = -e;
  return out;
}

GroupWord free_reduce(const GroupWord& w) {
  GroupWord out;
  out.reserve(w.size());
  for (int e : w) {
    if (!out.empty() && out.back() == -e)
      out.pop_back();
    else
      out.push_back(e);
  }
  return out;
}

void GroupPresentation::validate() const {
  if (generators < 0) throw InputError("negative generator count");
  for (const auto& r : relators)
    for (int e : r)
      if (e == 0 || std::abs(e) > generators) throw InputError("relator letter out of range");
  if (!names.empty() && static_cast<int>(names.size()) != generators)
    throw InputError("generator name list has the wrong length");
  if (!marks.empty() && static_cast<int>(marks.size()) != generators)
    throw InputError("orientation mark list has the wrong length");
}

std::string GroupPresentation::name(int generator) const {
  if (!names.empty()) return names.at(static_cast<std::size_t>(generator - 1));
  return "x" + std::to_string(generator);
}

std::optional<int> GroupPresentation::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i) + 1;
  return std::nullopt;
}

std::string to_string(SurfaceCase c) {
  switch (c) {
    case SurfaceCase::OrientableI:
      return "orientable";
    case SurfaceCase::NonOrientableOddII:
      return "nonorientable-odd";
    case SurfaceCase::NonOrientableEvenIII:
      return "nonorientable-even";
  }
  return "?";
}

SurfaceCase parse_surface_case(const std::string& text) {
  if (text == "orientable" || text == "I") return SurfaceCase::OrientableI;
  if (text == "nonorientable-odd" || text == "II") return SurfaceCase::NonOrientableOddII;
  if (text == "nonorientable-even" || text == "III") return SurfaceCase::NonOrientableEvenIII;
  throw InputError("unknown surface case '" + text + "'");
}

SurfacePresentation::SurfacePresentation(SurfaceCase c, int m) : case_(c), m_(m) {
  if (m < 0) throw InputError("handle count must be non-negative");
  if (c == SurfaceCase::NonOrientableOddII) names_.push_back("c");
  if (c == SurfaceCase::NonOrientableEvenIII) {
    names_.push_back("u");
    names_.push_back("v");
  }
  for (int i = 1; i <= 2 * m; ++i) names_.push_back("a" + std::to_string(i));
}

int SurfacePresentation::generator_count() const { return static_cast<int>(names_.size()); }

std::optional<int> SurfacePresentation::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i) + 1;
  return std::nullopt;
}

std::optional<int> SurfacePresentation::delta_index() const {
  if (case_ == SurfaceCase::OrientableI) return std::nullopt;
  return 1;
}

std::optional<int> SurfacePresentation::v_index() const {
  if (case_ == SurfaceCase::NonOrientableEvenIII) return 2;
  return std::nullopt;
}

int SurfacePresentation::a_index(int i) const {
  if (i < 1 || i > 2 * m_) throw InputError("a_" + std::to_string(i) + " out of range");
  const int offset = case_ == SurfaceCase::OrientableI ? 0 : (case_ == SurfaceCase::NonOrientableOddII ? 1 : 2);
  return offset + i;
}

std::vector<GroupWord> SurfacePresentation::relator_blocks() const {
  std::vector<GroupWord> blocks;
  if (case_ == SurfaceCase::NonOrientableOddII) blocks.push_back({1, 1});
  if (case_ == SurfaceCase::NonOrientableEvenIII) blocks.push_back({1, 2, 1, -2});
  for (int i = 1; i <= m_; ++i) {
    const int x = a_index(2 * i - 1);
    const int y = a_index(2 * i);
    blocks.push_back({x, y, -x, -y});
  }
  return blocks;
}

GroupWord SurfacePresentation::relator() const {
  GroupWord r;
  for (const auto& b : relator_blocks()) r.insert(r.end(), b.begin(), b.end());
  return r;
}

int SurfacePresentation::euler_characteristic() const {
  switch (case_) {
    case SurfaceCase::OrientableI:
      return 2 - 2 * m_;
    case SurfaceCase::NonOrientableOddII:
      return 2 - (2 * m_ + 1);
    case SurfaceCase::NonOrientableEvenIII:
      return 2 - (2 * m_ + 2);
  }
  return 0;
}

std::vector<int> SurfacePresentation::default_marks() const {
  std::vector<int> marks(names_.size(), 1);
  if (case_ == SurfaceCase::NonOrientableOddII) marks[0] = -1;
  if (case_ == SurfaceCase::NonOrientableEvenIII) marks[1] = -1;
  return marks;
}

GroupPresentation SurfacePresentation::to_group() const {
  GroupPresentation p;
  p.generators = generator_count();
  p.relators = {relator()};
  p.names = names_;
  p.marks = default_marks();
  return p;
}

ZnElement CyclicHom::evaluate(const GroupWord& w) const {
  ZnElement sum(0, n);
  for (int e : w) sum = sum + (e > 0 ? image(e) : -image(-e));
  return sum;
}

CyclicHom make_hom(SurfacePresentation source, int n, const std::vector<long long>& residues) {
  if (n < 1) throw InputError("modulus must be positive");
  if (static_cast<int>(residues.size()) != source.generator_count())
    throw InputError("expected " + std::to_string(source.generator_count()) + " generator images, got " +
                     std::to_string(residues.size()));
  std::vector<ZnElement> images;
  images.reserve(residues.size());
  for (long long r : residues) images.emplace_back(r, n);
  return CyclicHom{std::move(source), n, std::move(images)};
}

Report validate_hom(const CyclicHom& theta) {
  Report report;
  const ZnElement rel = theta.evaluate(theta.source.relator());
  CheckRecord r;
  r.relation = "relator";
  r.lhs_word = rel.to_string();
  r.rhs_word = ZnElement(0, theta.n).to_string();
  r.pass = rel.is_zero();
  if (!r.pass) r.detail = "relator image is " + rel.to_string() + ", not 0";
  report.add(r);

  int g = theta.n;
  for (const auto& x : theta.images) g = std::gcd(g, x.value());
  CheckRecord s;
  s.relation = "surjective";
  s.lhs_word = "gcd=" + std::to_string(g);
  s.rhs_word = "gcd=1";
  s.pass = g == 1;
  if (!s.pass) s.detail = "images generate a proper subgroup of Z_" + std::to_string(theta.n);
  report.add(s);
  return report;
}

bool is_valid_hom(const CyclicHom& theta) { return validate_hom(theta).passed(); }

ZnElement theta_of_delta(const CyclicHom& theta) {
  const auto d = theta.source.delta_index();
  if (!d) return ZnElement(0, theta.n);
  return theta.image(*d);
}

int orientation_character(const GroupPresentation& p, const GroupWord& w) {
  if (static_cast<int>(p.marks.size()) != p.generators) throw InputError("presentation has unmarked generators");
  int sign = 1;
  for (int e : w) {
    const int g = std::abs(e);
    if (g < 1 || g > p.generators) throw InputError("letter out of range");
    const int mark = p.marks[static_cast<std::size_t>(g - 1)];
    if (mark != 1 && mark != -1) throw InputError("generator " + p.name(g) + " is unmarked");
    sign *= mark;
  }
  return sign;
}

int orientation_character(const SurfacePresentation& p, const GroupWord& w) {
  return orientation_character(p.to_group(), w);
}

}  // namespace bu
