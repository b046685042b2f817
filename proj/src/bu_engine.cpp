#include "bu/bu_engine.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <json.hpp>
#include <sstream>

#include "bu/errors.hpp"
#include "bu/pure_braid.hpp"
#include "bu/smith.hpp"

namespace bu {
namespace {

std::string power_label(const std::string& base, long long e) {
  if (e == 0) return "1";
  if (e == 1) return base;
  return base + "^" + std::to_string(e);
}

std::string join_labels(const std::string& a, const std::string& b) {
  if (a == "1") return b;
  if (b == "1") return a;
  return a + " " + b;
}

struct ImageBuilder {
  int n;
  CyclicBraid g;
  WitnessHom& psi;

  void set(int generator, CyclicBraid image, std::string label) {
    psi.images[static_cast<std::size_t>(generator - 1)] = std::move(image);
    psi.image_labels[static_cast<std::size_t>(generator - 1)] = std::move(label);
  }
  void set_g_power(int generator, long long e) { set(generator, g.pow(e), power_label("g", e)); }
};

WitnessHom blank_witness(const SurfacePresentation& source, int n, std::string rule) {
  WitnessHom psi;
  psi.source = source;
  psi.presentation = source.to_group();
  psi.n = n;
  psi.images.assign(static_cast<std::size_t>(source.generator_count()), CyclicBraid(BraidWord(n)));
  psi.image_labels.assign(static_cast<std::size_t>(source.generator_count()), "1");
  psi.rule = std::move(rule);
  return psi;
}

long long full_twist_epsilon(int n) {
  static std::mutex mu;
  static std::map<int, long long> memo;
  std::lock_guard lock(mu);
  auto it = memo.find(n);
  if (it == memo.end()) it = memo.emplace(n, epsilon(full_twist(n))).first;
  return it->second;
}

std::string word_key(const BraidWord& w) {
  std::string key = std::to_string(w.strands()) + ":";
  for (int e : w.letters()) key += std::to_string(e) + ",";
  return key;
}

bool alpha_beta_ok(int k, const CyclicBraid& alpha, const CyclicBraid& beta) {
  static std::mutex mu;
  static std::set<std::string> verified;
  const std::string key = std::to_string(k) + "#" + word_key(alpha.word()) + "/" + word_key(beta.word());
  {
    std::lock_guard lock(mu);
    if (verified.count(key)) return true;
  }
  if (!check_alpha_beta(k, alpha, beta).passed()) return false;
  std::lock_guard lock(mu);
  verified.insert(key);
  return true;
}

std::string relator_text(const GroupPresentation& p, const GroupWord& r) {
  std::string out;
  for (int e : r) {
    if (!out.empty()) out += " ";
    out += p.name(std::abs(e));
    if (e < 0) out += "^-1";
  }
  return out.empty() ? "1" : out;
}

std::vector<std::vector<GroupWord>> relator_pieces(const WitnessHom& psi) {
  std::vector<std::vector<GroupWord>> pieces;
  for (std::size_t r = 0; r < psi.presentation.relators.size(); ++r) {
    if (psi.source && r == 0 && psi.presentation.relators.size() == 1)
      pieces.push_back(psi.source->relator_blocks());
    else
      pieces.push_back({psi.presentation.relators[r]});
  }
  return pieces;
}

// Registry of traced alpha, beta pairs.
std::mutex registry_mutex;
std::map<int, AlphaBeta>& pair_memo() {
  static std::map<int, AlphaBeta> memo;
  return memo;
}

std::optional<AlphaBeta> load_registered(int k, const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    const auto doc = nlohmann::json::parse(in);
    const auto& entry = doc.at("pairs").at(std::to_string(k));
    AlphaBeta ab{CyclicBraid(BraidWord::parse(entry.at("alpha").get<std::string>())),
                 CyclicBraid(BraidWord::parse(entry.at("beta").get<std::string>())), k,
                 entry.value("resolution", 0), entry.value("angle", 0.0)};
    if (!check_alpha_beta(k, ab.alpha, ab.beta).passed()) return std::nullopt;
    return ab;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void store_registered(const AlphaBeta& ab, const std::string& path) {
  nlohmann::json doc = {{"schema", 1}, {"pairs", nlohmann::json::object()}};
  {
    std::ifstream in(path);
    if (in) {
      try {
        auto existing = nlohmann::json::parse(in);
        if (existing.is_object() && existing.contains("pairs") && existing["pairs"].is_object()) doc = existing;
      } catch (const std::exception&) {
      }
    }
  }
  doc["pairs"][std::to_string(ab.k)] = {{"alpha", ab.alpha.word().to_string()},
                                        {"beta", ab.beta.word().to_string()},
                                        {"resolution", ab.resolution},
                                        {"angle", ab.angle}};
  std::ofstream out(path);
  if (out) out << doc.dump(2) << "\n";
}

}  // namespace

BraidWord WitnessHom::evaluate(const GroupWord& w) const {
  std::vector<int> letters;
  for (int e : w) {
    const BraidWord& img = image(std::abs(e)).word();
    if (e > 0) {
      letters.insert(letters.end(), img.letters().begin(), img.letters().end());
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) letters.push_back(-*it);
    }
  }
  return BraidWord(n, std::move(letters));
}

bool bu_criterion(const CyclicHom& theta) {
  return theta.n % 4 == 2 && !theta.source.orientable() && !theta_of_delta(theta).is_zero();
}

WitnessHom witness_prop1(const CyclicHom& theta) {
  if (!theta_of_delta(theta).is_zero()) throw DomainError("witness_prop1 needs theta(delta) = 0");
  const auto& src = theta.source;
  const int n = theta.n;
  WitnessHom psi = blank_witness(src, n, "prop1");
  ImageBuilder b{n, CyclicBraid::generator(n), psi};
  for (int i = 1; i <= 2 * src.handles(); ++i) b.set_g_power(src.a_index(i), theta.image(src.a_index(i)).value());
  if (auto v = src.v_index()) b.set_g_power(*v, theta.image(*v).value());
  return psi;
}

WitnessHom witness_prop2(const CyclicHom& theta, const CyclicBraid& alpha, const CyclicBraid& beta) {
  const int n = theta.n;
  if (n % 4 != 0) throw DomainError("witness_prop2 needs n = 4k");
  const int k = n / 4;
  const auto& src = theta.source;
  if (src.orientable()) throw DomainError("witness_prop2 needs a non-orientable source");
  if (theta_of_delta(theta) != ZnElement(2 * k, n)) throw DomainError("witness_prop2 needs theta(delta) = 2k");
  if (!alpha_beta_ok(k, alpha, beta))
    throw InputError("alpha, beta must satisfy pi2(alpha) = 2k, pi2(beta) = 1 and alpha beta alpha beta^-1 = 1");

  WitnessHom psi = blank_witness(src, n, "prop2");
  psi.basis_tag = std::to_string(std::hash<std::string>{}(word_key(alpha.word()) + "/" + word_key(beta.word())));
  ImageBuilder b{n, CyclicBraid::generator(n), psi};
  const int delta = *src.delta_index();
  const int z = src.v_index() ? theta.image(*src.v_index()).value() : 0;
  if (auto v = src.v_index()) b.set(*v, beta.pow(z), power_label("beta", z));

  if (z % 2 == 1) {
    b.set(delta, alpha, "alpha");
    for (int i = 1; i <= 2 * src.handles(); ++i) b.set_g_power(src.a_index(i), theta.image(src.a_index(i)).value());
    return psi;
  }
  int j = 0;
  for (int i = 1; i <= 2 * src.handles() && j == 0; ++i)
    if (theta.image(src.a_index(i)).value() % 2 == 1) j = i;
  if (j == 0) throw DomainError("no a_j with odd image; theta is not surjective");
  const int l = theta.image(src.a_index(j)).value();
  const int jhat = j % 2 == 1 ? j + 1 : j - 1;
  const int b_jhat = theta.image(src.a_index(jhat)).value();
  const int sign = j % 2 == 0 ? 1 : -1;
  b.set(delta, alpha.pow(sign), power_label("alpha", sign));
  b.set(src.a_index(j), beta.pow(l), power_label("beta", l));
  b.set(src.a_index(jhat), alpha.inverse() * beta.pow(b_jhat + 2 * k),
        join_labels("alpha^-1", power_label("beta", b_jhat + 2 * k)));
  for (int i = 1; i <= 2 * src.handles(); ++i)
    if (i != j && i != jhat) b.set_g_power(src.a_index(i), theta.image(src.a_index(i)).value());
  return psi;
}

ParityObstruction obstruction_certificate(const CyclicHom& theta) {
  const int n = theta.n;
  if (n % 4 != 2) throw DomainError("obstruction needs n = 4k+2");
  if (theta.source.orientable()) throw DomainError("obstruction needs a non-orientable source");
  const int k = (n - 2) / 4;
  const ZnElement td = theta_of_delta(theta);
  if (td != ZnElement(2 * k + 1, n)) throw DomainError("obstruction needs theta(delta) = 2k+1");
  ParityObstruction ob;
  ob.n = n;
  ob.k = k;
  ob.theta_delta = td;
  ob.full_twist_eps = full_twist_epsilon(n);
  if (ob.full_twist_eps % 2 == 0) throw DomainError("eps of the full twist is even; the obstruction does not apply");
  const std::string delta_name = theta.source.names().at(static_cast<std::size_t>(*theta.source.delta_index() - 1));
  ob.identity = "2*eps(w_" + delta_name + ") + " + std::to_string(ob.full_twist_eps) + " = 0";
  return ob;
}

std::optional<WitnessHom> witness_from_lift(const GroupPresentation& p, const std::vector<ZnElement>& theta, int n) {
  const auto lift = integer_lift(p, theta, n);
  if (!lift) return std::nullopt;
  WitnessHom psi;
  psi.presentation = p;
  psi.n = n;
  psi.rule = "integer_lift";
  const CyclicBraid g = CyclicBraid::generator(n);
  for (const auto& value : *lift) {
    if (boost::multiprecision::abs(value) > 1'000'000) throw UnsupportedError("integer lift has very large values");
    const long long e = value.convert_to<long long>();
    psi.images.push_back(g.pow(e));
    psi.image_labels.push_back(power_label("g", e));
  }
  return psi;
}

Report WitnessVerifier::verify(const WitnessHom& psi, const std::vector<ZnElement>& theta) {
  Report report;
  const auto& p = psi.presentation;
  const bool shapes_ok = static_cast<int>(psi.images.size()) == p.generators &&
                         static_cast<int>(theta.size()) == p.generators;
  if (!shapes_ok) {
    CheckRecord r;
    r.relation = "shape";
    r.detail = "image counts do not match the presentation";
    report.add(r);
    return report;
  }
  for (int x = 1; x <= p.generators; ++x) {
    const CyclicBraid& img = psi.image(x);
    CheckRecord r;
    r.relation = "pi2";
    r.indices = {x};
    r.lhs_word = "pi2(psi(" + p.name(x) + "))=" + img.klass().to_string();
    r.rhs_word = "theta(" + p.name(x) + ")=" + theta[static_cast<std::size_t>(x - 1)].to_string();
    r.pass = img.strands() == psi.n && img.klass() == theta[static_cast<std::size_t>(x - 1)];
    report.add(r);
  }
  for (const auto& img : psi.images)
    if (img.strands() != psi.n) return report;
  std::vector<std::string> image_ids;
  std::vector<std::size_t> slots;
  for (const auto& img : psi.images) {
    const auto it = image_ids_.try_emplace(word_key(img.word()), image_ids_.size());
    if (it.second) {
      image_forms_.push_back(normal_form(img.word()));
      inverse_forms_.push_back(image_forms_.back().inverse());
    }
    slots.push_back(it.first->second);
    image_ids.push_back(std::to_string(it.first->second));
  }
  const auto pieces = relator_pieces(psi);
  for (std::size_t ri = 0; ri < pieces.size(); ++ri) {
    std::string relator_key = std::to_string(psi.n) + "#";
    std::vector<std::string> block_keys;
    for (const auto& block : pieces[ri]) {
      std::string key = "b";
      for (int e : block) key += image_ids[static_cast<std::size_t>(std::abs(e) - 1)] + (e < 0 ? "-" : "+");
      block_keys.push_back(std::to_string(psi.n) + "#" + key);
      relator_key += key + "|";
    }
    auto found = cache_.find(relator_key);
    if (found == cache_.end()) {
      NormalForm computed(psi.n);
      for (std::size_t bi = 0; bi < pieces[ri].size(); ++bi) {
        auto it = cache_.find(block_keys[bi]);
        if (it == cache_.end()) {
          NormalForm block(psi.n);
          for (int e : pieces[ri][bi]) {
            const std::size_t slot = slots[static_cast<std::size_t>(std::abs(e) - 1)];
            block = block * (e > 0 ? image_forms_[slot] : inverse_forms_[slot]);
          }
          it = cache_.emplace(block_keys[bi], std::move(block)).first;
        }
        computed = computed * it->second;
      }
      found = cache_.emplace(relator_key, std::move(computed)).first;
    }
    const NormalForm* total = &found->second;
    CheckRecord r;
    r.relation = "relator";
    r.indices = {static_cast<int>(ri) + 1};
    r.lhs_word = "psi(" + relator_text(p, p.relators[ri]) + ")";
    r.rhs_word = "1";
    r.pass = total->is_identity();
    if (!r.pass) r.detail = "normal form " + total->to_string();
    report.add(r);
  }
  return report;
}

Report verify_witness(const WitnessHom& psi, const std::vector<ZnElement>& theta) {
  WitnessVerifier v;
  return v.verify(psi, theta);
}

Report verify_witness(const WitnessHom& psi, const CyclicHom& theta) {
  if (psi.n != theta.n) throw InputError("witness and homomorphism have different n");
  if (psi.source && !(*psi.source == theta.source)) throw InputError("witness and homomorphism have different sources");
  return verify_witness(psi, theta.images);
}

AlphaBeta witness_pair(int k) {
  std::lock_guard lock(registry_mutex);
  auto& memo = pair_memo();
  if (auto it = memo.find(k); it != memo.end()) return it->second;
  const char* env = std::getenv("BU_WITNESS_REGISTRY");
  const std::string path = env ? env : "";
  if (!path.empty()) {
    if (auto ab = load_registered(k, path)) return memo.emplace(k, *ab).first->second;
  }
  AlphaBeta ab = alpha_beta(k);
  if (!path.empty()) store_registered(ab, path);
  return memo.emplace(k, ab).first->second;
}

Decision decide(const CyclicHom& theta, WitnessVerifier& verifier) {
  const Report validity = validate_hom(theta);
  if (!validity.passed()) {
    std::string why;
    for (const auto& r : validity.records)
      if (!r.pass) why += (why.empty() ? "" : "; ") + r.detail;
    throw InputError("invalid homomorphism: " + why);
  }
  Decision d;
  if (bu_criterion(theta)) {
    d.has_bu_property = true;
    d.certificate = obstruction_certificate(theta);
    return d;
  }
  WitnessHom psi = [&] {
    if (theta_of_delta(theta).is_zero()) return witness_prop1(theta);
    const AlphaBeta ab = witness_pair(theta.n / 4);
    return witness_prop2(theta, ab.alpha, ab.beta);
  }();
  const Report check = verifier.verify(psi, theta.images);
  if (!check.passed()) {
    std::string why;
    for (const auto& r : check.records)
      if (!r.pass) why += (why.empty() ? "" : "; ") + r.relation + " " + r.lhs_word + " != " + r.rhs_word + " " + r.detail;
    throw DomainError("constructed witness fails verification: " + why);
  }
  d.has_bu_property = false;
  d.certificate = std::move(psi);
  return d;
}

Decision decide(const CyclicHom& theta) {
  WitnessVerifier v;
  return decide(theta, v);
}

}  // namespace bu
