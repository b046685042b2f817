#include "bu/json_io.hpp"

#include "bu/errors.hpp"

namespace bu {

Json to_json(const CheckRecord& r) {
  Json j = {{"relation", r.relation}, {"indices", r.indices}, {"lhs_word", r.lhs_word}, {"rhs_word", r.rhs_word},
            {"pass", r.pass}};
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

Json to_json(const Report& r) {
  Json out = Json::array();
  for (const auto& rec : r.records) out.push_back(to_json(rec));
  return out;
}

Json to_json(const GroupPresentation& p) {
  Json j = {{"kind", "generic"}, {"generators", p.generators}, {"relators", p.relators}};
  if (!p.names.empty()) j["names"] = p.names;
  if (!p.marks.empty()) j["marks"] = p.marks;
  return j;
}

Json to_json(const SurfacePresentation& p) {
  return {{"case", to_string(p.surface_case())},
          {"m", p.handles()},
          {"generators", p.names()},
          {"relators", Json::array({p.relator()})},
          {"marks", p.default_marks()}};
}

Json to_json(const CyclicHom& theta) {
  Json images = Json::object();
  for (int x = 1; x <= theta.source.generator_count(); ++x)
    images[theta.source.names()[static_cast<std::size_t>(x - 1)]] = theta.image(x).value();
  return {{"case", to_string(theta.source.surface_case())}, {"m", theta.source.handles()}, {"n", theta.n},
          {"theta", images}};
}

Json to_json(const WitnessHom& psi) {
  Json images = Json::object();
  for (int x = 1; x <= psi.presentation.generators; ++x) {
    const auto& img = psi.image(x);
    Json entry = {{"word", img.word().to_string()}, {"pi2", img.klass().to_string()}};
    if (psi.image_labels.size() == psi.images.size())
      entry["symbolic"] = psi.image_labels[static_cast<std::size_t>(x - 1)];
    images[psi.presentation.name(x)] = entry;
  }
  Json j = {{"kind", "witness"}, {"rule", psi.rule}, {"n", psi.n}, {"images", images}};
  if (psi.source) j["source"] = to_json(*psi.source);
  return j;
}

Json to_json(const ParityObstruction& ob) {
  return {{"kind", "parity_obstruction"},
          {"n", ob.n},
          {"k", ob.k},
          {"theta_delta", ob.theta_delta.to_string()},
          {"full_twist_eps", ob.full_twist_eps},
          {"identity", ob.identity}};
}

Json to_json(const Decision& d) {
  Json cert = d.has_witness() ? to_json(d.witness()) : to_json(d.obstruction());
  return {{"has_bu_property", d.has_bu_property}, {"certificate", cert}};
}

Json to_json(const AlphaBeta& ab) {
  const TorusPoint x0 = tracer_basepoint();
  return {{"k", ab.k},
          {"alpha", ab.alpha.word().to_string()},
          {"beta", ab.beta.word().to_string()},
          {"pi2_alpha", ab.alpha.klass().to_string()},
          {"pi2_beta", ab.beta.klass().to_string()},
          {"resolution", ab.resolution},
          {"angle", ab.angle},
          {"basepoint", {x0.a, x0.b}}};
}

Json to_json(const M2CyclicResult& r) {
  Json j = {{"n", r.n}, {"has_bu_property", r.has_bu_property}, {"basis", r.basis}};
  if (r.basis == "homology") {
    Json lambdas = Json::array();
    for (std::size_t i = 0; i < r.lambdas.size(); ++i)
      lambdas.push_back({{"permutation", r.lambdas[i].to_cycle_string()}, {"word", r.lambda_words[i]}});
    j["lambdas"] = lambdas;
    j["w"] = r.w;
    j["index"] = r.index;
    j["generators"] = r.generators;
    j["relators"] = r.relators;
    j["rank"] = r.rank;
    j["torsion"] = r.torsion;
    if (r.theta_delta) j["theta_ab_delta"] = r.theta_delta->to_string();
    if (r.witness) j["certificate"] = {{"kind", "witness"}, {"rule", r.witness->rule},
                                       {"generators", r.witness->presentation.generators}};
  }
  j["checks"] = to_json(r.checks);
  return j;
}

CyclicHom parse_instance(const Json& doc) {
  if (!doc.is_object()) throw InputError("instance: expected a JSON object");
  if (doc.contains("schema") && doc["schema"] != kSchemaVersion)
    throw InputError("instance field 'schema': unsupported version " + doc["schema"].dump());
  auto field = [&](const char* name) -> const Json& {
    if (!doc.contains(name)) throw InputError(std::string("instance: missing field '") + name + "'");
    return doc[name];
  };
  const Json& c = field("case");
  if (!c.is_string()) throw InputError("instance field 'case': expected a string");
  const Json& m = field("m");
  if (!m.is_number_integer() || m.get<long long>() < 0)
    throw InputError("instance field 'm': expected a non-negative integer");
  const Json& n = field("n");
  if (!n.is_number_integer() || n.get<long long>() < 1 || n.get<long long>() > 1000)
    throw InputError("instance field 'n': expected an integer in 1..1000");
  const Json& theta = field("theta");
  if (!theta.is_object()) throw InputError("instance field 'theta': expected an object of generator residues");

  SurfacePresentation source(parse_surface_case(c.get<std::string>()), m.get<int>());
  std::vector<long long> residues;
  for (const auto& name : source.names()) {
    if (!theta.contains(name)) throw InputError("instance field 'theta." + name + "': missing");
    if (!theta[name].is_number_integer()) throw InputError("instance field 'theta." + name + "': expected an integer");
    residues.push_back(theta[name].get<long long>());
  }
  for (auto it = theta.begin(); it != theta.end(); ++it)
    if (!source.index_of(it.key())) throw InputError("instance field 'theta." + it.key() + "': unknown generator");
  return make_hom(std::move(source), n.get<int>(), residues);
}

CyclicHom parse_instance_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("instance is not valid JSON: ") + e.what());
  }
  return parse_instance(doc);
}

}  // namespace bu
