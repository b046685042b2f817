#pragma once

#include <json.hpp>
#include <string>

#include "bu/bu_engine.hpp"
#include "bu/presentation.hpp"
#include "bu/report.hpp"
#include "bu/sigma_examples.hpp"
#include "bu/tracer.hpp"

namespace bu {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const CheckRecord& r);
/// Array of { relation, indices, lhs_word, rhs_word, pass }.
Json to_json(const Report& r);
Json to_json(const GroupPresentation& p);
Json to_json(const SurfacePresentation& p);
Json to_json(const CyclicHom& theta);
Json to_json(const WitnessHom& psi);
Json to_json(const ParityObstruction& ob);
/// { has_bu_property, certificate: { kind, ... } }
Json to_json(const Decision& d);
Json to_json(const AlphaBeta& ab);
Json to_json(const M2CyclicResult& r);

/// Parses an instance file body { schema, case, m, n, theta: { name: residue } }.
/// Throws InputError naming the offending field.
CyclicHom parse_instance(const Json& doc);
CyclicHom parse_instance_text(const std::string& text);

}  // namespace bu
