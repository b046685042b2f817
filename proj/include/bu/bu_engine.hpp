#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "bu/cyclic_braid.hpp"
#include "bu/garside.hpp"
#include "bu/presentation.hpp"
#include "bu/report.hpp"
#include "bu/tracer.hpp"

namespace bu {

/// A homomorphism psi: pi_1 -> B_{Z_n}(R^2) given by generator images.
///
/// source is set for the standard surface presentations; presentation always holds
/// the generators and relators that verify_witness checks.
struct WitnessHom {
  std::optional<SurfacePresentation> source;
  GroupPresentation presentation;
  int n = 0;
  std::vector<CyclicBraid> images;
  /// Symbolic images such as "g^3" or "alpha^-1 beta^6", parallel to images.
  std::vector<std::string> image_labels;
  /// Distinguishes the alpha, beta pair behind the labels.
  std::string basis_tag;
  /// Which construction produced it: "prop1", "prop2" or "integer_lift".
  std::string rule;

  const CyclicBraid& image(int generator) const { return images.at(static_cast<std::size_t>(generator - 1)); }
  BraidWord evaluate(const GroupWord& w) const;
};

/// The unsatisfiable identity 2 eps(w_delta) + eps(Delta_n^2) = 0 for n = 4k+2.
struct ParityObstruction {
  int n = 0;
  int k = 0;
  ZnElement theta_delta{0, 1};
  long long full_twist_eps = 0;
  std::string identity;
};

struct Decision {
  bool has_bu_property = false;
  std::variant<WitnessHom, ParityObstruction> certificate;

  bool has_witness() const { return std::holds_alternative<WitnessHom>(certificate); }
  const WitnessHom& witness() const { return std::get<WitnessHom>(certificate); }
  const ParityObstruction& obstruction() const { return std::get<ParityObstruction>(certificate); }
};

/// The closed-form criterion: n = 2 mod 4, non-orientable source, theta(delta) != 0.
bool bu_criterion(const CyclicHom& theta);

/// psi(a_i) = g^{b_i}, psi(delta) = 1, psi(v) = g^{theta(v)}. Requires theta(delta) = 0.
WitnessHom witness_prop1(const CyclicHom& theta);

/// The construction for n = 4k, theta(delta) = 2k from a pair alpha, beta with
/// pi2(alpha) = 2k, pi2(beta) = 1 and alpha beta alpha beta^{-1} = 1.
WitnessHom witness_prop2(const CyclicHom& theta, const CyclicBraid& alpha, const CyclicBraid& beta);

/// Requires n = 4k+2, a non-orientable source and theta(delta) = 2k+1.
ParityObstruction obstruction_certificate(const CyclicHom& theta);

/// A witness g^{phi(x)} from an integer lift phi of theta, for any presentation; nullopt if theta has no lift.
std::optional<WitnessHom> witness_from_lift(const GroupPresentation& p, const std::vector<ZnElement>& theta, int n);

/// Caches normal forms of relator pieces so that many witnesses sharing images verify quickly.
/// Images are interned by their exact words, so the cache never depends on labels.
/// Not thread-safe; use one verifier per thread.
class WitnessVerifier {
 public:
  Report verify(const WitnessHom& psi, const std::vector<ZnElement>& theta);
  std::size_t cached() const { return cache_.size(); }

 private:
  std::unordered_map<std::string, std::size_t> image_ids_;
  std::vector<NormalForm> image_forms_;
  std::vector<NormalForm> inverse_forms_;
  std::unordered_map<std::string, NormalForm> cache_;
};

/// Checks that every relator maps to the identity braid and that pi2 o psi = theta on generators.
Report verify_witness(const WitnessHom& psi, const CyclicHom& theta);
Report verify_witness(const WitnessHom& psi, const std::vector<ZnElement>& theta);

/// alpha, beta for n = 4k: from memory, then the registry file, then the tracer.
/// The registry path is read from BU_WITNESS_REGISTRY; traced pairs are written back.
AlphaBeta witness_pair(int k);

/// Decides the property and attaches a checked certificate. Throws InputError on an invalid theta
/// and DomainError if a constructed witness fails verification.
Decision decide(const CyclicHom& theta);
Decision decide(const CyclicHom& theta, WitnessVerifier& verifier);

}  // namespace bu
