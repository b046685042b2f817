#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "bu/braid_word.hpp"
#include "bu/cyclic_braid.hpp"
#include "bu/presentation.hpp"
#include "bu/report.hpp"

namespace bu {

/// A point of R^2/Z^2 with coordinates reduced to [0,1).
struct TorusPoint {
  double a = 0.0;
  double b = 0.0;

  TorusPoint() = default;
  TorusPoint(double a_, double b_);
};

using PlanePoint = std::array<double, 2>;

/// tau^i(a,b): (a, b + i/4k) for i even, (-a, a + b + i/4k) for i odd.
TorusPoint tau_power(int k, long long i, TorusPoint p);
/// Radial profile of the orbit map; 3/2 at a = 0, 1/2 and 1.
double annulus_radius(double a);
/// h(a,b) = r(a) (cos 2 pi b, sin 2 pi b).
PlanePoint orbit_map(TorusPoint p);

enum class KleinLoop { U, V };

/// Generic default for trace_braid: no two orbit points of the traced loops project together at sample times.
inline constexpr double kDefaultProjectionAngle = 0.3;

/// A motion of n points in the plane, sampled at increasing times.
///
/// samples[s][i] is strand i at times[s]. When motion is set, trace_braid uses it
/// to refine crossings between samples.
struct StrandSet {
  int k = 0;
  std::vector<double> times;
  std::vector<std::vector<PlanePoint>> samples;
  std::function<std::vector<PlanePoint>(double)> motion;

  int strands() const { return samples.empty() ? 0 : static_cast<int>(samples.front().size()); }
};

/// The basepoint used for all lifts.
TorusPoint tracer_basepoint();

/// Orbit strands s_i(t) = h(tau^i(xi(t))), i = 0..4k-1, where xi lifts the loop from the basepoint.
StrandSet orbit_strands(int k, KleinLoop loop, int resolution);

/// Samples an arbitrary motion on [0,1] at resolution+1 evenly spaced times.
StrandSet sample_motion(int k, std::function<std::vector<PlanePoint>(double)> motion, int resolution);

/// Reads the Artin word of a sampled motion by projecting onto the direction at projection_angle.
///
/// Positions are numbered left to right along the projection axis. A crossing of
/// positions i, i+1 is sigma_i when the strand coming from position i has the smaller
/// transverse coordinate, so a counterclockwise half-turn of two points reads sigma_1.
/// Throws TracingError on collisions or on crossings that stay unresolved after 40 bisections.
BraidWord trace_braid(const StrandSet& s, double projection_angle);

/// Standard label (1..4k) of the orbit point tau^l(x0).
int strand_label(int k, long long l);

/// The braid of a loop in the Klein bottle given as a word in u (letter 1) and v (letter 2),
/// anchored to a fixed configuration on a horizontal line.
StrandSet anchored_loop_motion(int k, const GroupWord& loop, int resolution);
BraidWord trace_loop(int k, const GroupWord& loop, int resolution, double projection_angle);

struct AlphaBeta {
  CyclicBraid alpha;
  CyclicBraid beta;
  int k = 0;
  int resolution = 0;
  double angle = 0.0;
};

/// Traces alpha = psi(u), beta = psi(v) and checks pi2(alpha) = 2k, pi2(beta) = 1 and
/// alpha beta alpha beta^{-1} = 1. Throws TracingError if any check fails.
AlphaBeta alpha_beta(int k, int resolution = 1024, double projection_angle = kDefaultProjectionAngle);

/// Checks that alpha, beta satisfy the three conditions, without tracing.
Report check_alpha_beta(int k, const CyclicBraid& alpha, const CyclicBraid& beta);

/// Exact check that tau^i(p) != tau^j(p) for 0 <= i < j < 4k on random rational points,
/// plus the fixed points (0,0) and (1/2,0). One record per point.
Report check_free_action(int k, int trials, unsigned seed = 1);

}  // namespace bu
