#include <doctest.h>

#include <cmath>

#include "bu/errors.hpp"
#include "bu/garside.hpp"
#include "bu/tracer.hpp"
#include "generators.hpp"

using bu::PlanePoint;
using bu::TorusPoint;

namespace {

constexpr double kPi = 3.14159265358979323846;

double torus_distance(TorusPoint p, TorusPoint q) {
  auto d = [](double x, double y) {
    const double t = std::fabs(x - y);
    return std::min(t, 1.0 - t);
  };
  return std::max(d(p.a, q.a), d(p.b, q.b));
}

double plane_distance(PlanePoint p, PlanePoint q) { return std::hypot(p[0] - q[0], p[1] - q[1]); }

bu::StrandSet rotation(double turns) {
  return bu::sample_motion(
      0,
      [turns](double t) {
        const double phi = 2 * kPi * turns * t;
        return std::vector<PlanePoint>{{-std::cos(phi), -std::sin(phi)}, {std::cos(phi), std::sin(phi)}};
      },
      256);
}

}  // namespace

TEST_CASE("the Z_4k action") {
  gen::Rng rng(61);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int k = 1; k <= 3; ++k)
    for (int trial = 0; trial < 50; ++trial) {
      const TorusPoint p(unit(rng), unit(rng));
      CHECK(torus_distance(bu::tau_power(k, 4 * k, p), p) < 1e-12);
      const int i = gen::uniform(rng, -10, 10);
      const int j = gen::uniform(rng, -10, 10);
      CHECK(torus_distance(bu::tau_power(k, i, bu::tau_power(k, j, p)), bu::tau_power(k, i + j, p)) < 1e-12);
      const TorusPoint q = bu::tau_power(k, 1, p);
      CHECK(torus_distance(q, TorusPoint(-p.a, p.a + p.b + 1.0 / (4 * k))) < 1e-12);
    }
}

TEST_CASE("orbit map radii") {
  CHECK(bu::annulus_radius(0.0) == doctest::Approx(1.5));
  CHECK(bu::annulus_radius(0.5) == doctest::Approx(1.5));
  CHECK(bu::annulus_radius(0.25) == doctest::Approx(1.0));
  CHECK(bu::annulus_radius(0.75) == doctest::Approx(2.0));
  CHECK(bu::annulus_radius(0.125) != doctest::Approx(bu::annulus_radius(0.875)));
  const PlanePoint p = bu::orbit_map(TorusPoint(0.0, 0.25));
  CHECK(p[0] == doctest::Approx(0.0));
  CHECK(p[1] == doctest::Approx(1.5));
}

TEST_CASE("exact free action") {
  for (int k = 1; k <= 3; ++k) {
    const bu::Report r = bu::check_free_action(k, 50);
    CHECK(r.passed());
    CHECK(r.size() == 52);
  }
}

TEST_CASE("orbit strand endpoints follow theta") {
  for (int k = 1; k <= 2; ++k) {
    const int n = 4 * k;
    for (auto loop : {bu::KleinLoop::U, bu::KleinLoop::V}) {
      const bu::StrandSet s = bu::orbit_strands(k, loop, 256);
      const int shift = loop == bu::KleinLoop::U ? 2 * k : 1;
      for (int i = 0; i < n; ++i)
        CHECK(plane_distance(s.samples.back()[static_cast<std::size_t>(i)],
                             s.samples.front()[static_cast<std::size_t>((i + shift) % n)]) < 1e-9);
      // Every frame sits on at most two circles: tau^i keeps a up to sign.
      for (const auto& frame : s.samples) {
        std::vector<double> radii;
        for (const auto& pt : frame) {
          const double r = std::hypot(pt[0], pt[1]);
          bool seen = false;
          for (double q : radii) seen = seen || std::fabs(q - r) < 1e-9;
          if (!seen) radii.push_back(r);
        }
        CHECK(radii.size() <= 2);
      }
    }
  }
  CHECK_THROWS_AS(bu::orbit_strands(1, bu::KleinLoop::U, 32), bu::InputError);
}

TEST_CASE("strand labels") {
  CHECK(bu::strand_label(1, 0) == 1);
  CHECK(bu::strand_label(1, 1) == 4);
  CHECK(bu::strand_label(1, -1) == 2);
  CHECK(bu::strand_label(2, 8) == 1);
}

TEST_CASE("calibration") {
  const auto still = bu::sample_motion(
      0, [](double) { return std::vector<PlanePoint>{{0.0, 0.0}, {1.0, 0.3}}; }, 64);
  CHECK(bu::trace_braid(still, 0.3).empty());
  CHECK(bu::trace_braid(rotation(0.5), 0.3) == bu::BraidWord::parse("n=2 1"));
  CHECK(bu::equal(bu::trace_braid(rotation(1.0), 0.3), bu::BraidWord::parse("n=2 1 1")));
  CHECK(bu::equal(bu::trace_braid(rotation(-1.0), 0.7), bu::BraidWord::parse("n=2 -1 -1")));
  const auto collide = bu::sample_motion(
      0, [](double t) { return std::vector<PlanePoint>{{t, 0.0}, {0.5, 0.0}}; }, 64);
  CHECK_THROWS_AS(bu::trace_braid(collide, 0.0), bu::TracingError);
}

TEST_CASE("alpha and beta for k = 1") {
  const bu::AlphaBeta ab = bu::alpha_beta(1);
  CHECK(bu::pi2(ab.alpha).value() == 2);
  CHECK(bu::pi2(ab.beta).value() == 1);
  CHECK(bu::is_trivial((ab.alpha * ab.beta * ab.alpha * ab.beta.inverse()).word()));
  CHECK(bu::check_alpha_beta(1, ab.alpha, ab.beta).passed());

  const bu::AlphaBeta fine = bu::alpha_beta(1, 2048);
  const bu::AlphaBeta tilted = bu::alpha_beta(1, 1024, bu::kDefaultProjectionAngle + 0.1);
  CHECK(bu::equal(ab.alpha.word(), fine.alpha.word()));
  CHECK(bu::equal(ab.beta.word(), fine.beta.word()));
  CHECK(bu::equal(ab.alpha.word(), tilted.alpha.word()));
  CHECK(bu::equal(ab.beta.word(), tilted.beta.word()));

  CHECK(bu::is_trivial(bu::trace_loop(1, {1, 2, 1, -2}, 512, bu::kDefaultProjectionAngle)));
  CHECK(bu::equal(bu::trace_loop(1, {1, 2}, 512, bu::kDefaultProjectionAngle), (ab.alpha * ab.beta).word()));
}

TEST_CASE("check_alpha_beta rejects wrong pairs") {
  const auto g = bu::CyclicBraid::generator(4);
  const bu::Report r = bu::check_alpha_beta(1, g.pow(2), g);
  CHECK_FALSE(r.passed());
  CHECK(r.count("alpha.beta.alpha.beta^-1") == 1);
}
