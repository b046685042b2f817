#include "bu/tracer.hpp"

#include <algorithm>
#include <boost/rational.hpp>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "bu/errors.hpp"
#include "bu/garside.hpp"

namespace bu {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kRefinementCap = 40;
constexpr double kCollision = 1e-9;
constexpr double kTie = 1e-13;

double frac(double x) {
  double f = x - std::floor(x);
  return f >= 1.0 ? 0.0 : f;
}

long long mod(long long a, long long n) { return ((a % n) + n) % n; }

int shift_of(int k, KleinLoop loop) { return loop == KleinLoop::U ? 2 * k : 1; }

// Lift from the origin of the chosen loop; ends at tau^{shift}(origin).
TorusPoint core_lift(int k, KleinLoop loop, double s) {
  if (loop == KleinLoop::U) return {s, -s / 2.0};
  return {0.0, s / (4.0 * k)};
}

// Straight path from the origin to the basepoint.
TorusPoint approach(double s) { return {tracer_basepoint().a * s, tracer_basepoint().b * s}; }

// Lift from x0 of the loop conjugated into the basepoint: back to the origin,
// around the core lift, then out along the translated approach path.
TorusPoint based_lift(int k, KleinLoop loop, double t) {
  if (t <= 1.0 / 3.0) return approach(1.0 - 3.0 * t);
  if (t <= 2.0 / 3.0) return core_lift(k, loop, 3.0 * t - 1.0);
  return tau_power(k, shift_of(k, loop), approach(3.0 * t - 2.0));
}

PlanePoint lerp(const PlanePoint& p, const PlanePoint& q, double s) {
  return {p[0] + (q[0] - p[0]) * s, p[1] + (q[1] - p[1]) * s};
}

PlanePoint standard_position(int n, int label) {
  const double spread = 5.0;
  const double u = n == 1 ? 0.5 : static_cast<double>(label - 1) / (n - 1);
  return {spread * (u - 0.5), -3.0 - 0.37 * u * u};
}

void check_distinct(const std::vector<PlanePoint>& pts, double t) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (std::hypot(pts[i][0] - pts[j][0], pts[i][1] - pts[j][1]) < kCollision) {
        std::ostringstream msg;
        msg << "strands " << i << " and " << j << " collide at t=" << t;
        throw TracingError(msg.str());
      }
}

struct Flip {
  double t;
  int i;
  int j;
};

class CrossingReader {
 public:
  CrossingReader(const StrandSet& s, double angle) : set_(s), c_(std::cos(angle)), s_(std::sin(angle)) {}

  BraidWord read() {
    const int n = set_.strands();
    if (set_.samples.size() != set_.times.size() || set_.samples.size() < 1)
      throw InputError("strand set has no samples");
    const auto& first = set_.samples.front();
    check_distinct(first, set_.times.front());
    order_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order_[static_cast<std::size_t>(i)] = i;
    std::sort(order_.begin(), order_.end(), [&](int x, int y) { return xp(first[x]) < xp(first[y]); });
    for (int p = 0; p + 1 < n; ++p)
      if (std::abs(xp(first[order_[p + 1]]) - xp(first[order_[p]])) < kTie)
        throw TracingError("projection is not generic at the start configuration");
    std::vector<double> times = set_.times;
    std::vector<std::vector<PlanePoint>> samples = set_.samples;
    if (set_.motion) {
      // Nudge interior samples that sit exactly on a projection tie.
      for (std::size_t s = 1; s + 1 < samples.size(); ++s)
        for (int attempt = 1; attempt <= 8 && has_tie(samples[s]); ++attempt) {
          times[s] = set_.times[s] + (set_.times[s + 1] - set_.times[s]) * 1e-3 * attempt;
          samples[s] = set_.motion(times[s]);
        }
    }
    for (std::size_t s = 0; s + 1 < samples.size(); ++s) {
      check_distinct(samples[s + 1], times[s + 1]);
      interval(times[s], samples[s], times[s + 1], samples[s + 1], 0);
    }
    return BraidWord(std::max(n, 1), std::move(letters_));
  }

 private:
  double xp(const PlanePoint& p) const { return p[0] * c_ + p[1] * s_; }

  bool has_tie(const std::vector<PlanePoint>& pts) const {
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        if (std::abs(xp(pts[i]) - xp(pts[j])) < kTie) return true;
    return false;
  }
  double yp(const PlanePoint& p) const { return -p[0] * s_ + p[1] * c_; }

  [[noreturn]] void fail(double ta, double tb, const std::string& why) const {
    std::ostringstream msg;
    msg << why << " in time interval [" << ta << ", " << tb << "]";
    throw TracingError(msg.str());
  }

  std::vector<PlanePoint> at(double t, double ta, const std::vector<PlanePoint>& pa, double tb,
                             const std::vector<PlanePoint>& pb) const {
    if (set_.motion) return set_.motion(t);
    std::vector<PlanePoint> out(pa.size());
    const double s = (t - ta) / (tb - ta);
    for (std::size_t i = 0; i < pa.size(); ++i) out[i] = lerp(pa[i], pb[i], s);
    return out;
  }

  void interval(double ta, const std::vector<PlanePoint>& pa, double tb, const std::vector<PlanePoint>& pb,
                int depth) {
    const int n = static_cast<int>(pa.size());
    std::vector<Flip> flips;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const double da = xp(pa[i]) - xp(pa[j]);
        const double db = xp(pb[i]) - xp(pb[j]);
        if (std::abs(db) < kTie) fail(ta, tb, "projection tie between strands " + std::to_string(i) + " and " +
                                                  std::to_string(j) + "; choose another angle");
        if ((da < 0) != (db < 0)) flips.push_back({ta + (tb - ta) * da / (da - db), i, j});
      }

    if (set_.motion && depth < kRefinementCap) {
      const double tm = 0.5 * (ta + tb);
      const auto pm = set_.motion(tm);
      bool consistent = true;
      for (int i = 0; i < n && consistent; ++i)
        for (int j = i + 1; j < n; ++j) {
          const double da = xp(pa[i]) - xp(pa[j]);
          const double dm = xp(pm[i]) - xp(pm[j]);
          bool predicted_negative = da < 0;
          for (const auto& f : flips)
            if (f.i == i && f.j == j && f.t <= tm) predicted_negative = !predicted_negative;
          if (std::abs(dm) < kTie || (dm < 0) != predicted_negative) {
            consistent = false;
            break;
          }
        }
      if (!consistent || !adjacent_in_order(flips)) {
        check_distinct(pm, tm);
        interval(ta, pa, tm, pm, depth + 1);
        interval(tm, pm, tb, pb, depth + 1);
        return;
      }
    } else if (!flips.empty() && !adjacent_in_order(flips)) {
      if (set_.motion) fail(ta, tb, "unresolved crossing after refinement cap");
      fail(ta, tb, "simultaneous crossings of non-adjacent strands");
    }
    if (set_.motion && depth >= kRefinementCap && !adjacent_in_order(flips))
      fail(ta, tb, "unresolved crossing after refinement cap");

    std::sort(flips.begin(), flips.end(), [](const Flip& x, const Flip& y) { return x.t < y.t; });
    for (const auto& f : flips) {
      const auto pos_i = std::find(order_.begin(), order_.end(), f.i) - order_.begin();
      const auto pos_j = std::find(order_.begin(), order_.end(), f.j) - order_.begin();
      const auto left = std::min(pos_i, pos_j);
      const int left_strand = order_[static_cast<std::size_t>(left)];
      const int right_strand = order_[static_cast<std::size_t>(left + 1)];
      const auto pc = at(f.t, ta, pa, tb, pb);
      const double gap = yp(pc[right_strand]) - yp(pc[left_strand]);
      if (std::abs(gap) < kCollision) fail(ta, tb, "strands meet at a crossing");
      const int generator = static_cast<int>(left) + 1;
      letters_.push_back(gap > 0 ? generator : -generator);
      std::swap(order_[static_cast<std::size_t>(left)], order_[static_cast<std::size_t>(left + 1)]);
    }
  }

  bool adjacent_in_order(std::vector<Flip> flips) const {
    std::sort(flips.begin(), flips.end(), [](const Flip& x, const Flip& y) { return x.t < y.t; });
    std::vector<int> order = order_;
    for (const auto& f : flips) {
      const auto pi = std::find(order.begin(), order.end(), f.i) - order.begin();
      const auto pj = std::find(order.begin(), order.end(), f.j) - order.begin();
      if (std::abs(pi - pj) != 1) return false;
      std::swap(order[static_cast<std::size_t>(pi)], order[static_cast<std::size_t>(pj)]);
    }
    return true;
  }

  const StrandSet& set_;
  double c_;
  double s_;
  std::vector<int> order_;
  std::vector<int> letters_;
};

using Rational = boost::rational<long long>;

Rational rfrac(Rational x) {
  long long fl = x.numerator() / x.denominator();
  if (x.numerator() < 0 && x.numerator() % x.denominator() != 0) --fl;
  return x - fl;
}

std::pair<Rational, Rational> tau_exact(int k, long long i, Rational a, Rational b) {
  const Rational shift(i, 4LL * k);
  if (i % 2 == 0) return {rfrac(a), rfrac(b + shift)};
  return {rfrac(-a), rfrac(a + b + shift)};
}

}  // namespace

TorusPoint::TorusPoint(double a_, double b_) : a(frac(a_)), b(frac(b_)) {}

TorusPoint tau_power(int k, long long i, TorusPoint p) {
  const long long r = mod(i, 4LL * k);
  const double shift = static_cast<double>(r) / (4.0 * k);
  if (r % 2 == 0) return {p.a, p.b + shift};
  return {-p.a, p.a + p.b + shift};
}

double annulus_radius(double a) {
  a = frac(a);
  if (a <= 0.25) return (3.0 - 4.0 * a) / 2.0;
  if (a <= 0.75) return (1.0 + 4.0 * a) / 2.0;
  return (7.0 - 4.0 * a) / 2.0;
}

PlanePoint orbit_map(TorusPoint p) {
  const double r = annulus_radius(p.a);
  return {r * std::cos(kTwoPi * p.b), r * std::sin(kTwoPi * p.b)};
}

TorusPoint tracer_basepoint() { return {0.125, 0.0}; }

int strand_label(int k, long long l) { return 1 + static_cast<int>(mod(-l, 4LL * k)); }

StrandSet sample_motion(int k, std::function<std::vector<PlanePoint>(double)> motion, int resolution) {
  if (resolution < 1) throw InputError("resolution must be positive");
  StrandSet s;
  s.k = k;
  s.motion = std::move(motion);
  s.times.reserve(static_cast<std::size_t>(resolution) + 1);
  for (int i = 0; i <= resolution; ++i) {
    const double t = static_cast<double>(i) / resolution;
    s.times.push_back(t);
    s.samples.push_back(s.motion(t));
  }
  return s;
}

StrandSet orbit_strands(int k, KleinLoop loop, int resolution) {
  if (k < 1) throw InputError("k must be at least 1");
  if (resolution < 64) throw InputError("resolution must be at least 64");
  auto motion = [k, loop](double t) {
    const TorusPoint base = based_lift(k, loop, t);
    std::vector<PlanePoint> pts(static_cast<std::size_t>(4 * k));
    for (int i = 0; i < 4 * k; ++i) pts[static_cast<std::size_t>(i)] = orbit_map(tau_power(k, i, base));
    return pts;
  };
  StrandSet s = sample_motion(k, motion, resolution);
  for (std::size_t i = 0; i < s.samples.size(); ++i) check_distinct(s.samples[i], s.times[i]);
  return s;
}

StrandSet anchored_loop_motion(int k, const GroupWord& loop, int resolution) {
  if (k < 1) throw InputError("k must be at least 1");
  if (resolution < 64) throw InputError("resolution must be at least 64");
  for (int e : loop)
    if (e == 0 || std::abs(e) > 2) throw InputError("loop letters must be +-1 (u) or +-2 (v)");
  const int n = 4 * k;
  // Orbit offset of the base strand before each letter.
  std::vector<long long> offsets{0};
  for (int e : loop) {
    const long long shift = shift_of(k, std::abs(e) == 1 ? KleinLoop::U : KleinLoop::V);
    offsets.push_back(offsets.back() + (e > 0 ? shift : -shift));
  }
  const long long total = offsets.back();
  const double anchor = 0.15;

  auto motion = [=](double t) {
    std::vector<PlanePoint> pts(static_cast<std::size_t>(n));
    auto orbit_point = [&](long long l) { return orbit_map(tau_power(k, l, tracer_basepoint())); };
    if (t <= anchor || loop.empty()) {
      const double s = loop.empty() ? 0.0 : t / anchor;
      for (int i = 0; i < n; ++i)
        pts[static_cast<std::size_t>(i)] = lerp(standard_position(n, strand_label(k, i)), orbit_point(i), s);
      return pts;
    }
    if (t >= 1.0 - anchor) {
      const double s = (t - (1.0 - anchor)) / anchor;
      for (int i = 0; i < n; ++i)
        pts[static_cast<std::size_t>(i)] =
            lerp(orbit_point(i + total), standard_position(n, strand_label(k, i + total)), s);
      return pts;
    }
    const double u = (t - anchor) / (1.0 - 2 * anchor) * static_cast<double>(loop.size());
    const std::size_t idx = std::min(static_cast<std::size_t>(u), loop.size() - 1);
    const double local = u - static_cast<double>(idx);
    const int e = loop[idx];
    const KleinLoop which = std::abs(e) == 1 ? KleinLoop::U : KleinLoop::V;
    TorusPoint base;
    if (e > 0)
      base = tau_power(k, offsets[idx], based_lift(k, which, local));
    else
      base = tau_power(k, offsets[idx + 1], based_lift(k, which, 1.0 - local));
    for (int i = 0; i < n; ++i) pts[static_cast<std::size_t>(i)] = orbit_map(tau_power(k, i, base));
    return pts;
  };
  const int samples = resolution * std::max<int>(1, static_cast<int>(loop.size()));
  return sample_motion(k, motion, samples);
}

BraidWord trace_braid(const StrandSet& s, double projection_angle) {
  return CrossingReader(s, projection_angle).read();
}

BraidWord trace_loop(int k, const GroupWord& loop, int resolution, double projection_angle) {
  return trace_braid(anchored_loop_motion(k, loop, resolution), projection_angle);
}

Report check_alpha_beta(int k, const CyclicBraid& alpha, const CyclicBraid& beta) {
  Report report;
  const int n = 4 * k;
  auto add = [&](const std::string& name, bool pass, const std::string& lhs, const std::string& rhs) {
    CheckRecord r;
    r.relation = name;
    r.indices = {k};
    r.lhs_word = lhs;
    r.rhs_word = rhs;
    r.pass = pass;
    report.add(r);
  };
  const bool sizes = alpha.strands() == n && beta.strands() == n;
  add("strands", sizes, std::to_string(alpha.strands()) + "," + std::to_string(beta.strands()), std::to_string(n));
  if (!sizes) return report;
  add("pi2.alpha", alpha.klass() == ZnElement(2 * k, n), alpha.klass().to_string(), ZnElement(2 * k, n).to_string());
  add("pi2.beta", beta.klass() == ZnElement(1, n), beta.klass().to_string(), ZnElement(1, n).to_string());
  const BraidWord rel = alpha.word() * beta.word() * alpha.word() * beta.word().inverse();
  add("alpha.beta.alpha.beta^-1", is_trivial(rel), rel.to_string(), BraidWord(n).to_string());
  return report;
}

AlphaBeta alpha_beta(int k, int resolution, double projection_angle) {
  if (k < 1) throw InputError("k must be at least 1");
  BraidWord a = trace_loop(k, {1}, resolution, projection_angle).reduced();
  BraidWord b = trace_loop(k, {2}, resolution, projection_angle).reduced();
  const int n = 4 * k;
  const Permutation expected_a = Permutation::cyclic_generator(n).pow(2 * k);
  const Permutation expected_b = Permutation::cyclic_generator(n);
  if (permutation(a) != expected_a || permutation(b) != expected_b)
    throw TracingError("traced braids have unexpected permutations: alpha " + permutation(a).to_cycle_string() +
                       ", beta " + permutation(b).to_cycle_string());
  AlphaBeta out{CyclicBraid(std::move(a)), CyclicBraid(std::move(b)), k, resolution, projection_angle};
  const Report checks = check_alpha_beta(k, out.alpha, out.beta);
  if (!checks.passed()) throw TracingError("traced alpha, beta fail the relation alpha beta alpha beta^-1 = 1");
  return out;
}

Report check_free_action(int k, int trials, unsigned seed) {
  if (k < 1) throw InputError("k must be at least 1");
  std::mt19937 rng(seed);
  std::vector<std::pair<Rational, Rational>> points{{Rational(0), Rational(0)}, {Rational(1, 2), Rational(0)}};
  std::uniform_int_distribution<long long> denom(1, 97);
  for (int t = 0; t < trials; ++t) {
    const long long qa = denom(rng);
    const long long qb = denom(rng);
    std::uniform_int_distribution<long long> na(0, qa - 1);
    std::uniform_int_distribution<long long> nb(0, qb - 1);
    points.emplace_back(Rational(na(rng), qa), Rational(nb(rng), qb));
  }
  Report report;
  const int n = 4 * k;
  for (const auto& [a, b] : points) {
    std::vector<std::pair<Rational, Rational>> orbit;
    for (int i = 0; i < n; ++i) orbit.push_back(tau_exact(k, i, a, b));
    int clashes = 0;
    std::string first;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (orbit[i] == orbit[j]) {
          if (clashes++ == 0) first = "tau^" + std::to_string(i) + " = tau^" + std::to_string(j);
        }
    CheckRecord r;
    r.relation = "free_action";
    r.indices = {k};
    std::ostringstream p;
    p << "(" << a << ", " << b << ")";
    r.lhs_word = p.str();
    r.rhs_word = std::to_string(n * (n - 1) / 2) + " pairs distinct";
    r.pass = clashes == 0 && tau_exact(k, n, a, b) == std::make_pair(rfrac(a), rfrac(b));
    if (!r.pass) r.detail = clashes ? first : "tau^" + std::to_string(n) + " is not the identity";
    report.add(r);
  }
  return report;
}

}  // namespace bu
