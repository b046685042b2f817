#include "bu/sigma_examples.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <random>
#include <unordered_set>

#include "bu/errors.hpp"
#include "bu/garside.hpp"
#include "bu/pure_braid.hpp"
#include "bu/schreier.hpp"
#include "bu/smith.hpp"

namespace bu {
namespace {

CheckRecord record(std::string relation, std::vector<int> indices, std::string lhs, std::string rhs, bool pass,
                   std::string detail = {}) {
  CheckRecord r;
  r.relation = std::move(relation);
  r.indices = std::move(indices);
  r.lhs_word = std::move(lhs);
  r.rhs_word = std::move(rhs);
  r.pass = pass;
  r.detail = std::move(detail);
  return r;
}

std::string word_text(const GroupPresentation& p, const GroupWord& w) {
  std::string out;
  for (int e : w) {
    if (!out.empty()) out += " ";
    out += p.name(std::abs(e));
    if (e < 0) out += "^-1";
  }
  return out.empty() ? "1" : out;
}

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BraidWord random_pure(int n, std::mt19937& rng, int factors) {
  std::uniform_int_distribution<int> pick_j(2, n);
  std::uniform_int_distribution<int> coin(0, 1);
  BraidWord w(n);
  for (int f = 0; f < factors; ++f) {
    const int j = pick_j(rng);
    const int i = std::uniform_int_distribution<int>(1, j - 1)(rng);
    const BraidWord a = a_gen(i, j, n).word();
    w = w * (coin(rng) ? a : a.inverse());
  }
  return w;
}

}  // namespace

GroupPresentation n1_presentation() {
  GroupPresentation p;
  p.generators = 4;
  p.names = {"a1", "b1", "a2", "b2"};
  p.relators = {{1, 2, -1, -2, 3, 4, -3, -4}};
  p.marks = {1, 1, 1, 1};
  return p;
}

GroupPresentation n2_presentation() {
  GroupPresentation p;
  p.generators = 3;
  p.names = {"c", "a1", "b1"};
  p.relators = {{1, 1, 2, 3, -2, -3}};
  p.marks = {-1, 1, 1};
  return p;
}

Permutation SymHom::evaluate(const GroupWord& w) const {
  Permutation p(n);
  for (int e : w) {
    const auto& img = images.at(static_cast<std::size_t>(std::abs(e) - 1));
    p = p * (e > 0 ? img : img.inverse());
  }
  return p;
}

bool SymHom::respects_relators() const {
  for (const auto& r : source.relators)
    if (!evaluate(r).is_identity()) return false;
  return true;
}

bool SymHom::surjective() const {
  if (n <= 8) return static_cast<long long>(generated_group(images).size()) == factorial(n);
  bool adjacent = false;
  bool full_cycle = false;
  for (const auto& p : images) {
    const std::string cycles = p.to_cycle_string();
    int moved = 0;
    for (int i = 1; i <= n; ++i) moved += p(i) != i;
    if (moved == 2)
      for (int i = 1; i < n; ++i) adjacent = adjacent || (p(i) == i + 1 && p(i + 1) == i);
    if (moved == n && p.pow(n).is_identity()) {
      bool single = true;
      for (int e = 1; e < n && single; ++e) single = p.pow(e)(1) != 1;
      full_cycle = full_cycle || single;
    }
  }
  return adjacent && full_cycle;
}

SymHom build_theta(int which, int n) {
  if (n <= 2) throw InputError("the Sigma_n examples need n > 2");
  const Permutation t = Permutation::transposition(n, 1, 2);
  const Permutation c = Permutation::cyclic_generator(n);
  if (which == 1) return SymHom{n1_presentation(), n, {t, t, c, c}};
  if (which == 2) return SymHom{n2_presentation(), n, {t, c, c}};
  throw InputError("build_theta expects which = 1 or 2");
}

Report verify_sym_witness(const SymHom& theta, const std::vector<BraidWord>& psi) {
  Report report;
  const auto& p = theta.source;
  if (static_cast<int>(psi.size()) != p.generators) throw InputError("one braid per generator expected");
  for (int x = 1; x <= p.generators; ++x) {
    const Permutation got = permutation(psi[static_cast<std::size_t>(x - 1)]);
    const Permutation want = theta.images[static_cast<std::size_t>(x - 1)];
    report.add(record("permutation", {x}, "pi(psi(" + p.name(x) + "))=" + got.to_cycle_string(),
                      "theta(" + p.name(x) + ")=" + want.to_cycle_string(), got == want));
  }
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    BraidWord image(theta.n);
    for (int e : p.relators[r]) {
      const BraidWord& b = psi[static_cast<std::size_t>(std::abs(e) - 1)];
      image = image * (e > 0 ? b : b.inverse());
    }
    report.add(record("relator", {static_cast<int>(r) + 1}, "psi(" + word_text(p, p.relators[r]) + ")", "1",
                      is_trivial(image), image.empty() ? "reduces to the empty word" : ""));
  }
  return report;
}

Report witness_M1(int n) {
  const SymHom theta = build_theta(1, n);
  const BraidWord s1 = BraidWord::sigma(n, 1);
  const BraidWord g = BraidWord::cyclic_generator(n);
  Report report;
  report.add(record("theta1.relator", {n}, "theta1([a1,b1][a2,b2])", "()", theta.respects_relators()));
  report.add(record("theta1.surjective", {n}, "<theta1 images>", "Sigma_" + std::to_string(n), theta.surjective()));
  report.append(verify_sym_witness(theta, {s1, s1, g, g}));
  return report;
}

Report parity_obstruction_M2(int n) {
  if (n <= 2) throw InputError("the Sigma_n examples need n > 2");
  Report report;
  const BraidWord s1 = BraidWord::sigma(n, 1);
  const BraidWord g = BraidWord::cyclic_generator(n);
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) {
      const BraidWord a = a_gen(i, j, n).word();
      const BraidWord by_sigma = conjugate(s1, a);
      const BraidWord by_g = conjugate(g, a);
      const bool pure_s = permutation(by_sigma).is_identity();
      const bool pure_g = permutation(by_g).is_identity();
      report.add(record("eps.sigma1_conjugate", {i, j}, "eps(sigma1 A sigma1^-1)",
                        pure_s ? std::to_string(epsilon(by_sigma)) : "not pure", pure_s && epsilon(by_sigma) == 1));
      report.add(record("eps.g_conjugate", {i, j}, "eps(g A g^-1)",
                        pure_g ? std::to_string(epsilon(by_g)) : "not pure", pure_g && epsilon(by_g) == 1));
    }
  const BraidWord a12 = a_gen(1, 2, n).word();
  report.add(record("eps.A12", {1, 2}, "eps(A_{1,2})", std::to_string(epsilon(a12)), epsilon(a12) == 1));

  // psi(c) = x sigma1, psi(a1) = y g, psi(b1) = z g on sample pure braids.
  std::mt19937 rng(20240613u);
  for (int sample = 0; sample < 4; ++sample) {
    const BraidWord x = random_pure(n, rng, 3);
    const BraidWord y = random_pure(n, rng, 3);
    const BraidWord z = random_pure(n, rng, 3);
    const BraidWord c_img = x * s1;
    const BraidWord a_img = y * g;
    const BraidWord b_img = z * g;
    const BraidWord lhs = c_img * c_img * commutator(a_img, b_img);
    const BraidWord rhs = x * conjugate(s1, x) * a12 * y * conjugate(g, z) * conjugate(g, y.inverse()) * z.inverse();
    report.add(record("factorization", {sample}, "psi(c^2[a1,b1])",
                      "x.sigma1 x sigma1^-1.A12.y.g z g^-1.g y^-1 g^-1.z^-1", equal(lhs, rhs)));
    const long long e = epsilon(rhs);
    report.add(record("eps.evaluation", {sample}, std::to_string(e), "2*" + std::to_string(epsilon(x)) + "+1",
                      e == 2 * epsilon(x) + 1));
  }
  // eps of the factorization: eps(x) twice, eps(A12) once, the y and z terms cancel.
  const long long constant = epsilon(a12);
  const bool contradiction = report.passed() && constant % 2 != 0;
  report.add(record("parity", {n}, "2*eps(x) + " + std::to_string(constant), "0", contradiction,
                    contradiction ? "no integer eps(x) solves 2*eps(x) + 1 = 0" : "parity argument incomplete"));
  return report;
}

Permutation lambda_permutation(int n, int i) {
  if (n % 4 != 2) throw InputError("lambda_i is defined for n = 4k+2");
  const int half = n / 2;
  if (i < 1 || i > half) throw InputError("lambda index out of range");
  // lambda(i) = 1, lambda(half+i) = 2, the remaining points in increasing order.
  std::vector<int> images(static_cast<std::size_t>(n), 0);
  images[static_cast<std::size_t>(i - 1)] = 1;
  images[static_cast<std::size_t>(half + i - 1)] = 2;
  int next = 3;
  for (int x = 1; x <= n; ++x)
    if (images[static_cast<std::size_t>(x - 1)] == 0) images[static_cast<std::size_t>(x - 1)] = next++;
  return Permutation::from_images(images);
}

GroupWord lambda_preimage(const SymHom& theta2, int i, int max_length) {
  const int n = theta2.n;
  const Permutation target = Permutation::transposition(n, i, n / 2 + i);
  const Permutation t12 = Permutation::transposition(n, 1, 2);
  auto good = [&](const Permutation& l) { return l * t12 * l.inverse() == target; };
  std::vector<int> letters;
  for (int g = 1; g <= theta2.source.generators; ++g) {
    letters.push_back(g);
    letters.push_back(-g);
  }
  struct Node {
    GroupWord word;
    Permutation image;
  };
  std::deque<Node> queue{{{}, Permutation(n)}};
  std::unordered_set<Permutation> seen{Permutation(n)};
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    if (good(node.image)) return node.word;
    if (static_cast<int>(node.word.size()) >= max_length) continue;
    for (int e : letters) {
      const auto& img = theta2.images[static_cast<std::size_t>(std::abs(e) - 1)];
      Permutation next = node.image * (e > 0 ? img : img.inverse());
      if (!seen.insert(next).second) continue;
      GroupWord w = node.word;
      w.push_back(e);
      queue.push_back({std::move(w), std::move(next)});
    }
  }
  throw SearchError("no preimage of lambda_" + std::to_string(i) + " within length " + std::to_string(max_length));
}

M2CyclicResult decide_M2_cyclic(int n, bool allow_large) {
  if (n <= 2) throw InputError("the Sigma_n examples need n > 2");
  M2CyclicResult out;
  out.n = n;
  if (n % 4 != 2) {
    out.basis = "criterion";
    out.has_bu_property = false;
    out.checks.add(record("criterion", {n}, std::to_string(n) + " mod 4 = " + std::to_string(n % 4), "2", true,
                          "n is not 2 mod 4, so the property fails"));
    return out;
  }
  if (n > 6 && !allow_large)
    throw UnsupportedError("the subgroup computation for n > 6 has index (n-1)!; pass allow_large to run it");

  const SymHom theta2 = build_theta(2, n);
  const GroupPresentation& p = theta2.source;
  const int half = n / 2;
  out.basis = "homology";

  // Non-orientability of the cover: w = (prod lambda_i c lambda_i^-1) a1^{2k+1}.
  for (int i = 1; i <= half; ++i) {
    const GroupWord lw = lambda_preimage(theta2, i);
    const Permutation l = theta2.evaluate(lw);
    out.lambdas.push_back(l);
    out.lambda_words.push_back(lw);
    const Permutation t = Permutation::transposition(n, i, half + i);
    out.checks.add(record("lambda", {i}, "lambda (1,2) lambda^-1 = " +
                                             (l * Permutation::transposition(n, 1, 2) * l.inverse()).to_cycle_string(),
                          t.to_cycle_string(), l * Permutation::transposition(n, 1, 2) * l.inverse() == t));
    GroupWord part = lw;
    part.push_back(1);
    const GroupWord inv = inverse_word(lw);
    part.insert(part.end(), inv.begin(), inv.end());
    out.w.insert(out.w.end(), part.begin(), part.end());
  }
  for (int i = 0; i < half; ++i) out.w.push_back(2);
  const Permutation w_image = theta2.evaluate(out.w);
  out.checks.add(record("w.kernel", {n}, "theta2(w)=" + w_image.to_cycle_string(), "()", w_image.is_identity()));
  const int orientation = orientation_character(p, out.w);
  out.checks.add(record("w.orientation", {n}, std::to_string(orientation), "-1", orientation == -1));

  // Subgroup H = theta2^{-1}(<(1,n,...,2)>) and the induced map H -> Z_n.
  const Permutation cycle = Permutation::cyclic_generator(n);
  const SubgroupPresentation sub = subgroup_presentation(p, PermutationHom{theta2.images}, {cycle});
  out.index = sub.index();
  out.generators = sub.presentation.generators;
  out.relators = static_cast<int>(sub.presentation.relators.size());
  const int euler_cover = static_cast<int>(sub.index()) * (2 - 3);
  out.checks.add(record("index", {n}, std::to_string(sub.index()), std::to_string(factorial(n - 1)),
                        static_cast<long long>(sub.index()) == factorial(n - 1)));
  out.checks.add(record("deficiency", {n}, std::to_string(sub.deficiency()), std::to_string(1 - euler_cover),
                        sub.deficiency() == 1 - euler_cover));

  std::vector<ZnElement> theta;
  for (const auto& word : sub.generator_words) theta.push_back(cyclic_class(theta2.evaluate(word)));
  const auto reversing = std::count(sub.presentation.marks.begin(), sub.presentation.marks.end(), -1);
  out.checks.add(record("cover.nonorientable", {n}, std::to_string(reversing) + " reversing generators", ">0",
                        reversing > 0));

  const Abelianization ab = abelianization(sub.presentation);
  out.rank = ab.rank;
  out.torsion = ab.torsion_values();
  out.checks.add(record("torsion", {n}, ab.torsion.size() == 1 ? ab.torsion.front().str() : "?", "2",
                        out.torsion == std::vector<long long>{2}));
  if (out.torsion != std::vector<long long>{2})
    throw DomainError("expected torsion [2] in the first homology of the cover");
  out.theta_delta = evaluate_vector(ab.torsion_generators.front(), theta, n);

  const bool criterion = n % 4 == 2 && reversing > 0 && !out.theta_delta->is_zero();
  out.has_bu_property = criterion;
  out.checks.add(record("theta_ab.delta", {n}, out.theta_delta->to_string(), ZnElement(0, n).to_string(),
                        out.theta_delta->is_zero()));
  if (!criterion) {
    out.witness = witness_from_lift(sub.presentation, theta, n);
    if (!out.witness) throw DomainError("theta_ab(delta) = 0 but theta has no integer lift");
    const Report check = verify_witness(*out.witness, theta);
    out.checks.add(record("witness", {n}, std::to_string(check.size()) + " checks",
                          std::to_string(check.failures()) + " failures", check.passed()));
  }
  return out;
}

}  // namespace bu
