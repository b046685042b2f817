#include <doctest.h>

#include <numeric>

#include "bu/bu_engine.hpp"
#include "bu/errors.hpp"
#include "bu/garside.hpp"
#include "generators.hpp"

using bu::BraidWord;
using bu::CyclicBraid;
using bu::SurfaceCase;
using bu::SurfacePresentation;

namespace {

const SurfaceCase kCases[] = {SurfaceCase::OrientableI, SurfaceCase::NonOrientableOddII,
                              SurfaceCase::NonOrientableEvenIII};

/// The predicate read straight off the relator: delta is c or u, first generator either way.
bool expected_bu(SurfaceCase c, int n, const std::vector<long long>& img) {
  if (c == SurfaceCase::OrientableI) return false;
  return n % 4 == 2 && img.front() % n != 0;
}

bool same_braid(const CyclicBraid& a, const CyclicBraid& b) { return bu::equal(a.word(), b.word()); }

}  // namespace

TEST_CASE("decide examples") {
  const SurfacePresentation klein(SurfaceCase::NonOrientableEvenIII, 0);
  const auto yes = bu::decide(bu::make_hom(klein, 2, {1, 0}));
  CHECK(yes.has_bu_property);
  REQUIRE_FALSE(yes.has_witness());
  CHECK(yes.obstruction().full_twist_eps == 1);

  const auto theta4 = bu::make_hom(klein, 4, {2, 1});
  const auto no = bu::decide(theta4);
  CHECK_FALSE(no.has_bu_property);
  REQUIRE(no.has_witness());
  CHECK(no.witness().rule == "prop2");
  CHECK(bu::verify_witness(no.witness(), theta4).passed());

  const auto torus = bu::decide(bu::make_hom(SurfacePresentation(SurfaceCase::OrientableI, 1), 6, {1, 3}));
  CHECK_FALSE(torus.has_bu_property);
  CHECK(torus.witness().rule == "prop1");

  CHECK_THROWS_AS(bu::decide(bu::make_hom(klein, 4, {1, 1})), bu::InputError);
}

TEST_CASE("witness_prop1 examples") {
  const auto theta = bu::make_hom(SurfacePresentation(SurfaceCase::OrientableI, 1), 3, {1, 2});
  const auto psi = bu::witness_prop1(theta);
  const CyclicBraid g = CyclicBraid::generator(3);
  CHECK(same_braid(psi.image(1), g));
  CHECK(same_braid(psi.image(2), g.pow(2)));
  CHECK(bu::verify_witness(psi, theta).passed());

  const auto theta2 = bu::make_hom(SurfacePresentation(SurfaceCase::NonOrientableOddII, 1), 3, {0, 1, 0});
  const auto psi2 = bu::witness_prop1(theta2);
  CHECK(bu::is_trivial(psi2.image(1).word()));
  CHECK(same_braid(psi2.image(2), CyclicBraid::generator(3)));
  CHECK(bu::is_trivial(psi2.image(3).word()));

  const auto theta3 = bu::make_hom(SurfacePresentation(SurfaceCase::NonOrientableEvenIII, 0), 2, {0, 1});
  const auto psi3 = bu::witness_prop1(theta3);
  CHECK(bu::is_trivial(psi3.image(1).word()));
  CHECK(same_braid(psi3.image(2), CyclicBraid::generator(2)));

  CHECK_THROWS_AS(bu::witness_prop1(bu::make_hom(SurfacePresentation(SurfaceCase::NonOrientableEvenIII, 0), 4, {2, 1})),
                  bu::DomainError);
}

TEST_CASE("witness_prop2 examples") {
  const bu::AlphaBeta ab = bu::witness_pair(1);
  const SurfacePresentation klein(SurfaceCase::NonOrientableEvenIII, 0);
  const auto theta = bu::make_hom(klein, 4, {2, 1});
  const auto psi = bu::witness_prop2(theta, ab.alpha, ab.beta);
  CHECK(same_braid(psi.image(1), ab.alpha));
  CHECK(same_braid(psi.image(2), ab.beta));
  CHECK(bu::verify_witness(psi, theta).passed());

  const SurfacePresentation s(SurfaceCase::NonOrientableEvenIII, 1);
  const auto even = bu::make_hom(s, 4, {2, 0, 1, 0});
  REQUIRE(bu::is_valid_hom(even));
  const auto psi2 = bu::witness_prop2(even, ab.alpha, ab.beta);
  CHECK(same_braid(psi2.image(1), ab.alpha.inverse()));
  CHECK(bu::is_trivial(psi2.image(2).word()));
  CHECK(same_braid(psi2.image(3), ab.beta));
  CHECK(same_braid(psi2.image(4), ab.alpha.inverse() * ab.beta.pow(2)));
  CHECK(bu::verify_witness(psi2, even).passed());

  // The relator image collapses to alpha^{2 sign} alpha^{-2 sign} by the chain in the proof.
  CHECK(bu::is_trivial(psi2.evaluate(s.relator())));

  CHECK_THROWS_AS(bu::witness_prop2(theta, ab.beta, ab.alpha), bu::InputError);
  CHECK_THROWS_AS(bu::witness_prop2(bu::make_hom(klein, 8, {4, 1}), ab.alpha, ab.beta), bu::InputError);
}

TEST_CASE("obstruction certificates") {
  const SurfacePresentation n3(SurfaceCase::NonOrientableOddII, 1);
  CHECK(bu::obstruction_certificate(bu::make_hom(n3, 2, {1, 1, 0})).full_twist_eps == 1);
  CHECK(bu::obstruction_certificate(bu::make_hom(n3, 6, {3, 1, 0})).full_twist_eps == 15);
  const auto ob10 = bu::obstruction_certificate(bu::make_hom(n3, 10, {5, 1, 0}));
  CHECK(ob10.full_twist_eps == 45);
  CHECK(ob10.k == 2);
  CHECK(ob10.theta_delta.value() == 5);
  CHECK_THROWS_AS(bu::obstruction_certificate(bu::make_hom(n3, 6, {0, 1, 0})), bu::DomainError);
  CHECK_THROWS_AS(bu::obstruction_certificate(bu::make_hom(n3, 4, {2, 1, 0})), bu::DomainError);
  CHECK_THROWS_AS(bu::obstruction_certificate(bu::make_hom(SurfacePresentation(SurfaceCase::OrientableI, 1), 6, {1, 0})),
                  bu::DomainError);
}

TEST_CASE("corrupted witnesses are caught") {
  const SurfacePresentation s(SurfaceCase::OrientableI, 1);
  const auto theta = bu::make_hom(s, 3, {1, 2});
  auto psi = bu::witness_prop1(theta);
  psi.images[0] = psi.images[0] * CyclicBraid(BraidWord::sigma(3, 1).pow(2));
  CHECK(bu::verify_witness(psi, theta).passed() == false);

  auto psi2 = bu::witness_prop1(theta);
  psi2.images[0] = CyclicBraid(psi2.images[0].word() * BraidWord::sigma(3, 1).pow(2));
  bu::WitnessVerifier v;
  CHECK(v.verify(bu::witness_prop1(theta), theta.images).passed());
  const auto bad = v.verify(psi2, theta.images);
  CHECK_FALSE(bad.passed());
  CHECK(bad.count("relator") == 1);

  // Labels are left untouched: a stale label must not be trusted by the cache.
  auto psi3 = bu::witness_prop1(theta);
  psi3.images[1] = psi3.images[1] * CyclicBraid(BraidWord::sigma(3, 2).pow(2));
  CHECK_FALSE(v.verify(psi3, theta.images).passed());
}

TEST_CASE("decide agrees with the predicate and carries checked certificates") {
  bu::WitnessVerifier verifier;
  gen::Rng rng(51);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const SurfaceCase c = kCases[gen::uniform(rng, 0, 2)];
    const SurfacePresentation s(c, gen::uniform(rng, 0, 2));
    const int n = gen::uniform(rng, 2, 8);
    std::vector<long long> img;
    for (int g = 0; g < s.generator_count(); ++g) img.push_back(gen::uniform(rng, 0, n - 1));
    const auto theta = bu::make_hom(s, n, img);
    if (!bu::is_valid_hom(theta)) {
      CHECK_THROWS_AS(bu::decide(theta), bu::InputError);
      continue;
    }
    ++checked;
    const auto d = bu::decide(theta, verifier);
    CHECK(d.has_bu_property == expected_bu(c, n, img));
    CHECK(d.has_bu_property == !d.has_witness());
    if (d.has_witness())
      CHECK(bu::verify_witness(d.witness(), theta).passed());
    else
      CHECK(d.obstruction().full_twist_eps % 2 != 0);
    if (n % 2 == 1) CHECK_FALSE(d.has_bu_property);
  }
  CHECK(checked > 50);
}

TEST_CASE("witnesses from integer lifts work for any presentation") {
  const bu::GroupPresentation klein = SurfacePresentation(SurfaceCase::NonOrientableEvenIII, 0).to_group();
  const auto psi = bu::witness_from_lift(klein, {bu::ZnElement(0, 3), bu::ZnElement(1, 3)}, 3);
  REQUIRE(psi.has_value());
  CHECK(bu::verify_witness(*psi, {bu::ZnElement(0, 3), bu::ZnElement(1, 3)}).passed());
  CHECK_FALSE(bu::witness_from_lift(klein, {bu::ZnElement(2, 4), bu::ZnElement(1, 4)}, 4).has_value());
}
