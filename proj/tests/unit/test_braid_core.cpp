#include <doctest.h>

#include <algorithm>

#include "artin_oracle.hpp"
#include "bu/braid_word.hpp"
#include "bu/errors.hpp"
#include "bu/garside.hpp"
#include "generators.hpp"

using bu::BraidWord;

namespace {
BraidWord W(const char* text) { return BraidWord::parse(text); }
}  // namespace

TEST_CASE("permutation examples") {
  CHECK(bu::permutation(W("n=2 1")).to_cycle_string() == "(1,2)");
  CHECK(bu::permutation(W("n=4 1 2 3")).to_cycle_string() == "(1,4,3,2)");
  CHECK(bu::permutation(W("n=3 1 -1")).is_identity());
}

TEST_CASE("exponent sum examples") {
  CHECK(bu::exponent_sum(BraidWord(3)) == 0);
  CHECK(bu::exponent_sum(W("n=2 1 1")) == 2);
  const BraidWord g4 = BraidWord::cyclic_generator(4).pow(4);
  CHECK(g4.length() == 12);
  CHECK(bu::exponent_sum(g4) == 12);
}

TEST_CASE("equality examples") {
  CHECK(bu::equal(W("n=3 1 2 1"), W("n=3 2 1 2")));
  CHECK(bu::equal(W("n=4 1 3"), W("n=4 3 1")));
  CHECK_FALSE(bu::equal(W("n=2 1"), W("n=2 -1")));
  CHECK_THROWS_AS(bu::equal(W("n=2 1"), W("n=3 1")), bu::InputError);
}

TEST_CASE("word parsing") {
  CHECK(W("n=3 1 2 -1").to_string() == "n=3 1 2 -1");
  CHECK(W("n=1").empty());
  CHECK_THROWS_AS(W("n=3 3"), bu::InputError);
  CHECK_THROWS_AS(W("n=3 0"), bu::InputError);
  CHECK_THROWS_AS(W("3 1"), bu::InputError);
  CHECK_THROWS_AS(W("n=3 x"), bu::InputError);
}

TEST_CASE("half twist squared is the full twist") {
  for (int n = 2; n <= 7; ++n) {
    const BraidWord d = BraidWord::half_twist(n);
    CHECK(bu::equal(d * d, BraidWord::cyclic_generator(n).pow(n)));
    CHECK(bu::permutation(d)(1) == n);
  }
}

TEST_CASE("normal forms are left-weighted with proper factors") {
  gen::Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = gen::uniform(rng, 2, 6);
    const BraidWord w = gen::random_word_upto(rng, n, 40);
    const bu::NormalForm nf = bu::normal_form(w);
    const auto& f = nf.factors();
    for (std::size_t i = 0; i < f.size(); ++i) {
      CHECK_FALSE(f[i].is_identity());
      CHECK_FALSE(bu::permutation(BraidWord::half_twist(n)) == f[i]);
      if (i + 1 < f.size()) {
        const auto fin = bu::finishing_set(f[i]);
        for (int s : bu::starting_set(f[i + 1])) CHECK(std::find(fin.begin(), fin.end(), s) != fin.end());
      }
    }
    CHECK(bu::equal(nf.to_word(), w));
  }
}

TEST_CASE("normal form product and inverse are homomorphic") {
  gen::Rng rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = gen::uniform(rng, 2, 6);
    const BraidWord a = gen::random_word_upto(rng, n, 30);
    const BraidWord b = gen::random_word_upto(rng, n, 30);
    CHECK(bu::normal_form(a * b) == bu::normal_form(a) * bu::normal_form(b));
    CHECK(bu::normal_form(a.inverse()) == bu::normal_form(a).inverse());
    CHECK((bu::normal_form(a) * bu::normal_form(a).inverse()).is_identity());
  }
}

TEST_CASE("equality is an equivalence and a congruence") {
  gen::Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = gen::uniform(rng, 2, 6);
    const BraidWord a = gen::random_word_upto(rng, n, 40);
    const BraidWord b = gen::relation_variant(rng, a, 30);
    const BraidWord c = gen::relation_variant(rng, b, 30);
    const BraidWord d = gen::random_word_upto(rng, n, 40);
    CHECK(bu::equal(a, a));
    CHECK(bu::equal(a, b) == bu::equal(b, a));
    REQUIRE(bu::equal(a, b));
    REQUIRE(bu::equal(b, c));
    CHECK(bu::equal(a, c));
    CHECK(bu::equal(d * a, d * b));
    CHECK(bu::equal(a * d, b * d));
    CHECK(bu::equal(a, d) == bu::equal(d, a));
  }
}

TEST_CASE("permutation and exponent sum factor through equality") {
  gen::Rng rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = gen::uniform(rng, 2, 6);
    const BraidWord a = gen::random_word_upto(rng, n, 40);
    const BraidWord b = gen::relation_variant(rng, a, 40);
    CHECK(bu::permutation(a) == bu::permutation(b));
    CHECK(bu::exponent_sum(a) == bu::exponent_sum(b));
    const BraidWord t = a * b.inverse();
    REQUIRE(bu::is_trivial(t));
    CHECK(bu::permutation(t).is_identity());
    CHECK(bu::exponent_sum(t) == 0);
  }
}

TEST_CASE("Garside equality agrees with the Artin action") {
  gen::Rng rng(15);
  int equal_pairs = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = gen::uniform(rng, 2, 5);
    const BraidWord a = gen::random_word_upto(rng, n, 25);
    BraidWord b = trial % 2 == 0 ? gen::relation_variant(rng, a, 20) : gen::random_word_upto(rng, n, 25);
    if (trial % 4 == 2 && !b.empty()) {
      auto letters = b.letters();
      letters.back() = -letters.back();
      b = BraidWord(n, letters);
    }
    const bool garside = bu::equal(a, b);
    equal_pairs += garside;
    CHECK(garside == oracle::artin_equal(a, b));
  }
  CHECK(equal_pairs > 200);
}
