#include <doctest.h>

#include "bu/errors.hpp"
#include "bu/permutation.hpp"
#include "generators.hpp"

using bu::Permutation;

TEST_CASE("products read left to right") {
  const Permutation p = Permutation::transposition(3, 1, 2);
  const Permutation q = Permutation::transposition(3, 2, 3);
  const Permutation pq = p * q;
  for (int i = 1; i <= 3; ++i) CHECK(pq(i) == q(p(i)));
  CHECK(pq.to_cycle_string() == "(1,3,2)");
}

TEST_CASE("cyclic generator is (1,n,...,2)") {
  CHECK(Permutation::cyclic_generator(4).to_cycle_string() == "(1,4,3,2)");
  CHECK(Permutation::cyclic_generator(4) == Permutation::parse_cycles(4, "(1,4,3,2)"));
  CHECK(Permutation::cyclic_generator(5).pow(5).is_identity());
  CHECK(Permutation::cyclic_generator(5).pow(-1) == Permutation::cyclic_generator(5).inverse());
}

TEST_CASE("parsing and validation") {
  CHECK(Permutation::parse_cycles(3, "()").is_identity());
  CHECK(Permutation::parse_cycles(5, "(1,2)(3,5)")(5) == 3);
  CHECK_THROWS_AS(Permutation::from_images({1, 1, 2}), bu::InputError);
  CHECK_THROWS_AS(Permutation::parse_cycles(3, "(1,4)"), bu::InputError);
}

TEST_CASE("inverse and powers agree on random permutations") {
  gen::Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = gen::uniform(rng, 1, 8);
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(img.begin(), img.end(), rng);
    const Permutation p = Permutation::from_images(img);
    CHECK((p * p.inverse()).is_identity());
    CHECK(p.pow(3) == p * p * p);
    CHECK(Permutation::parse_cycles(n, p.to_cycle_string()) == p);
  }
}

TEST_CASE("generated groups") {
  const Permutation t = Permutation::transposition(4, 1, 2);
  const Permutation c = Permutation::cyclic_generator(4);
  CHECK(bu::generated_group({t, c}).size() == 24);
  CHECK(bu::generated_group({c}).size() == 4);
  CHECK_THROWS_AS(bu::generated_group({t, c}, 10), bu::UnsupportedError);
}
