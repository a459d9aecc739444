#include <catch2/catch.hpp>
#include <set>

#include "support.hpp"

using namespace loopkit;
using testing_support::l5;
using testing_support::to_oracle;

TEST_CASE("L5 basic properties and their witnesses") {
  const auto r = basic_properties(l5());
  CHECK_FALSE(r.associative);
  CHECK_FALSE(r.flexible);
  REQUIRE(r.failure("associative"));
  CHECK(r.failure("associative")->assignment == std::vector<Element>{1, 1, 2});
  REQUIRE(r.failure("flexible"));
  CHECK(r.failure("flexible")->assignment == std::vector<Element>{2, 1});
  CHECK(r.failure("commutative"));
}

TEST_CASE("property flags match the oracle on every loop up to order 5") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& t : all_reduced_loops(n)) {
      const auto o = to_oracle(t);
      const auto r = basic_properties(t);
      CHECK(r.associative == oracle::associative(o));
      CHECK(r.commutative == oracle::commutative(o));
      CHECK(r.flexible == oracle::flexible(o));
      CHECK(r.lip == oracle::lip(o));
      CHECK(r.rip == oracle::rip(o));
      CHECK(r.ip == (r.lip && r.rip));
      CHECK(r.exponent_two == oracle::exponent_two(o));
      CHECK(r.failures.size() == 8u - (r.associative + r.commutative + r.lip + r.rip + r.ip + r.flexible +
                                        r.exponent_two + r.power_associative));
    }
  }
}

TEST_CASE("standard groups are groups with the expected commutativity") {
  for (const auto& g : models::standard_groups()) {
    INFO(g.name);
    const auto r = basic_properties(g.table);
    CHECK(r.associative);
    CHECK(r.power_associative);
    CHECK(r.commutative == g.abelian);
    CHECK(oracle::associative(to_oracle(g.table)));
  }
  CHECK(models::quaternion8().order() == 8);
  CHECK(models::dihedral4().order() == 8);
  CHECK_FALSE(is_isomorphic(models::quaternion8(), models::dihedral4()));
}

TEST_CASE("canonical key agrees with brute-force isomorphism up to order 5") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto loops = all_reduced_loops(n);
    std::vector<std::string> keys;
    for (const auto& t : loops) keys.push_back(canonical_key(t));
    for (std::size_t i = 0; i < loops.size(); ++i) {
      for (std::size_t j = i; j < loops.size(); ++j) {
        const bool iso = oracle::isomorphic(to_oracle(loops[i]), to_oracle(loops[j]));
        REQUIRE((keys[i] == keys[j]) == iso);
        REQUIRE(is_isomorphic(loops[i], loops[j]).has_value() == iso);
      }
    }
  }
}

TEST_CASE("isomorphism classes of small loops") {
  const std::size_t expected[] = {0, 1, 1, 1, 2, 6, 109};
  for (std::size_t n = 1; n <= 6; ++n) {
    std::set<std::string> classes;
    enumerate_loops(n, [&](const LoopTable& t) { classes.insert(canonical_key(t)); });
    CHECK(classes.size() == expected[n]);
  }
}

TEST_CASE("is_isomorphic returns a working map") {
  const auto t = l5();
  const Permutation p{0, 4, 2, 1, 3};
  const auto r = relabel(t, p);
  const auto m = is_isomorphic(t, r);
  REQUIRE(m);
  for (Element x = 0; x < 5; ++x)
    for (Element y = 0; y < 5; ++y) CHECK((*m)[t.mul(x, y)] == r.mul((*m)[x], (*m)[y]));
  CHECK_THROWS_AS(is_isomorphic(t, models::cyclic(3)), Error);
}

TEST_CASE("canonical key ignores where the identity sits") {
  const auto z4 = models::cyclic(4);
  const auto moved = relabel(z4, Permutation{2, 1, 0, 3});
  REQUIRE(moved.identity() == 2);
  CHECK(canonical_key(moved) == canonical_key(z4));
}
