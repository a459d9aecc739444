#include <catch2/catch.hpp>

#include "support.hpp"

using namespace loopkit;

TEST_CASE("self-map class sizes") {
  CHECK(enumerate_selfmaps(3, AlphaClass::Identity).size() == 1);
  CHECK(enumerate_selfmaps(3, AlphaClass::Bijective).size() == 6);
  CHECK(enumerate_selfmaps(3, AlphaClass::All).size() == 27);
  CHECK(enumerate_selfmaps(4, AlphaClass::All).size() == 256);
  const auto z3 = models::cyclic(3);
  CHECK(enumerate_selfmaps(3, AlphaClass::Homomorphic, &z3).size() == 3);
  const auto klein = models::klein();
  // End(Z2^2) is all 2x2 matrices over GF(2).
  CHECK(enumerate_selfmaps(4, AlphaClass::Homomorphic, &klein).size() == 16);
}

TEST_CASE("maps come in lexicographic order") {
  const auto maps = enumerate_selfmaps(3, AlphaClass::Bijective);
  for (std::size_t i = 1; i < maps.size(); ++i) CHECK(maps[i - 1].image < maps[i].image);
  CHECK(maps.front().is_identity());
}

TEST_CASE("homomorphism test and conjugation") {
  const auto z4 = models::cyclic(4);
  CHECK(is_homomorphism(make_selfmap({0, 3, 2, 1}), z4));
  CHECK_FALSE(is_homomorphism(make_selfmap({0, 2, 1, 3}), z4));
  const Permutation swap{1, 0, 2, 3};
  const auto c = conjugate(make_selfmap({0, 3, 2, 1}), swap);
  CHECK(c.image == std::vector<Element>{3, 1, 2, 0});
  CHECK(format_selfmap(c) == "3 1 2 0");
  CHECK(parse_alpha_class("bijective") == AlphaClass::Bijective);
  CHECK_THROWS_AS(parse_alpha_class("nope"), Error);
}
