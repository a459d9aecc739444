#include <catch2/catch.hpp>

#include "support.hpp"

using namespace loopkit;
using testing_support::l5;
using testing_support::to_map;
using testing_support::to_oracle;

TEST_CASE("principal isotope of L5 at (0,1)") {
  const auto iso = principal_isotope(l5(), {0, 1});
  CHECK(iso.identity() == 1);
  CHECK(principal_isotope(l5(), {0, 0}) == l5());
}

TEST_CASE("every principal isotope is a loop with identity f*g") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& t : all_reduced_loops(n)) {
      const auto o = to_oracle(t);
      for (Element f = 0; f < n; ++f) {
        for (Element g = 0; g < n; ++g) {
          const auto iso = principal_isotope(t, {f, g});
          REQUIRE(iso.identity() == t.mul(f, g));
          REQUIRE(to_oracle(iso).m == oracle::principal_isotope(o, f, g).m);
        }
      }
    }
  }
}

TEST_CASE("isotopes of groups are isomorphic to the group") {
  for (const auto& g : models::standard_groups()) {
    const std::size_t n = g.table.order();
    for (Element f = 0; f < n; ++f) {
      for (Element h = 0; h < n; ++h) CHECK(is_isomorphic(principal_isotope(g.table, {f, h}), g.table));
    }
  }
}

TEST_CASE("universality matches the oracle") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& t : all_reduced_loops(n)) {
      for (const auto& alpha : enumerate_selfmaps(n, AlphaClass::All)) {
        CHECK(is_universal(catalog_law("alpha_elasticity"), t, alpha).holds ==
              oracle::universally(to_oracle(t), to_map(alpha), oracle::alpha_elastic));
      }
    }
  }
  for (const auto& t : all_reduced_loops(5)) {
    const auto id = identity_map(5);
    CHECK(is_universal(catalog_law("alpha_elasticity"), t, id).holds ==
          oracle::universally(to_oracle(t), to_map(id), oracle::alpha_elastic));
    CHECK(is_universal(catalog_law("generalized_moufang"), t, id).holds ==
          oracle::universally(to_oracle(t), to_map(id), oracle::generalized_moufang));
  }
}

TEST_CASE("universality failures name the isotope") {
  const auto v = is_universal(catalog_law("flexibility"), l5(), identity_map(5));
  REQUIRE_FALSE(v.holds);
  REQUIRE(v.witness->isotope);
  CHECK(format_witness(*v.witness).find("(f=") != std::string::npos);
}

TEST_CASE("the isotope-parameter identity equals direct universality") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& t : all_reduced_loops(n)) {
      const auto a = audit_universality_theorem(t, identity_map(n));
      CHECK(a.isotope_form == a.direct);
    }
  }
}

TEST_CASE("nuclei match the oracle") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& t : all_reduced_loops(n)) {
      const auto r = nuclei(t);
      const auto o = oracle::nuclei(to_oracle(t));
      auto same = [](const std::vector<Element>& a, const std::vector<int>& b) {
        return std::vector<int>(a.begin(), a.end()) == b;
      };
      CHECK(same(r.n_lambda, o.left));
      CHECK(same(r.n_mu, o.middle));
      CHECK(same(r.n_rho, o.right));
      CHECK(same(r.nucleus, o.nucleus));
      CHECK(same(r.center, o.center));
      CHECK(is_subgroup(t, r.nucleus));
    }
  }
}

TEST_CASE("nuclei of L5 and of groups") {
  const auto r = nuclei(l5());
  CHECK(r.nucleus == std::vector<Element>{0});
  CHECK(r.center == std::vector<Element>{0});
  const auto s3 = nuclei(models::symmetric3());
  CHECK(s3.nucleus.size() == 6);
  CHECK(s3.center == std::vector<Element>{0});
  CHECK(nuclei(models::quaternion8()).center.size() == 2);
}
