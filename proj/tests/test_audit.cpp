#include <catch2/catch.hpp>

#include "support.hpp"

using namespace loopkit;

TEST_CASE("C3.1 on order 3 flags Z3") {
  const auto r = audit_theorem("C3.1", {3}, AlphaClass::Identity);
  CHECK(r.premise_holds == 1);
  CHECK(r.conclusion_violations == 1);
  CHECK(r.status() == "VIOLATED");
  REQUIRE(r.witnesses.size() == 1);
  CHECK(r.witnesses[0].key == format_key(canonical_key(models::cyclic(3)), 3));
  CHECK(r.witnesses[0].claim == "middle_bol => exponent_two");
}

TEST_CASE("one witness per isomorphism class") {
  const auto r = audit_theorem("C3.1", {4, 5}, AlphaClass::Identity);
  CHECK(r.conclusion_violations == 3 + 6);
  CHECK(r.witnesses.size() == 2);
}

TEST_CASE("audits expected to hold over small orders") {
  for (const char* id : {"T4.3", "T4.1", "T4.2", "C4.1", "T5.1", "T5.2", "L5.1", "C5.1", "T2.1", "T3.2i"}) {
    INFO(id);
    const auto r = audit_theorem(id, {1, 2, 3, 4, 5}, AlphaClass::Identity);
    CHECK(r.conclusion_violations == 0);
    CHECK(r.premise_holds > 0);
  }
  const auto t52 = audit_theorem("T5.2", {1, 2, 3, 4}, AlphaClass::Bijective);
  CHECK(t52.conclusion_violations == 0);
  CHECK(t52.instances_checked == 1 + 2 + 6 + 4 * 24);
}

TEST_CASE("empty premise gives INCONCLUSIVE") {
  // With alpha = identity the side condition forces exponent 2, which Z3 lacks.
  const auto r = audit_theorem("T3.3a", {3}, AlphaClass::Identity);
  CHECK(r.instances_checked == 1);
  CHECK(r.premise_holds == 0);
  CHECK(r.status() == "INCONCLUSIVE");
  CHECK(r.claims[0].status() == "INCONCLUSIVE");
  CHECK(audit_theorem("T3.3a", {2}, AlphaClass::Identity).status() == "CONFIRMED");
}

TEST_CASE("T3.1 agreement between direct and uni readings") {
  const auto r = audit_theorem("T3.1", {1, 2, 3, 4, 5}, AlphaClass::Identity);
  REQUIRE(r.agreement);
  CHECK(r.agreement->instances == 63);
  CHECK(r.agreement->agree == r.agreement->instances);
  std::uint64_t direct = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& t : oracle::reduced_loops(static_cast<int>(n))) {
      direct += oracle::universally(t, oracle::identity_map(t.n), oracle::alpha_elastic);
    }
  }
  CHECK(r.agreement->direct_holds == direct);
}

TEST_CASE("audit reports are reproducible") {
  const auto a = audit_theorem("C3.1", {1, 2, 3, 4, 5}, AlphaClass::Identity);
  const auto b = audit_theorem("C3.1", {1, 2, 3, 4, 5}, AlphaClass::Identity);
  CHECK(audit_json(a, false).dump() == audit_json(b, false).dump());
  CHECK(format_audit(a, false) == format_audit(b, false));
}

TEST_CASE("audit argument errors") {
  CHECK_THROWS_AS(audit_theorem("T9.9", {3}, AlphaClass::Identity), Error);
  CHECK_THROWS_AS(audit_theorem("T4.3", {8}, AlphaClass::Identity), Error);
  CHECK(theorem_ids().size() == theorem_catalog().size());
}
