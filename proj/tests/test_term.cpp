#include <catch2/catch.hpp>
#include <random>

#include "support.hpp"

using namespace loopkit;
using testing_support::l5;
using testing_support::to_map;
using testing_support::to_oracle;

namespace {

Errc parse_error(const std::string& text, std::optional<std::size_t>* pos = nullptr) {
  try {
    parse_identity(text);
  } catch (const Error& e) {
    if (pos) *pos = e.position;
    return e.code();
  }
  FAIL("parsed: " << text);
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("parser is left-associative with one precedence level") {
  const auto law = parse_identity("x*y\\z/w = e");
  CHECK(to_string(law.lhs) == "((x*y)\\z)/w");
  CHECK(law.vars == std::vector<char>{'w', 'x', 'y', 'z'});
  CHECK(to_string(parse_term("a(x*y)")) == "a(x*y)");
  CHECK_FALSE(parse_identity("x = x").uses_alpha);
  CHECK(parse_identity("a(x) = x").uses_alpha);
}

TEST_CASE("printing and reparsing gives the same law") {
  for (const auto& entry : builtin_catalog()) {
    INFO(entry.law.name);
    const auto again = parse_identity(to_string(entry.law), entry.law.name);
    CHECK(again == entry.law);
  }
}

TEST_CASE("parse errors") {
  std::optional<std::size_t> pos;
  CHECK(parse_error("x*y", &pos) == Errc::SyntaxError);
  CHECK(parse_error("x*(y = x", &pos) == Errc::SyntaxError);
  CHECK(parse_error("x** y = x") == Errc::SyntaxError);
  CHECK(parse_error("a*x = x") == Errc::ReservedName);
  CHECK(parse_error("X*y = y") == Errc::SyntaxError);
  CHECK(parse_error("x = y = z") == Errc::SyntaxError);
}

TEST_CASE("check_identity witness is the first failing tuple") {
  const auto v = check_identity(catalog_law("flexibility"), l5());
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness);
  CHECK(format_witness(*v.witness) == "x=2 y=1");
  CHECK(check_identity(catalog_law("flexibility"), models::cyclic(3)).holds);
}

TEST_CASE("compiled evaluation matches tree walking on random assignments") {
  std::mt19937 rng(7);
  const auto loops = all_reduced_loops(5);
  for (const auto& entry : builtin_catalog()) {
    const auto& law = entry.law;
    for (int trial = 0; trial < 40; ++trial) {
      const auto& t = loops[rng() % loops.size()];
      std::vector<Element> img(5);
      for (auto& v : img) v = static_cast<Element>(rng() % 5);
      const auto alpha = make_selfmap(img);
      std::map<char, Element> env;
      for (char c : law.vars) env[c] = static_cast<Element>(rng() % 5);
      const bool tree = eval_term(law.lhs, t, alpha, env) == eval_term(law.rhs, t, alpha, env);
      const auto v = check_identity(law, t, alpha);
      if (v.holds) CHECK(tree);
      if (!v.holds) {
        std::map<char, Element> wenv;
        for (const auto& [c, x] : v.witness->assignment) wenv[c] = x;
        CHECK(eval_term(law.lhs, t, alpha, wenv) != eval_term(law.rhs, t, alpha, wenv));
      }
    }
  }
}

TEST_CASE("catalog laws agree with hand-written oracles on all loops up to order 5") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& t : all_reduced_loops(n)) {
      const auto o = to_oracle(t);
      const auto holds = [&](const char* name) { return check_identity(catalog_law(name), t).holds; };
      CHECK(holds("associativity") == oracle::associative(o));
      CHECK(holds("commutativity") == oracle::commutative(o));
      CHECK(holds("flexibility") == oracle::flexible(o));
      CHECK(holds("moufang") == oracle::moufang(o));
      CHECK(holds("moufang_2") == oracle::moufang_2(o));
      CHECK(holds("moufang_3") == oracle::moufang_3(o));
      CHECK(holds("left_bol") == oracle::left_bol(o));
      CHECK(holds("right_bol") == oracle::right_bol(o));
      CHECK(holds("middle_bol") == oracle::middle_bol(o));
      CHECK(holds("lip") == oracle::lip(o));
      CHECK(holds("rip") == oracle::rip(o));
      CHECK(holds("exponent_two") == oracle::exponent_two(o));
    }
  }
}

TEST_CASE("alpha laws agree with oracles for every self-map on order 4") {
  for (const auto& t : all_reduced_loops(4)) {
    const auto o = to_oracle(t);
    for (const auto& alpha : enumerate_selfmaps(4, AlphaClass::All)) {
      const auto a = to_map(alpha);
      CHECK(check_identity(catalog_law("alpha_elasticity"), t, alpha).holds == oracle::alpha_elastic(o, a));
      CHECK(check_identity(catalog_law("generalized_moufang"), t, alpha).holds ==
            oracle::generalized_moufang(o, a));
      CHECK(check_identity(catalog_law("right_alpha_alternative"), t, alpha).holds ==
            oracle::right_alpha_alternative(o, a));
    }
  }
}

TEST_CASE("order mismatch between table and map is rejected") {
  CHECK_THROWS_AS(check_identity(catalog_law("alpha_elasticity"), l5(), identity_map(3)), Error);
  CHECK_THROWS_AS(catalog_law("no_such_law"), Error);
}
