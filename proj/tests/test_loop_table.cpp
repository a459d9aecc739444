#include <catch2/catch.hpp>

#include "support.hpp"

using namespace loopkit;
using testing_support::l5;

namespace {

Errc build_error(std::vector<std::vector<long long>> rows, Error* out = nullptr) {
  try {
    build_loop(rows);
  } catch (const Error& e) {
    if (out) *out = e;
    return e.code();
  }
  FAIL("table was accepted");
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("build_loop accepts Z3 and finds identity") {
  const auto t = build_loop({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  CHECK(t.order() == 3);
  CHECK(t.identity() == 0);
  CHECK(t.mul(2, 2) == 1);
}

TEST_CASE("build_loop rejects malformed tables") {
  CHECK(build_error({{0, 1}, {1}}) == Errc::NotSquare);
  CHECK(build_error({{0, 1}, {1, 2}}) == Errc::EntryOutOfRange);
  CHECK(build_error({{0, 1}, {1, -1}}) == Errc::EntryOutOfRange);
  CHECK(build_error({{0, 1, 2}, {1, 2, 0}, {2, 0, 0}}) == Errc::RowNotPermutation);
  CHECK(build_error({{0, 1, 2}, {1, 2, 0}, {1, 2, 0}}) == Errc::ColNotPermutation);
  // Latin square without identity.
  CHECK(build_error({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}) == Errc::NoIdentity);
}

TEST_CASE("row error carries the offending position") {
  Error e(Errc::InvalidArgument, "");
  build_error({{0, 1, 2}, {1, 2, 0}, {2, 0, 0}}, &e);
  REQUIRE(e.row);
  CHECK(*e.row == 2);
}

TEST_CASE("identity away from 0 is allowed") {
  const auto t = build_loop({{1, 0}, {0, 1}});
  CHECK(t.identity() == 1);
  const auto n = normalize_identity(t);
  CHECK(n.identity() == 0);
  CHECK(n.mul(1, 1) == 0);
}

TEST_CASE("divisions on L5") {
  const auto t = l5();
  CHECK(t.rdiv(0, 2) == 4);
  CHECK(t.mul(4, 2) == 0);
  CHECK(t.ldiv(2, 0) == 3);
  const auto [L, R] = translations(t, 2);
  CHECK(L == Permutation{2, 3, 4, 0, 1});
  CHECK(R == Permutation{2, 3, 4, 1, 0});
  CHECK(inverses(t, 2) == std::pair<Element, Element>{4, 3});
}

TEST_CASE("division round trips on every pair, all loops up to order 5") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& t : all_reduced_loops(n)) {
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          REQUIRE(t.mul(x, t.ldiv(x, y)) == y);
          REQUIRE(t.ldiv(x, t.mul(x, y)) == y);
          REQUIRE(t.mul(t.rdiv(y, x), x) == y);
          REQUIRE(t.rdiv(t.mul(y, x), x) == y);
        }
      }
    }
  }
}

TEST_CASE("relabel is an isomorphism onto its image") {
  const auto t = l5();
  const Permutation p{0, 3, 1, 4, 2};
  const auto r = relabel(t, p);
  for (Element x = 0; x < 5; ++x)
    for (Element y = 0; y < 5; ++y) CHECK(r.mul(p[x], p[y]) == p[t.mul(x, y)]);
  CHECK(relabel(r, inverse_permutation(p)) == t);
  CHECK_THROWS_AS(relabel(t, Permutation{0, 0, 1, 2, 3}), Error);
}
