#include <catch2/catch.hpp>
#include <filesystem>
#include <sstream>

#include "support.hpp"

using namespace loopkit;
using testing_support::fixture;

namespace {

Error parse_failure(const std::string& text) {
  std::istringstream in(text);
  try {
    parse_loop_file(in);
  } catch (const Error& e) {
    return e;
  }
  FAIL("accepted: " << text);
  return Error(Errc::InvalidArgument, "");
}

}  // namespace

TEST_CASE("fixtures round-trip through save and load") {
  const auto dir = std::filesystem::temp_directory_path() / "loopkit_roundtrip";
  std::filesystem::create_directories(dir);
  std::size_t count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(LOOPKIT_FIXTURES)) {
    if (entry.path().extension() != ".loop" || entry.path().stem().string().rfind("bad_", 0) == 0) continue;
    INFO(entry.path());
    const LoopFile original = load_loop_file(entry.path());
    const auto out = dir / entry.path().filename();
    save_table(original.table, original.alpha, out, original.name);
    const LoopFile again = load_loop_file(out);
    CHECK(again.table == original.table);
    CHECK(again.alpha == original.alpha);
    CHECK(again.name == original.name);
    ++count;
  }
  CHECK(count >= 10);
  std::filesystem::remove_all(dir);
}

TEST_CASE("comments, blank lines, alpha and name") {
  std::istringstream in("# c\n\norder 3\n0 1 2\n1 2 0\n  2 0 1  \nalpha 0 2 1\nname Z3 twisted\n");
  const auto f = parse_loop_file(in);
  CHECK(f.table == models::cyclic(3));
  REQUIRE(f.alpha);
  CHECK(f.alpha->image == std::vector<Element>{0, 2, 1});
  CHECK(f.name == "Z3 twisted");
}

TEST_CASE("format errors carry the line number") {
  auto e = parse_failure("order 2\n0 1\n1 1\n");
  CHECK(e.code() == Errc::RowNotPermutation);
  CHECK(e.line == 3u);
  e = parse_failure("ordr 2\n0 1\n1 0\n");
  CHECK(e.code() == Errc::FormatError);
  CHECK(e.line == 1u);
  e = parse_failure("order 2\n0 1\n1 x\n");
  CHECK(e.code() == Errc::FormatError);
  CHECK(e.line == 3u);
  e = parse_failure("order 3\n0 1 2\n1 2 0\n");
  CHECK(e.code() == Errc::FormatError);
  e = parse_failure("order 2\n0 1\n1 0\nalpha 0 2\n");
  CHECK(e.line == 4u);
  e = parse_failure("order 2\n0 1\n1 0\nbogus\n");
  CHECK(e.code() == Errc::FormatError);
  CHECK_THROWS_AS(load_loop_file("/nonexistent/x.loop"), Error);
}
