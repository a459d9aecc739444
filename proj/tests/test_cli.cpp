#include <catch2/catch.hpp>
#include <sstream>

#include "cli.hpp"
#include "support.hpp"

using testing_support::fixture;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = loopkit::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("check exit codes and witness") {
  CHECK(run({"check", fixture("z3.loop"), "--law", "flexibility"}).code == 0);
  const auto r = run({"check", fixture("l5.loop"), "--law", "flexibility"});
  CHECK(r.code == 2);
  CHECK(r.out.find("x=2 y=1") != std::string::npos);
}

TEST_CASE("enumerate prints the count") {
  const auto r = run({"enumerate", "--order", "5"});
  CHECK(r.code == 0);
  CHECK(r.out == "count=56\n");
}

TEST_CASE("exit code matrix") {
  struct Row {
    const char* file;
    const char* law;
    int check;
    int universal;
  };
  const Row rows[] = {
      {"z3.loop", "associativity", 0, 0},       {"l5.loop", "associativity", 2, 2},
      {"klein.loop", "exponent_two", 0, 0},     {"z3.loop", "exponent_two", 2, 2},
      {"l5.loop", "middle_bol", 2, 2},          {"z4_shifted.loop", "commutativity", 0, 0},
      {"l5.loop", "x*e = x", 0, 0},             {"l5.loop", "lip", 2, 2},
      {"s3.loop", "commutativity", 2, 2},       {"s3.loop", "moufang", 0, 0},
  };
  for (const auto& row : rows) {
    INFO(row.file << " " << row.law);
    CHECK(run({"check", fixture(row.file), "--law", row.law}).code == row.check);
    CHECK(run({"universal", fixture(row.file), "--law", row.law}).code == row.universal);
  }
  CHECK(run({"check", fixture("l5.loop"), "--law", "nonsense"}).code == 1);
  CHECK(run({"check", fixture("missing.loop"), "--law", "lip"}).code == 1);
  CHECK(run({"validate", fixture("bad_row.loop")}).code == 1);
  CHECK(run({"check", fixture("l5.loop")}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"audit", "--theorem", "Z9", "--orders", "1..3"}).code == 1);
}

TEST_CASE("unknown names list what exists") {
  const auto r = run({"check", fixture("l5.loop"), "--law", "nonsense"});
  CHECK(r.err.find("middle_bol") != std::string::npos);
  const auto a = run({"audit", "--theorem", "Z9", "--orders", "1..3"});
  CHECK(a.err.find("C3.1") != std::string::npos);
}

TEST_CASE("nuclei normalizes a moved identity with a notice") {
  const auto r = run({"nuclei", fixture("z4_shifted.loop")});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("notice: identity 2", 0) == 0);
  CHECK(run({"nuclei", fixture("z3.loop")}).out.find("notice") == std::string::npos);
}

TEST_CASE("json documents carry the same witnesses as text") {
  const std::vector<std::vector<std::string>> commands = {
      {"check", fixture("l5.loop"), "--law", "flexibility"},
      {"check", fixture("l5.loop"), "--law", "moufang"},
      {"universal", fixture("l5.loop"), "--law", "flexibility"},
      {"universal", fixture("l5_flexible.loop"), "--law", "flexibility"},
      {"check", fixture("z3.loop"), "--law", "exponent_two"},
      {"props", fixture("l5.loop")},
  };
  for (auto args : commands) {
    INFO(args[0] << " " << args[1]);
    const auto text = run(args);
    args.insert(args.begin(), "--json");
    const auto json = run(args);
    CHECK(json.code == text.code);
    const auto doc = loopkit::Json::parse(json.out);
    for (const char* key : {"command", "inputs", "result", "witnesses", "certificate", "runtime_ms"}) {
      CHECK(doc.contains(key));
    }
    for (const auto& w : doc["witnesses"]) {
      CHECK(text.out.find(w["text"].get<std::string>()) != std::string::npos);
    }
    if (text.code == 2) CHECK_FALSE(doc["witnesses"].empty());
  }
}

TEST_CASE("hunt output does not depend on jobs") {
  const std::vector<std::string> base{"hunt", "--order", "5", "--forbid", "flexibility", "--max-witnesses", "3"};
  auto with_jobs = base;
  with_jobs.insert(with_jobs.end(), {"--jobs", "4"});
  const auto a = run(base), b = run(with_jobs), c = run(base);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(a.out.find("certificate order=5") != std::string::npos);
}

TEST_CASE("alpha class search for check") {
  const auto r = run({"check", fixture("z3.loop"), "--law", "generalized_moufang", "--alpha-class", "all"});
  CHECK(r.code == 0);
  CHECK(r.out.find("27 of 27") != std::string::npos);
}

TEST_CASE("isotopes subcommand") {
  const auto one = run({"isotopes", fixture("l5.loop"), "--f", "0", "--g", "1"});
  CHECK(one.code == 0);
  CHECK(one.out.find("identity=1") != std::string::npos);
  const auto all = run({"isotopes", fixture("z3.loop")});
  CHECK(all.code == 0);
  CHECK(std::count(all.out.begin(), all.out.end(), '\n') == 9);
  CHECK(run({"isotopes", fixture("z3.loop"), "--f", "5", "--g", "0"}).code == 1);
}
