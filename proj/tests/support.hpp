#pragma once

#include <string>
#include <vector>

#include "loopkit/loopkit.hpp"
#include "oracles.hpp"

namespace testing_support {

inline oracle::Table to_oracle(const loopkit::LoopTable& t) {
  oracle::Table r{static_cast<int>(t.order()), {}};
  for (auto v : t.cells()) r.m.push_back(v);
  return r;
}

inline loopkit::LoopTable from_oracle(const oracle::Table& t) {
  std::vector<loopkit::Element> cells(t.m.begin(), t.m.end());
  return loopkit::build_loop(static_cast<std::size_t>(t.n), cells);
}

inline oracle::Map to_map(const loopkit::SelfMap& a) { return oracle::Map(a.image.begin(), a.image.end()); }

inline loopkit::LoopTable l5() {
  return loopkit::build_loop({{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 3, 4, 0, 1}, {3, 4, 1, 2, 0}, {4, 2, 0, 1, 3}});
}

inline std::string fixture(const std::string& name) { return std::string(LOOPKIT_FIXTURES) + "/" + name; }

}  // namespace testing_support
