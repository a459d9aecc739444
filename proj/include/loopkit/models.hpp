#pragma once

// Small standard groups as loop tables, identity at 0.

#include <map>
#include <vector>

#include "loopkit/loop_table.hpp"

namespace loopkit::models {

inline LoopTable cyclic(std::size_t n) {
  std::vector<Element> cells(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cells[i * n + j] = static_cast<Element>((i + j) % n);
  return build_loop(n, cells);
}

/// Elementary abelian 2-group of rank k (bitwise xor).
inline LoopTable elementary_abelian_2(std::size_t k) {
  const std::size_t n = std::size_t{1} << k;
  std::vector<Element> cells(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cells[i * n + j] = static_cast<Element>(i ^ j);
  return build_loop(n, cells);
}

inline LoopTable klein() { return elementary_abelian_2(2); }

/// Group generated by permutations under composition (p*q = p after q),
/// elements numbered in lexicographic order so the identity is 0.
inline LoopTable permutation_group(const std::vector<Permutation>& generators) {
  const std::size_t degree = generators.front().size();
  auto compose = [&](const Permutation& p, const Permutation& q) {
    Permutation r(degree);
    for (std::size_t i = 0; i < degree; ++i) r[i] = p[q[i]];
    return r;
  };
  std::vector<Permutation> elems{identity_permutation(degree)};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : generators) {
      auto next = compose(g, elems[i]);
      if (std::find(elems.begin(), elems.end(), next) == elems.end()) elems.push_back(next);
    }
  }
  std::sort(elems.begin(), elems.end());
  std::map<Permutation, Element> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<Element>(i);
  const std::size_t n = elems.size();
  std::vector<Element> cells(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cells[i * n + j] = index.at(compose(elems[i], elems[j]));
  return build_loop(n, cells);
}

inline LoopTable symmetric3() { return permutation_group({{1, 0, 2}, {1, 2, 0}}); }

/// Dihedral group of order 8, symmetries of a square.
inline LoopTable dihedral4() { return permutation_group({{1, 2, 3, 0}, {0, 3, 2, 1}}); }

/// Quaternion group; element 2k+s encodes (-1)^s times unit k of {1, i, j, k}.
inline LoopTable quaternion8() {
  // unit products: table[a][b] = {sign, unit}
  static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<Element> cells(64);
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const int ua = a / 2, ub = b / 2;
      const int sign = (a % 2) ^ (b % 2) ^ kSign[ua][ub];
      cells[a * 8 + b] = static_cast<Element>(kUnit[ua][ub] * 2 + sign);
    }
  }
  return build_loop(8, cells);
}

struct NamedModel {
  std::string name;
  LoopTable table;
  bool abelian;
};

/// Z_1..Z_8, Klein, S3, D4, Q8, Z2^3.
inline std::vector<NamedModel> standard_groups() {
  std::vector<NamedModel> out;
  for (std::size_t n = 1; n <= 8; ++n) out.push_back({"Z" + std::to_string(n), cyclic(n), true});
  out.push_back({"Klein", klein(), true});
  out.push_back({"S3", symmetric3(), false});
  out.push_back({"D4", dihedral4(), false});
  out.push_back({"Q8", quaternion8(), false});
  out.push_back({"Z2^3", elementary_abelian_2(3), true});
  return out;
}

}  // namespace loopkit::models
