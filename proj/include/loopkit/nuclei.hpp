#pragma once

#include <vector>

#include "loopkit/loop_table.hpp"

namespace loopkit {

struct NucleiReport {
  std::vector<Element> n_lambda;
  std::vector<Element> n_mu;
  std::vector<Element> n_rho;
  std::vector<Element> nucleus;
  std::vector<Element> center;

  bool operator==(const NucleiReport&) const = default;
};

/// Membership masks, indexed by element: left[x] iff x.yz = xy.z for all y, z; etc.
struct NucleusMasks {
  std::vector<char> left, middle, right;
};

inline NucleusMasks nucleus_masks(const LoopTable& t) {
  const std::size_t n = t.order();
  NucleusMasks m{std::vector<char>(n, 1), std::vector<char>(n, 1), std::vector<char>(n, 1)};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const auto ex = static_cast<Element>(x), ey = static_cast<Element>(y), ez = static_cast<Element>(z);
        if (t.mul(ex, t.mul(ey, ez)) != t.mul(t.mul(ex, ey), ez)) {
          m.left[x] = 0;
          m.middle[y] = 0;
          m.right[z] = 0;
        }
      }
  return m;
}

inline NucleiReport nuclei(const LoopTable& t) {
  const std::size_t n = t.order();
  const NucleusMasks m = nucleus_masks(t);
  NucleiReport r;
  for (std::size_t x = 0; x < n; ++x) {
    const auto ex = static_cast<Element>(x);
    if (m.left[x]) r.n_lambda.push_back(ex);
    if (m.middle[x]) r.n_mu.push_back(ex);
    if (m.right[x]) r.n_rho.push_back(ex);
    if (m.left[x] && m.middle[x] && m.right[x]) {
      r.nucleus.push_back(ex);
      bool central = true;
      for (std::size_t y = 0; y < n && central; ++y) {
        central = t.mul(ex, static_cast<Element>(y)) == t.mul(static_cast<Element>(y), ex);
      }
      if (central) r.center.push_back(ex);
    }
  }
  return r;
}

/// Closed under multiplication, contains the identity, and every member has
/// its two-sided inverse inside.
inline bool is_subgroup(const LoopTable& t, const std::vector<Element>& members) {
  std::vector<char> in(t.order(), 0);
  for (Element x : members) in[x] = 1;
  if (!in[t.identity()]) return false;
  for (Element x : members) {
    const Element inv = t.ldiv(x, t.identity());
    if (!in[inv] || t.mul(inv, x) != t.identity()) return false;
    for (Element y : members)
      if (!in[t.mul(x, y)]) return false;
  }
  return true;
}

}  // namespace loopkit
