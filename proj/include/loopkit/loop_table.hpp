#pragma once

// Finite loops stored as Cayley tables, with both division tables derived
// once at construction.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "loopkit/error.hpp"

namespace loopkit {

using Element = std::uint16_t;
using Permutation = std::vector<Element>;

inline constexpr std::size_t kMaxTableOrder = 255;

class LoopTable {
 public:
  std::size_t order() const noexcept { return n_; }
  Element identity() const noexcept { return identity_; }

  Element mul(Element x, Element y) const noexcept { return mul_[x * n_ + y]; }
  /// x\y, the unique q with x*q = y.
  Element ldiv(Element x, Element y) const noexcept { return ldiv_[x * n_ + y]; }
  /// x/y, the unique q with q*y = x.
  Element rdiv(Element x, Element y) const noexcept { return rdiv_[x * n_ + y]; }

  /// Row-major multiplication table.
  std::span<const Element> cells() const noexcept { return mul_; }

  std::vector<std::vector<Element>> rows() const {
    std::vector<std::vector<Element>> out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      out[i].assign(mul_.begin() + i * n_, mul_.begin() + (i + 1) * n_);
    }
    return out;
  }

  bool operator==(const LoopTable& other) const noexcept {
    return n_ == other.n_ && mul_ == other.mul_;
  }

 private:
  LoopTable(std::size_t n, std::vector<Element> mul, std::vector<Element> ldiv,
            std::vector<Element> rdiv, Element identity)
      : n_(n), mul_(std::move(mul)), ldiv_(std::move(ldiv)), rdiv_(std::move(rdiv)), identity_(identity) {}

  friend LoopTable build_loop(std::size_t n, std::span<const Element> cells);

  std::size_t n_;
  std::vector<Element> mul_;
  std::vector<Element> ldiv_;
  std::vector<Element> rdiv_;
  Element identity_;
};

namespace detail {

inline Error table_error(Errc code, const std::string& msg, std::optional<std::size_t> row,
                         std::optional<std::size_t> col) {
  Error err(code, msg);
  err.row = row;
  err.col = col;
  return err;
}

}  // namespace detail

/// Validates a row-major n*n table and derives divisions and the identity.
/// Rows are checked before columns, each in increasing index order.
inline LoopTable build_loop(std::size_t n, std::span<const Element> cells) {
  if (n == 0 || n > kMaxTableOrder || cells.size() != n * n) {
    throw detail::table_error(Errc::NotSquare, "table is not a non-empty square", std::nullopt, std::nullopt);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (cells[i * n + j] >= n) {
        throw detail::table_error(Errc::EntryOutOfRange,
                                  "entry out of range at (" + std::to_string(i) + "," + std::to_string(j) + ")", i, j);
      }
    }
  }
  std::vector<Element> ldiv(n * n), rdiv(n * n);
  std::vector<char> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      const Element v = cells[i * n + j];
      if (seen[v]) {
        throw detail::table_error(Errc::RowNotPermutation, "row " + std::to_string(i) + " is not a permutation", i, j);
      }
      seen[v] = 1;
      ldiv[i * n + v] = static_cast<Element>(j);
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      const Element v = cells[i * n + j];
      if (seen[v]) {
        throw detail::table_error(Errc::ColNotPermutation, "column " + std::to_string(j) + " is not a permutation", i, j);
      }
      seen[v] = 1;
      rdiv[v * n + j] = static_cast<Element>(i);
    }
  }
  for (std::size_t e = 0; e < n; ++e) {
    bool unit = true;
    for (std::size_t x = 0; x < n && unit; ++x) {
      unit = cells[e * n + x] == x && cells[x * n + e] == x;
    }
    if (unit) {
      return LoopTable(n, std::vector<Element>(cells.begin(), cells.end()), std::move(ldiv), std::move(rdiv),
                       static_cast<Element>(e));
    }
  }
  throw detail::table_error(Errc::NoIdentity, "Latin square has no two-sided identity", std::nullopt, std::nullopt);
}

/// Accepts arbitrary integers so out-of-range and negative entries are reported
/// rather than truncated.
inline LoopTable build_loop(const std::vector<std::vector<long long>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0 || n > kMaxTableOrder) {
    throw detail::table_error(Errc::NotSquare, "table is not a non-empty square", std::nullopt, std::nullopt);
  }
  std::vector<Element> cells;
  cells.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw detail::table_error(Errc::NotSquare, "row " + std::to_string(i) + " has wrong length", i, std::nullopt);
    }
    for (std::size_t j = 0; j < n; ++j) {
      const long long v = rows[i][j];
      if (v < 0 || static_cast<unsigned long long>(v) >= n) {
        throw detail::table_error(Errc::EntryOutOfRange,
                                  "entry out of range at (" + std::to_string(i) + "," + std::to_string(j) + ")", i, j);
      }
      cells.push_back(static_cast<Element>(v));
    }
  }
  return build_loop(n, cells);
}

inline LoopTable build_loop(std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<std::vector<long long>> copy;
  for (const auto& r : rows) copy.emplace_back(r);
  return build_loop(copy);
}

inline Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), Element{0});
  return p;
}

inline Permutation inverse_permutation(const Permutation& p) {
  Permutation inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<Element>(i);
  return inv;
}

inline bool is_permutation_of_range(std::span<const Element> image) {
  std::vector<char> seen(image.size());
  for (Element v : image) {
    if (v >= image.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

/// The table transported along `perm`: perm(x) * perm(y) = perm(x*y).
inline LoopTable relabel(const LoopTable& t, const Permutation& perm) {
  const std::size_t n = t.order();
  if (perm.size() != n || !is_permutation_of_range(perm)) {
    throw Error(Errc::InvalidArgument, "relabeling is not a permutation of the table's elements");
  }
  std::vector<Element> cells(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      cells[perm[x] * n + perm[y]] = perm[t.mul(static_cast<Element>(x), static_cast<Element>(y))];
    }
  }
  return build_loop(n, cells);
}

/// The transposition exchanging 0 and the identity; the identity map if it is already 0.
inline Permutation normalizing_permutation(const LoopTable& t) {
  Permutation p = identity_permutation(t.order());
  std::swap(p[0], p[t.identity()]);
  return p;
}

inline LoopTable normalize_identity(const LoopTable& t) {
  if (t.identity() == 0) return t;
  return relabel(t, normalizing_permutation(t));
}

/// Left and right translations L_x(y) = x*y and R_x(y) = y*x.
inline std::pair<Permutation, Permutation> translations(const LoopTable& t, Element x) {
  const std::size_t n = t.order();
  Permutation left(n), right(n);
  for (std::size_t y = 0; y < n; ++y) {
    left[y] = t.mul(x, static_cast<Element>(y));
    right[y] = t.mul(static_cast<Element>(y), x);
  }
  return {left, right};
}

/// Left inverse e/x and right inverse x\e.
inline std::pair<Element, Element> inverses(const LoopTable& t, Element x) {
  return {t.rdiv(t.identity(), x), t.ldiv(x, t.identity())};
}

}  // namespace loopkit
