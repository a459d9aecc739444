#pragma once

// Enumeration of reduced Cayley tables (identity 0, first row and column in
// natural order) by cell-by-cell backtracking over row-major free cells, with
// row/column bitmasks for the Latin property.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "loopkit/check.hpp"
#include "loopkit/loop_table.hpp"
#include "loopkit/selfmap.hpp"

namespace loopkit {

inline constexpr std::size_t kMaxEnumerationOrder = 7;

inline void require_enumerable_order(std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "order must be at least 1");
  if (n > kMaxEnumerationOrder) {
    throw Error(Errc::OrderTooLarge, "order " + std::to_string(n) + " exceeds the exhaustive limit of " +
                                         std::to_string(kMaxEnumerationOrder));
  }
}

/// Partially filled table; undecided cells hold kUnknown. Divisions are
/// answered only when the solving cell is already decided.
struct PartialTableModel {
  static constexpr bool kPartial = true;
  std::size_t n;
  const Element* cells;
  Element unit() const { return 0; }
  Element mul(Element x, Element y) const { return cells[x * n + y]; }
  Element ldiv(Element x, Element y) const {
    for (std::size_t q = 0; q < n; ++q)
      if (cells[x * n + q] == y) return static_cast<Element>(q);
    return kUnknown;
  }
  Element rdiv(Element x, Element y) const {
    for (std::size_t q = 0; q < n; ++q)
      if (cells[q * n + y] == x) return static_cast<Element>(q);
    return kUnknown;
  }
  Element alpha(Element) const { return kUnknown; }
};

class ReducedLoopSearch {
 public:
  struct Outcome {
    std::uint64_t nodes = 0;
    std::uint64_t leaves = 0;
    bool complete = true;
  };

  /// Search-tree prefixes at a fixed depth, in depth-first order. `events`
  /// replays the sequential visit order: -1 for a node above the frontier,
  /// i >= 0 for the subtree rooted at prefixes[i].
  struct Frontier {
    std::size_t depth = 0;
    std::vector<std::vector<Element>> prefixes;
    std::vector<std::int64_t> events;
  };

  /// Constraints without alpha are checked on every completed row except the
  /// last; all constraints are checked on the finished table (alpha = identity).
  ReducedLoopSearch(std::size_t n, std::vector<const IdentityLaw*> constraints) : n_(n) {
    require_enumerable_order(n);
    for (const IdentityLaw* law : constraints) {
      all_.emplace_back(*law);
      if (!law->uses_alpha) incremental_.emplace_back(*law);
    }
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t free_cells() const noexcept { return (n_ - 1) * (n_ - 1); }

  /// Explores the subtree below `prefix` (values for the first free cells),
  /// visiting at most `node_cap` nodes. `visit` sees each accepted table.
  Outcome run(std::span<const Element> prefix, std::optional<std::uint64_t> node_cap,
              const std::function<void(const LoopTable&)>& visit) const {
    State s = initial_state();
    for (std::size_t p = 0; p < prefix.size(); ++p) assign(s, p, prefix[p]);
    Outcome out;
    Walk w{s, out, node_cap, &visit, nullptr, 0};
    dfs(w, prefix.size());
    return out;
  }

  Frontier frontier(std::size_t depth) const {
    State s = initial_state();
    Outcome out;
    Frontier f;
    f.depth = depth;
    Walk w{s, out, std::nullopt, nullptr, &f, depth};
    dfs(w, 0);
    return f;
  }

 private:
  struct State {
    std::vector<Element> cells;
    std::vector<std::uint32_t> row_used;
    std::vector<std::uint32_t> col_used;
  };

  struct Walk {
    State& s;
    Outcome& out;
    std::optional<std::uint64_t> cap;
    const std::function<void(const LoopTable&)>* visit;
    Frontier* frontier;
    std::size_t frontier_depth;
  };

  State initial_state() const {
    State s{std::vector<Element>(n_ * n_, kUnknown), std::vector<std::uint32_t>(n_, 0),
            std::vector<std::uint32_t>(n_, 0)};
    for (std::size_t i = 0; i < n_; ++i) {
      s.cells[i] = static_cast<Element>(i);
      s.cells[i * n_] = static_cast<Element>(i);
      s.row_used[i] |= 1u << i;
      s.col_used[i] |= 1u << i;
    }
    s.row_used[0] = s.col_used[0] = (1u << n_) - 1;
    return s;
  }

  std::pair<std::size_t, std::size_t> cell_of(std::size_t pos) const {
    return {1 + pos / (n_ - 1), 1 + pos % (n_ - 1)};
  }

  void assign(State& s, std::size_t pos, Element v) const {
    const auto [r, c] = cell_of(pos);
    s.cells[r * n_ + c] = v;
    s.row_used[r] |= 1u << v;
    s.col_used[c] |= 1u << v;
  }

  void unassign(State& s, std::size_t pos) const {
    const auto [r, c] = cell_of(pos);
    const Element v = s.cells[r * n_ + c];
    s.cells[r * n_ + c] = kUnknown;
    s.row_used[r] &= ~(1u << v);
    s.col_used[c] &= ~(1u << v);
  }

  bool rows_consistent(const State& s) const {
    const PartialTableModel model{n_, s.cells.data()};
    for (const auto& law : incremental_)
      if (!law.consistent(model, n_)) return false;
    return true;
  }

  void dfs(Walk& w, std::size_t pos) const {
    if (w.frontier && pos == w.frontier_depth) {
      std::vector<Element> prefix(pos);
      for (std::size_t p = 0; p < pos; ++p) {
        const auto [r, c] = cell_of(p);
        prefix[p] = w.s.cells[r * n_ + c];
      }
      w.frontier->events.push_back(static_cast<std::int64_t>(w.frontier->prefixes.size()));
      w.frontier->prefixes.push_back(std::move(prefix));
      return;
    }
    if (w.cap && w.out.nodes >= *w.cap) {
      w.out.complete = false;
      return;
    }
    ++w.out.nodes;
    if (w.frontier) w.frontier->events.push_back(-1);
    if (pos == free_cells()) {
      leaf(w);
      return;
    }
    const auto [r, c] = cell_of(pos);
    std::uint32_t avail = ~(w.s.row_used[r] | w.s.col_used[c]) & ((1u << n_) - 1);
    while (avail) {
      const auto v = static_cast<Element>(__builtin_ctz(avail));
      avail &= avail - 1;
      assign(w.s, pos, v);
      if (c != n_ - 1 || r == n_ - 1 || rows_consistent(w.s)) dfs(w, pos + 1);
      unassign(w.s, pos);
      if (!w.out.complete) return;
    }
  }

  void leaf(Walk& w) const {
    const LoopTable t = build_loop(n_, w.s.cells);
    const SelfMap id = identity_map(n_);
    for (const auto& law : all_)
      if (law.first_failure(TableModel{t, id}, n_)) return;
    ++w.out.leaves;
    if (w.visit && *w.visit) (*w.visit)(t);
  }

  std::size_t n_;
  std::vector<CompiledLaw> all_;
  std::vector<CompiledLaw> incremental_;
};

/// Visits every reduced loop of order n satisfying all constraints; returns the count.
inline std::uint64_t enumerate_loops(std::size_t n, const std::vector<const IdentityLaw*>& constraints,
                                     const std::function<void(const LoopTable&)>& visitor,
                                     std::optional<std::uint64_t> node_limit = std::nullopt) {
  const ReducedLoopSearch search(n, constraints);
  const auto out = search.run({}, node_limit, visitor);
  if (!out.complete) {
    throw Error(Errc::NodeLimitExceeded, "node limit of " + std::to_string(*node_limit) + " exceeded");
  }
  return out.leaves;
}

inline std::uint64_t enumerate_loops(std::size_t n, const std::function<void(const LoopTable&)>& visitor = {}) {
  return enumerate_loops(n, {}, visitor);
}

inline std::vector<LoopTable> all_reduced_loops(std::size_t n) {
  std::vector<LoopTable> out;
  enumerate_loops(n, [&](const LoopTable& t) { out.push_back(t); });
  return out;
}

}  // namespace loopkit
