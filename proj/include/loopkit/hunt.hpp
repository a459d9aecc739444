#pragma once

// Counterexample search over reduced loops (and self-maps) of a fixed order.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "loopkit/catalog.hpp"
#include "loopkit/enumerate.hpp"
#include "loopkit/isotope.hpp"
#include "loopkit/properties.hpp"

namespace loopkit {

struct SearchSpec {
  std::size_t order = 1;
  /// Catalog names; a "universal:" prefix asks for the law in every principal isotope.
  std::vector<std::string> require;
  std::vector<std::string> forbid;
  AlphaClass alpha_class = AlphaClass::Identity;
  std::size_t max_witnesses = 10;
  std::optional<std::uint64_t> node_limit;

  bool operator==(const SearchSpec&) const = default;
};

struct ExhaustionCertificate {
  std::size_t order = 0;
  /// Complete tables produced by the enumerator (after incremental pruning).
  std::uint64_t tables_enumerated = 0;
  /// (table, alpha) pairs examined.
  std::uint64_t instances = 0;
  /// Pairs satisfying the spec; may exceed the number of witnesses kept.
  std::uint64_t matches = 0;
  std::uint64_t nodes = 0;
  bool complete = true;
  SearchSpec spec;
  std::size_t witnesses_found = 0;

  bool operator==(const ExhaustionCertificate&) const = default;
};

struct HuntWitness {
  LoopTable table;
  SelfMap alpha;
  std::string key;

  bool operator==(const HuntWitness& o) const { return table == o.table && alpha == o.alpha; }
};

struct HuntResult {
  std::vector<HuntWitness> witnesses;
  ExhaustionCertificate certificate;
};

inline constexpr std::string_view kUniversalPrefix = "universal:";

struct LawRef {
  std::string name;
  const IdentityLaw* law = nullptr;
  bool universal = false;

  bool holds(const LoopTable& t, const SelfMap& alpha) const {
    return universal ? is_universal(*law, t, alpha).holds : check_identity(*law, t, alpha).holds;
  }
};

inline LawRef resolve_law(const std::string& name) {
  LawRef ref{name, nullptr, false};
  std::string base = name;
  if (base.rfind(kUniversalPrefix, 0) == 0) {
    ref.universal = true;
    base = base.substr(kUniversalPrefix.size());
  }
  ref.law = find_law(base);
  if (!ref.law) throw Error(Errc::UnknownLaw, "unknown law '" + name + "'");
  return ref;
}

namespace detail {

struct SubtreeResult {
  ReducedLoopSearch::Outcome outcome;
  std::uint64_t instances = 0;
  std::uint64_t matches = 0;
  std::vector<HuntWitness> kept;
};

class HuntRunner {
 public:
  explicit HuntRunner(const SearchSpec& spec) : spec_(spec) {
    require_enumerable_order(spec.order);
    for (const auto& name : spec.require) require_.push_back(resolve_law(name));
    for (const auto& name : spec.forbid) forbid_.push_back(resolve_law(name));
    for (const auto& r : require_) {
      for (const auto& f : forbid_) {
        if (r.name == f.name) throw Error(Errc::InvalidArgument, "law '" + r.name + "' is both required and forbidden");
      }
    }
    std::vector<const IdentityLaw*> incremental;
    for (const auto& r : require_) {
      uses_alpha_ = uses_alpha_ || r.law->uses_alpha;
      if (!r.universal && !r.law->uses_alpha) incremental.push_back(r.law);
    }
    for (const auto& f : forbid_) uses_alpha_ = uses_alpha_ || f.law->uses_alpha;
    search_.emplace(spec.order, incremental);
  }

  const ReducedLoopSearch& search() const { return *search_; }

  SubtreeResult run(std::span<const Element> prefix, std::optional<std::uint64_t> cap) const {
    SubtreeResult res;
    res.outcome = search_->run(prefix, cap, [&](const LoopTable& t) { examine(t, res); });
    return res;
  }

 private:
  void examine(const LoopTable& t, SubtreeResult& res) const {
    const AlphaClass cls = uses_alpha_ ? spec_.alpha_class : AlphaClass::Identity;
    for_each_selfmap(t.order(), cls, &t, [&](const SelfMap& alpha) {
      ++res.instances;
      for (const auto& r : require_)
        if (!r.holds(t, alpha)) return true;
      for (const auto& f : forbid_)
        if (f.holds(t, alpha)) return true;
      ++res.matches;
      if (res.kept.size() < spec_.max_witnesses) res.kept.push_back({t, alpha, canonical_key(t)});
      return true;
    });
  }

  SearchSpec spec_;
  std::vector<LawRef> require_;
  std::vector<LawRef> forbid_;
  bool uses_alpha_ = false;
  std::optional<ReducedLoopSearch> search_;
};

inline void absorb(HuntResult& into, SubtreeResult&& part, std::size_t max_witnesses) {
  into.certificate.nodes += part.outcome.nodes;
  into.certificate.tables_enumerated += part.outcome.leaves;
  into.certificate.instances += part.instances;
  into.certificate.matches += part.matches;
  for (auto& w : part.kept) {
    if (into.witnesses.size() < max_witnesses) into.witnesses.push_back(std::move(w));
  }
}

inline void finish(HuntResult& result, const SearchSpec& spec) {
  // Keep the first max_witnesses in search order, report them by canonical key.
  std::stable_sort(result.witnesses.begin(), result.witnesses.end(), [](const HuntWitness& a, const HuntWitness& b) {
    if (a.key != b.key) return a.key < b.key;
    if (a.table.cells().size() != b.table.cells().size()) return a.table.cells().size() < b.table.cells().size();
    const auto ca = a.table.cells(), cb = b.table.cells();
    if (!std::equal(ca.begin(), ca.end(), cb.begin())) {
      return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
    }
    return a.alpha.image < b.alpha.image;
  });
  result.certificate.order = spec.order;
  result.certificate.spec = spec;
  result.certificate.witnesses_found = result.witnesses.size();
}

}  // namespace detail

/// Runs the search with `jobs` workers. Output does not depend on `jobs`: the
/// tree is split at a fixed depth and subtrees are merged in depth-first order,
/// replaying the sequential node count so a node limit truncates identically.
inline HuntResult hunt(const SearchSpec& spec, std::size_t jobs = 1) {
  const detail::HuntRunner runner(spec);
  HuntResult result;
  const auto& search = runner.search();

  if (jobs <= 1 || search.free_cells() == 0) {
    auto part = runner.run({}, spec.node_limit);
    result.certificate.complete = part.outcome.complete;
    detail::absorb(result, std::move(part), spec.max_witnesses);
    detail::finish(result, spec);
    return result;
  }

  ReducedLoopSearch::Frontier frontier;
  for (std::size_t depth = 1; depth <= search.free_cells(); ++depth) {
    frontier = search.frontier(depth);
    if (frontier.prefixes.size() >= 4 * jobs) break;
  }

  std::vector<detail::SubtreeResult> parts(frontier.prefixes.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < parts.size(); i = next++) {
      parts[i] = runner.run(frontier.prefixes[i], spec.node_limit);
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t j = 0; j < std::min(jobs, parts.size()); ++j) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  std::uint64_t counter = 0;
  const auto limit = spec.node_limit;
  for (const std::int64_t event : frontier.events) {
    if (event < 0) {
      if (limit && counter >= *limit) {
        result.certificate.complete = false;
        break;
      }
      ++counter;
      ++result.certificate.nodes;
      continue;
    }
    auto& part = parts[static_cast<std::size_t>(event)];
    if (limit && (!part.outcome.complete || counter + part.outcome.nodes > *limit)) {
      // The sequential run would stop inside this subtree: redo it with the
      // exact remaining budget.
      auto cut = runner.run(frontier.prefixes[static_cast<std::size_t>(event)], *limit - counter);
      counter += cut.outcome.nodes;
      result.certificate.complete = cut.outcome.complete;
      detail::absorb(result, std::move(cut), spec.max_witnesses);
      if (!result.certificate.complete) break;
      continue;
    }
    counter += part.outcome.nodes;
    detail::absorb(result, std::move(part), spec.max_witnesses);
  }
  detail::finish(result, spec);
  return result;
}

/// Sequential and parallel runs agree on witnesses and certificate.
inline bool verify_parallel_determinism(const SearchSpec& spec, std::size_t jobs = 4) {
  const HuntResult seq = hunt(spec, 1);
  const HuntResult par = hunt(spec, jobs);
  return seq.witnesses == par.witnesses && seq.certificate == par.certificate;
}

}  // namespace loopkit
