#pragma once

#include <optional>
#include <string>
#include <vector>

#include "loopkit/loop_table.hpp"

namespace loopkit {

struct PropertyFailure {
  std::string property;
  std::vector<Element> assignment;

  bool operator==(const PropertyFailure&) const = default;
};

struct PropertyReport {
  bool associative = true;
  bool commutative = true;
  bool lip = true;
  bool rip = true;
  bool ip = true;
  bool flexible = true;
  bool exponent_two = true;
  bool power_associative = true;
  /// One entry per false flag, in the field order above.
  std::vector<PropertyFailure> failures;

  const PropertyFailure* failure(const std::string& property) const {
    for (const auto& f : failures) {
      if (f.property == property) return &f;
    }
    return nullptr;
  }
};

/// Closure of {x} under multiplication, sorted. In a finite loop this is the
/// subloop generated by x.
inline std::vector<Element> single_generated_closure(std::size_t n, std::span<const Element> cells, Element x) {
  std::vector<char> in(n, 0);
  std::vector<Element> members{x};
  in[x] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (Element v : {cells[members[i] * n + members[j]], cells[members[j] * n + members[i]]}) {
        if (!in[v]) {
          in[v] = 1;
          members.push_back(v);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

inline PropertyReport basic_properties(const LoopTable& t) {
  PropertyReport r;
  const std::size_t n = t.order();
  const Element e = t.identity();
  auto E = [](std::size_t v) { return static_cast<Element>(v); };

  auto first_pair = [&](auto&& pred) -> std::optional<std::vector<Element>> {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (!pred(E(x), E(y))) return std::vector<Element>{E(x), E(y)};
    return std::nullopt;
  };

  for (std::size_t x = 0; x < n && r.associative; ++x)
    for (std::size_t y = 0; y < n && r.associative; ++y)
      for (std::size_t z = 0; z < n && r.associative; ++z)
        if (t.mul(t.mul(E(x), E(y)), E(z)) != t.mul(E(x), t.mul(E(y), E(z)))) {
          r.associative = false;
          r.failures.push_back({"associative", {E(x), E(y), E(z)}});
        }

  if (auto w = first_pair([&](Element x, Element y) { return t.mul(x, y) == t.mul(y, x); })) {
    r.commutative = false;
    r.failures.push_back({"commutative", *w});
  }
  auto lip_w = first_pair([&](Element x, Element y) { return t.mul(t.rdiv(e, x), t.mul(x, y)) == y; });
  if (lip_w) {
    r.lip = false;
    r.failures.push_back({"lip", *lip_w});
  }
  auto rip_w = first_pair([&](Element x, Element y) { return t.mul(t.mul(y, x), t.ldiv(x, e)) == y; });
  if (rip_w) {
    r.rip = false;
    r.failures.push_back({"rip", *rip_w});
  }
  if (lip_w || rip_w) {
    r.ip = false;
    r.failures.push_back({"ip", lip_w ? *lip_w : *rip_w});
  }
  if (auto w = first_pair([&](Element x, Element y) { return t.mul(t.mul(x, y), x) == t.mul(x, t.mul(y, x)); })) {
    r.flexible = false;
    r.failures.push_back({"flexible", *w});
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (t.mul(E(x), E(x)) != e) {
      r.exponent_two = false;
      r.failures.push_back({"exponent_two", {E(x)}});
      break;
    }
  }
  // Witness: generator followed by the first non-associating triple inside its closure.
  for (std::size_t x = 0; x < n && r.power_associative; ++x) {
    const auto sub = single_generated_closure(n, t.cells(), E(x));
    for (Element a : sub)
      for (Element b : sub)
        for (Element c : sub)
          if (r.power_associative && t.mul(t.mul(a, b), c) != t.mul(a, t.mul(b, c))) {
            r.power_associative = false;
            r.failures.push_back({"power_associative", {E(x), a, b, c}});
          }
  }
  return r;
}

namespace detail {

// Backtracking search for a bijection phi with phi(a[x][y]) = b[phi x][phi y].
// Elements are matched only against elements with the same closure size.
inline std::optional<Permutation> find_groupoid_isomorphism(std::size_t n, std::span<const Element> a,
                                                            std::span<const Element> b,
                                                            std::optional<std::pair<Element, Element>> fixed) {
  std::vector<std::size_t> profile_a(n), profile_b(n);
  for (std::size_t x = 0; x < n; ++x) {
    profile_a[x] = single_generated_closure(n, a, static_cast<Element>(x)).size();
    profile_b[x] = single_generated_closure(n, b, static_cast<Element>(x)).size();
  }
  {
    auto sa = profile_a, sb = profile_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  constexpr Element kUnset = 0xFFFF;
  Permutation phi(n, kUnset);
  std::vector<char> used(n, 0);
  std::vector<Element> assigned;

  auto consistent = [&](Element) {
    for (Element x : assigned) {
      for (Element y : assigned) {
        const Element xy = a[x * n + y];
        const Element target = b[phi[x] * n + phi[y]];
        if (phi[xy] != kUnset) {
          if (phi[xy] != target) return false;
        } else if (used[target]) {
          return false;
        }
      }
    }
    return true;
  };

  auto place = [&](Element x, Element v) {
    phi[x] = v;
    used[v] = 1;
    assigned.push_back(x);
  };
  auto unplace = [&](Element x) {
    used[phi[x]] = 0;
    phi[x] = kUnset;
    assigned.pop_back();
  };

  if (fixed) {
    if (profile_a[fixed->first] != profile_b[fixed->second]) return std::nullopt;
    place(fixed->first, fixed->second);
    if (!consistent(fixed->first)) return std::nullopt;
  }

  auto search = [&](auto&& self, std::size_t x) -> bool {
    if (x == n) return true;
    if (phi[x] != kUnset) return self(self, x + 1);
    const auto ex = static_cast<Element>(x);
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v] || profile_a[x] != profile_b[v]) continue;
      place(ex, static_cast<Element>(v));
      if (consistent(ex) && self(self, x + 1)) return true;
      unplace(ex);
    }
    return false;
  };
  if (search(search, 0)) return phi;
  return std::nullopt;
}

}  // namespace detail

/// An isomorphism a -> b, if any. Identities are matched to each other.
inline std::optional<Permutation> is_isomorphic(const LoopTable& a, const LoopTable& b) {
  if (a.order() != b.order()) throw Error(Errc::OrderMismatch, "tables have different orders");
  return detail::find_groupoid_isomorphism(a.order(), a.cells(), b.cells(), std::pair{a.identity(), b.identity()});
}

struct CanonicalForm {
  std::string key;
  /// Relabeling that produces the minimal table: key = relabel(t, perm).
  Permutation perm;
};

/// Lexicographically least row-major table over relabelings fixing 0.
/// Expects a normalized table; key bytes are the raw element values.
inline CanonicalForm canonical_form(const LoopTable& t) {
  const LoopTable norm = normalize_identity(t);
  const std::size_t n = norm.order();
  // inv[new] = old; try every ordering of 1..n-1 as preimages.
  Permutation inv = identity_permutation(n);
  std::string best;
  Permutation best_inv;
  std::string current(n * n, '\0');
  do {
    Permutation fwd = inverse_permutation(inv);
    bool smaller = best.empty();
    bool pruned = false;
    for (std::size_t i = 0; i < n && !pruned; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto v = static_cast<char>(fwd[norm.mul(inv[i], inv[j])]);
        current[i * n + j] = v;
        if (!smaller) {
          if (v < best[i * n + j]) {
            smaller = true;
          } else if (v > best[i * n + j]) {
            pruned = true;
            break;
          }
        }
      }
    }
    if (!pruned && smaller) {
      best = current;
      best_inv = inv;
    }
  } while (n > 1 && std::next_permutation(inv.begin() + 1, inv.end()));
  Permutation perm = inverse_permutation(best_inv);
  if (t.identity() != 0) {
    // compose with the normalizing swap applied first
    const Permutation swap = normalizing_permutation(t);
    Permutation composed(n);
    for (std::size_t x = 0; x < n; ++x) composed[x] = perm[swap[x]];
    perm = composed;
  }
  return {best, perm};
}

inline std::string canonical_key(const LoopTable& t) { return canonical_form(t).key; }

/// Key rendered as row-major digits separated by nothing (orders up to 10) or commas.
inline std::string format_key(const std::string& key, std::size_t n) {
  std::string out;
  for (std::size_t i = 0; i < key.size(); ++i) {
    const auto v = static_cast<unsigned char>(key[i]);
    if (n > 10 && i > 0) out += ',';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace loopkit
