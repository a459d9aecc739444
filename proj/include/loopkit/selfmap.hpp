#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "loopkit/loop_table.hpp"

namespace loopkit {

/// A self-map x -> x^alpha of an order-n set.
struct SelfMap {
  std::vector<Element> image;
  bool bijective = false;
  /// Only meaningful relative to a table; set by the enumerators that know one.
  std::optional<bool> homomorphic;

  std::size_t order() const noexcept { return image.size(); }
  Element operator()(Element x) const { return image[x]; }
  bool operator==(const SelfMap& o) const { return image == o.image; }
  bool is_identity() const {
    for (std::size_t i = 0; i < image.size(); ++i)
      if (image[i] != i) return false;
    return true;
  }
};

inline SelfMap make_selfmap(std::vector<Element> image) {
  for (Element v : image) {
    if (v >= image.size()) throw Error(Errc::InvalidArgument, "self-map image out of range");
  }
  const bool bij = is_permutation_of_range(image);
  return SelfMap{std::move(image), bij, std::nullopt};
}

inline SelfMap identity_map(std::size_t n) { return SelfMap{identity_permutation(n), true, true}; }

inline bool is_homomorphism(const SelfMap& alpha, const LoopTable& t) {
  if (alpha.order() != t.order()) throw Error(Errc::OrderMismatch, "self-map and table orders differ");
  const std::size_t n = t.order();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto ex = static_cast<Element>(x), ey = static_cast<Element>(y);
      if (alpha(t.mul(ex, ey)) != t.mul(alpha(ex), alpha(ey))) return false;
    }
  return true;
}

/// alpha transported along a relabeling: result(perm x) = perm(alpha x).
inline SelfMap conjugate(const SelfMap& alpha, const Permutation& perm) {
  std::vector<Element> img(alpha.order());
  for (std::size_t x = 0; x < alpha.order(); ++x) img[perm[x]] = perm[alpha.image[x]];
  SelfMap out{std::move(img), alpha.bijective, alpha.homomorphic};
  return out;
}

enum class AlphaClass { Identity, Bijective, All, Homomorphic };

inline std::string to_string(AlphaClass c) {
  switch (c) {
    case AlphaClass::Identity: return "identity";
    case AlphaClass::Bijective: return "bijective";
    case AlphaClass::All: return "all";
    case AlphaClass::Homomorphic: return "homomorphic";
  }
  return {};
}

inline AlphaClass parse_alpha_class(const std::string& s) {
  if (s == "identity") return AlphaClass::Identity;
  if (s == "bijective") return AlphaClass::Bijective;
  if (s == "all") return AlphaClass::All;
  if (s == "homomorphic") return AlphaClass::Homomorphic;
  throw Error(Errc::InvalidArgument, "unknown alpha class '" + s + "' (identity, bijective, all, homomorphic)");
}

/// Visits self-maps of the class in lexicographic order of their image vectors.
/// `table` is required for the homomorphic class. Returning false stops early.
inline void for_each_selfmap(std::size_t n, AlphaClass cls, const LoopTable* table,
                             const std::function<bool(const SelfMap&)>& visit) {
  if (n == 0) return;
  switch (cls) {
    case AlphaClass::Identity: {
      SelfMap id = identity_map(n);
      if (table) id.homomorphic = true;
      else id.homomorphic.reset();
      visit(id);
      return;
    }
    case AlphaClass::Bijective: {
      SelfMap m{identity_permutation(n), true, std::nullopt};
      do {
        if (table) m.homomorphic = is_homomorphism(m, *table);
        if (!visit(m)) return;
      } while (std::next_permutation(m.image.begin(), m.image.end()));
      return;
    }
    case AlphaClass::All:
    case AlphaClass::Homomorphic: {
      if (cls == AlphaClass::Homomorphic && (!table || table->order() != n)) {
        throw Error(Errc::InvalidArgument, "homomorphic self-maps need a table of matching order");
      }
      std::vector<Element> img(n, 0);
      for (;;) {
        SelfMap m{img, is_permutation_of_range(img), std::nullopt};
        if (table) m.homomorphic = is_homomorphism(m, *table);
        if (cls == AlphaClass::All || *m.homomorphic) {
          if (!visit(m)) return;
        }
        std::size_t pos = n;
        while (pos > 0) {
          --pos;
          if (++img[pos] < n) break;
          img[pos] = 0;
          if (pos == 0) return;
        }
      }
    }
  }
}

inline std::vector<SelfMap> enumerate_selfmaps(std::size_t n, AlphaClass cls, const LoopTable* table = nullptr) {
  std::vector<SelfMap> out;
  for_each_selfmap(n, cls, table, [&](const SelfMap& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

inline std::string format_selfmap(const SelfMap& alpha) {
  std::string s;
  for (std::size_t i = 0; i < alpha.order(); ++i) {
    if (i) s += ' ';
    s += std::to_string(alpha.image[i]);
  }
  return s;
}

}  // namespace loopkit
