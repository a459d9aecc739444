#pragma once

// Theorem audits: every claim is evaluated exhaustively on all reduced loops
// of the requested orders (and all self-maps of the requested class).
// A claim is "premise and antecedent imply consequent"; equivalences are
// split into one claim per direction.

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "loopkit/catalog.hpp"
#include "loopkit/enumerate.hpp"
#include "loopkit/isotope.hpp"
#include "loopkit/nuclei.hpp"
#include "loopkit/properties.hpp"

namespace loopkit {

/// How "alpha-elasticity is universal" is decided in premises.
enum class UniversalityReading {
  Direct,  ///< holds in every principal isotope
  Uni,     ///< the two characterizing identities uni1 and uni2 hold
};

inline std::string to_string(UniversalityReading r) { return r == UniversalityReading::Direct ? "direct" : "uni"; }

inline constexpr std::size_t kMaxAuditWitnesses = 10;

struct Outcome {
  bool holds = true;
  std::string detail;
};

/// One (table, alpha) pair with memoized law verdicts.
class AuditInstance {
 public:
  AuditInstance(const LoopTable& t, const SelfMap& alpha, UniversalityReading reading)
      : table(t), alpha(alpha), reading(reading) {}

  const LoopTable& table;
  const SelfMap& alpha;
  UniversalityReading reading;

  const Outcome& law(const std::string& name) {
    auto it = laws_.find(name);
    if (it != laws_.end()) return it->second;
    const Verdict v = check_identity(catalog_law(name), table, alpha);
    return laws_[name] = Outcome{v.holds, v.witness ? format_witness(*v.witness) : ""};
  }

  const Outcome& universal_direct() {
    if (!direct_) {
      const Verdict v = is_universal(catalog_law("alpha_elasticity"), table, alpha);
      direct_ = Outcome{v.holds, v.witness ? format_witness(*v.witness) : ""};
    }
    return *direct_;
  }

  Outcome uni_pair() {
    const Outcome& a = law("uni1");
    if (!a.holds) return {false, "uni1: " + a.detail};
    const Outcome& b = law("uni2");
    if (!b.holds) return {false, "uni2: " + b.detail};
    return {};
  }

  Outcome universal() { return reading == UniversalityReading::Direct ? universal_direct() : uni_pair(); }

  const NucleusMasks& masks() {
    if (!masks_) masks_ = nucleus_masks(table);
    return *masks_;
  }

  bool homomorphic() {
    if (!hom_) hom_ = alpha.homomorphic ? *alpha.homomorphic : is_homomorphism(alpha, table);
    return *hom_;
  }

 private:
  std::map<std::string, Outcome> laws_;
  std::optional<Outcome> direct_;
  std::optional<NucleusMasks> masks_;
  std::optional<bool> hom_;
};

using AuditPredicate = std::function<Outcome(AuditInstance&)>;

struct AuditClaim {
  std::string name;
  AuditPredicate antecedent;  ///< empty means always true
  AuditPredicate consequent;
};

struct TheoremDef {
  std::string id;
  std::string statement;
  bool uses_alpha = true;
  bool uses_universality = false;
  AuditPredicate premise;
  std::vector<AuditClaim> claims;
  bool tracks_agreement = false;
};

struct ClaimTally {
  std::string name;
  std::uint64_t antecedent_holds = 0;
  std::uint64_t violations = 0;

  std::string status() const {
    if (antecedent_holds == 0) return "INCONCLUSIVE";
    return violations ? "VIOLATED" : "CONFIRMED";
  }
};

struct AuditWitness {
  std::string claim;
  std::string key;    ///< canonical key of the table
  std::string table;  ///< the enumerated table, row-major, labels used by alpha and detail
  std::vector<Element> alpha;
  std::string detail;
};

struct AgreementStats {
  std::uint64_t instances = 0;
  std::uint64_t direct_holds = 0;
  std::uint64_t uni_holds = 0;
  std::uint64_t agree = 0;
};

struct AuditReport {
  std::string theorem_id;
  std::string statement;
  std::string scope;
  std::uint64_t instances_checked = 0;
  std::uint64_t premise_holds = 0;
  std::uint64_t conclusion_violations = 0;
  std::vector<ClaimTally> claims;
  std::vector<AuditWitness> witnesses;
  std::optional<AgreementStats> agreement;
  std::int64_t runtime_ms = 0;

  /// Vacuous premises never count as confirmation.
  std::string status() const {
    if (premise_holds == 0) return "INCONCLUSIVE";
    return conclusion_violations ? "VIOLATED" : "CONFIRMED";
  }
};

namespace audit_preds {

inline AuditPredicate law(const std::string& name) {
  return [name](AuditInstance& in) {
    Outcome o = in.law(name);
    if (!o.holds) o.detail = name + ": " + o.detail;
    return o;
  };
}

inline AuditPredicate universal() {
  return [](AuditInstance& in) {
    Outcome o = in.universal();
    if (!o.holds) o.detail = "universal alpha_elasticity: " + o.detail;
    return o;
  };
}

inline AuditPredicate universal_direct() {
  return [](AuditInstance& in) {
    Outcome o = in.universal_direct();
    if (!o.holds) o.detail = "universal alpha_elasticity: " + o.detail;
    return o;
  };
}

inline AuditPredicate uni_pair() {
  return [](AuditInstance& in) { return in.uni_pair(); };
}

inline AuditPredicate all_of(std::vector<AuditPredicate> preds) {
  return [preds = std::move(preds)](AuditInstance& in) {
    for (const auto& p : preds) {
      Outcome o = p(in);
      if (!o.holds) return o;
    }
    return Outcome{};
  };
}

inline AuditPredicate homomorphic() {
  return [](AuditInstance& in) { return in.homomorphic() ? Outcome{} : Outcome{false, "alpha is not a homomorphism"}; };
}

/// For all y: if(y) implies then(y).
inline AuditPredicate for_all_elements(std::function<bool(AuditInstance&, Element)> if_part,
                                       std::function<bool(AuditInstance&, Element)> then_part) {
  return [if_part = std::move(if_part), then_part = std::move(then_part)](AuditInstance& in) {
    for (std::size_t y = 0; y < in.table.order(); ++y) {
      const auto ey = static_cast<Element>(y);
      if (if_part(in, ey) && !then_part(in, ey)) return Outcome{false, "y=" + std::to_string(y)};
    }
    return Outcome{};
  };
}

inline bool in_left(AuditInstance& in, Element y) { return in.masks().left[y]; }
inline bool in_middle(AuditInstance& in, Element y) { return in.masks().middle[y]; }
inline bool alpha_in_right(AuditInstance& in, Element y) { return in.masks().right[in.alpha(y)]; }
inline bool always(AuditInstance&, Element) { return true; }

/// (xy.z)y^a = x(y.zy^a) for all x, z.
inline bool generalized_moufang_element(AuditInstance& in, Element y) {
  const LoopTable& t = in.table;
  const Element ya = in.alpha(y);
  for (std::size_t x = 0; x < t.order(); ++x)
    for (std::size_t z = 0; z < t.order(); ++z) {
      const auto ex = static_cast<Element>(x), ez = static_cast<Element>(z);
      if (t.mul(t.mul(t.mul(ex, y), ez), ya) != t.mul(ex, t.mul(y, t.mul(ez, ya)))) return false;
    }
  return true;
}

}  // namespace audit_preds

inline const std::vector<TheoremDef>& theorem_catalog() {
  using namespace audit_preds;
  static const std::vector<TheoremDef> catalog = [] {
    std::vector<TheoremDef> out;
    const auto gm_univ = [] { return all_of({law("generalized_moufang"), universal()}); };

    out.push_back({"T2.1", "generalized Bol: y^a in N_rho iff y in N_mu", true, false, law("generalized_bol"),
                   {{"alpha(y) in N_rho => y in N_mu", {}, for_all_elements(alpha_in_right, in_middle)},
                    {"y in N_mu => alpha(y) in N_rho", {}, for_all_elements(in_middle, alpha_in_right)}}});

    out.push_back(
        {"T2.2", "generalized Bol with f^a in N_rho: x o y = (x/g)(f\\y) is isomorphic to the loop", true, false,
         law("generalized_bol"),
         {{"f^a in N_rho => isotope(f,g) isomorphic for all g", {}, [](AuditInstance& in) {
             const std::size_t n = in.table.order();
             for (std::size_t f = 0; f < n; ++f) {
               if (!in.masks().right[in.alpha(static_cast<Element>(f))]) continue;
               for (std::size_t g = 0; g < n; ++g) {
                 const LoopTable iso =
                     principal_isotope(in.table, {static_cast<Element>(f), static_cast<Element>(g)});
                 if (!is_isomorphic(iso, in.table)) {
                   return Outcome{false, "f=" + std::to_string(f) + " g=" + std::to_string(g)};
                 }
               }
             }
             return Outcome{};
           }}}});

    out.push_back(
        {"T2.3", "generalized Bol with f in N_mu: x o y = (x*f)(f\\y) is isomorphic to the loop", true, false,
         law("generalized_bol"),
         {{"f in N_mu => groupoid (x*f)(f\\y) isomorphic", {}, [](AuditInstance& in) {
             const LoopTable& t = in.table;
             const std::size_t n = t.order();
             std::vector<Element> cells(n * n);
             for (std::size_t f = 0; f < n; ++f) {
               if (!in.masks().middle[f]) continue;
               const auto ef = static_cast<Element>(f);
               for (std::size_t x = 0; x < n; ++x)
                 for (std::size_t y = 0; y < n; ++y)
                   cells[x * n + y] = t.mul(t.mul(static_cast<Element>(x), ef), t.ldiv(ef, static_cast<Element>(y)));
               if (!detail::find_groupoid_isomorphism(n, cells, t.cells(), std::nullopt)) {
                 return Outcome{false, "f=" + std::to_string(f)};
               }
             }
             return Outcome{};
           }}}});

    {
      TheoremDef d{"T3.1", "generalized Moufang: universal alpha-elasticity iff uni1 and uni2", true, false,
                   law("generalized_moufang"),
                   {{"universal (all isotopes) => uni1 and uni2", universal_direct(), uni_pair()},
                    {"uni1 and uni2 => universal (all isotopes)", uni_pair(), universal_direct()},
                    {"universal (all isotopes) => isotope identity", universal_direct(),
                     law("isotope_alpha_elasticity")},
                    {"isotope identity => universal (all isotopes)", law("isotope_alpha_elasticity"),
                     universal_direct()}}};
      d.tracks_agreement = true;
      out.push_back(std::move(d));
    }

    out.push_back({"T3.2i", "generalized Moufang, universal alpha-elasticity: y^a in N_rho iff y in N_lambda", true,
                   true, gm_univ(),
                   {{"alpha(y) in N_rho => y in N_lambda", {}, for_all_elements(alpha_in_right, in_left)},
                    {"y in N_lambda => alpha(y) in N_rho", {}, for_all_elements(in_left, alpha_in_right)}}});

    out.push_back(
        {"T3.2ii",
         "generalized Moufang, universal alpha-elasticity: for generalized Moufang elements y, y in N_mu iff y^a in "
         "N_rho",
         true, true, gm_univ(),
         {{"gm element, y in N_mu => alpha(y) in N_rho", {},
           for_all_elements([](AuditInstance& in, Element y) { return generalized_moufang_element(in, y) && in_middle(in, y); },
                            alpha_in_right)},
          {"gm element, alpha(y) in N_rho => y in N_mu", {},
           for_all_elements(
               [](AuditInstance& in, Element y) { return generalized_moufang_element(in, y) && alpha_in_right(in, y); },
               in_middle)}}});

    for (const auto& [suffix, side] :
         std::vector<std::pair<std::string, std::string>>{{"a", "alpha_shift_condition"}, {"b", "alpha_shift_condition_b"}}) {
      out.push_back({"T3.3" + suffix,
                     "universal alpha-elasticity, homomorphic alpha, " + side +
                         ": generalized Moufang iff middle generalized Bol",
                     true, true, all_of({universal(), law(side), homomorphic()}),
                     {{"generalized_moufang => middle_generalized_bol", law("generalized_moufang"),
                       law("middle_generalized_bol")},
                      {"middle_generalized_bol => generalized_moufang", law("middle_generalized_bol"),
                       law("generalized_moufang")}}});
    }

    out.push_back({"C3.1", "Moufang: exponent 2 iff middle Bol", false, false, law("moufang"),
                   {{"exponent_two => middle_bol", law("exponent_two"), law("middle_bol")},
                    {"middle_bol => exponent_two", law("middle_bol"), law("exponent_two")}}});

    out.push_back(
        {"R3.1", "generalized Moufang, alpha = identity: the shift condition reduces to b*b = z*z, i.e. exponent 2",
         false, false,
         all_of({[](AuditInstance& in) {
                   return in.alpha.is_identity() ? Outcome{} : Outcome{false, "alpha not identity"};
                 },
                 law("generalized_moufang")}),
         {{"alpha_shift_condition => exponent_two_condition", law("alpha_shift_condition"),
           law("exponent_two_condition")},
          {"exponent_two_condition => alpha_shift_condition", law("exponent_two_condition"),
           law("alpha_shift_condition")},
          {"exponent_two_condition => exponent_two", law("exponent_two_condition"), law("exponent_two")},
          {"exponent_two => exponent_two_condition", law("exponent_two"), law("exponent_two_condition")}}});

    out.push_back({"T4.1", "universal alpha-elasticity: left alpha-alternative iff RIP", true, true, universal(),
                   {{"left_alpha_alternative => rip", law("left_alpha_alternative"), law("rip")},
                    {"rip => left_alpha_alternative", law("rip"), law("left_alpha_alternative")}}});

    out.push_back({"T4.2", "universal alpha-elasticity: right alpha-alternative iff LIP", true, true, universal(),
                   {{"right_alpha_alternative => lip", law("right_alpha_alternative"), law("lip")},
                    {"lip => right_alpha_alternative", law("lip"), law("right_alpha_alternative")}}});

    out.push_back({"T4.3", "generalized Moufang, universal alpha-elasticity: LIP iff RIP", true, true, gm_univ(),
                   {{"lip => rip", law("lip"), law("rip")}, {"rip => lip", law("rip"), law("lip")}}});

    {
      TheoremDef d{"C4.1",
                   "generalized Moufang, universal alpha-elasticity: right alpha-alternative, LIP, RIP, left "
                   "alpha-alternative are equivalent",
                   true, true, gm_univ(), {}};
      const std::vector<std::string> props{"right_alpha_alternative", "lip", "rip", "left_alpha_alternative"};
      for (const auto& a : props)
        for (const auto& b : props)
          if (a != b) d.claims.push_back({a + " => " + b, law(a), law(b)});
      out.push_back(std::move(d));
    }

    out.push_back({"L5.1", "IP, generalized Moufang, universal alpha-elasticity: uni1 and uni2 iff equi", true, true,
                   all_of({law("lip"), law("rip"), law("generalized_moufang"), universal()}),
                   {{"uni1 and uni2 => equi", uni_pair(), law("equi")},
                    {"equi => uni1 and uni2", law("equi"), uni_pair()}}});

    out.push_back(
        {"T5.1", "commutative IP generalized Moufang, universal alpha-elasticity, (y^a)^2 in N_rho: associative", true,
         true,
         all_of({law("commutativity"), law("lip"), law("rip"), law("generalized_moufang"), universal(),
                 for_all_elements(always,
                                  [](AuditInstance& in, Element y) {
                                    const Element ya = in.alpha(y);
                                    return static_cast<bool>(in.masks().right[in.table.mul(ya, ya)]);
                                  })}),
         {{"associativity", {}, law("associativity")}}});

    out.push_back({"T5.2", "equi implies LIP and RIP", true, true, law("equi"),
                   {{"lip and rip", {}, all_of({law("lip"), law("rip")})},
                    {"generalized_moufang, universal => lip and rip", gm_univ(), all_of({law("lip"), law("rip")})}}});

    out.push_back({"C5.1", "generalized Moufang with equi: universal alpha-elasticity", true, true,
                   all_of({law("generalized_moufang"), law("equi")}), {{"universal alpha-elasticity", {}, universal()}}});
    return out;
  }();
  return catalog;
}

inline const TheoremDef* find_theorem(const std::string& id) {
  for (const auto& t : theorem_catalog())
    if (t.id == id) return &t;
  return nullptr;
}

inline std::vector<std::string> theorem_ids() {
  std::vector<std::string> ids;
  for (const auto& t : theorem_catalog()) ids.push_back(t.id);
  return ids;
}

inline std::string describe_orders(const std::vector<std::size_t>& orders) {
  std::string s;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(orders[i]);
  }
  return s;
}

inline AuditReport audit_theorem(const std::string& id, const std::vector<std::size_t>& orders, AlphaClass alpha_class,
                                 UniversalityReading reading = UniversalityReading::Direct) {
  const TheoremDef* thm = find_theorem(id);
  if (!thm) throw Error(Errc::UnknownTheorem, "unknown theorem '" + id + "'");
  for (std::size_t n : orders) require_enumerable_order(n);
  const auto start = std::chrono::steady_clock::now();

  const AlphaClass cls = thm->uses_alpha ? alpha_class : AlphaClass::Identity;
  AuditReport rep;
  rep.theorem_id = thm->id;
  rep.statement = thm->statement;
  rep.scope = "orders=" + describe_orders(orders) + " alpha=" + to_string(cls);
  if (thm->uses_universality) rep.scope += " reading=" + to_string(reading);
  for (const auto& c : thm->claims) rep.claims.push_back({c.name, 0, 0});
  if (thm->tracks_agreement) rep.agreement = AgreementStats{};

  for (std::size_t n : orders) {
    enumerate_loops(n, [&](const LoopTable& t) {
      std::optional<std::string> key;
      for_each_selfmap(n, cls, &t, [&](const SelfMap& alpha) {
        AuditInstance in(t, alpha, reading);
        ++rep.instances_checked;
        if (rep.agreement) {
          const bool direct = in.universal_direct().holds;
          const bool uni = in.uni_pair().holds;
          rep.agreement->instances++;
          rep.agreement->direct_holds += direct;
          rep.agreement->uni_holds += uni;
          rep.agreement->agree += direct == uni;
        }
        if (!thm->premise(in).holds) return true;
        ++rep.premise_holds;
        bool violated = false;
        for (std::size_t i = 0; i < thm->claims.size(); ++i) {
          const auto& claim = thm->claims[i];
          if (claim.antecedent && !claim.antecedent(in).holds) continue;
          ++rep.claims[i].antecedent_holds;
          const Outcome c = claim.consequent(in);
          if (c.holds) continue;
          ++rep.claims[i].violations;
          violated = true;
          if (rep.witnesses.size() < kMaxAuditWitnesses) {
            if (!key) key = format_key(canonical_key(t), n);
            // One witness per isomorphism class and claim.
            const bool seen = std::any_of(rep.witnesses.begin(), rep.witnesses.end(), [&](const AuditWitness& w) {
              return w.claim == claim.name && w.key == *key;
            });
            if (seen) continue;
            std::string cells;
            for (Element v : t.cells()) cells += std::to_string(v) + (n > 10 ? "," : "");
            rep.witnesses.push_back({claim.name, *key, cells, alpha.image, c.detail});
          }
        }
        rep.conclusion_violations += violated;
        return true;
      });
    });
  }
  rep.runtime_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace loopkit
