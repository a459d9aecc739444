#pragma once

// JSON and text renderings of results. All orderings are fixed so output is
// byte-stable across runs.

#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "loopkit/audit.hpp"
#include "loopkit/check.hpp"
#include "loopkit/hunt.hpp"
#include "loopkit/nuclei.hpp"
#include "loopkit/properties.hpp"

namespace loopkit {

using Json = nlohmann::ordered_json;

inline std::string format_set(const std::vector<Element>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

inline Json table_json(const LoopTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows()) rows.push_back(r);
  return rows;
}

inline Json assignment_json(const Assignment& a) {
  Json j = Json::object();
  for (const auto& [name, value] : a) j[std::string(1, name)] = value;
  return j;
}

inline Json witness_json(const Witness& w) {
  Json j = Json::object();
  j["assignment"] = assignment_json(w.assignment);
  if (w.isotope) j["isotope"] = {{"f", w.isotope->f}, {"g", w.isotope->g}};
  j["text"] = format_witness(w);
  return j;
}

inline const char* property_vars(const std::string& property) {
  if (property == "associative") return "xyz";
  if (property == "exponent_two") return "x";
  if (property == "power_associative") return "gxyz";
  return "xy";
}

inline std::string format_property_failure(const PropertyFailure& f) {
  const std::string vars = property_vars(f.property);
  std::string s;
  for (std::size_t i = 0; i < f.assignment.size() && i < vars.size(); ++i) {
    if (i) s += ' ';
    s += vars[i];
    s += '=';
    s += std::to_string(f.assignment[i]);
  }
  return s;
}

inline std::vector<std::pair<std::string, bool>> property_flags(const PropertyReport& r) {
  return {{"associative", r.associative}, {"commutative", r.commutative}, {"lip", r.lip},
          {"rip", r.rip},                 {"ip", r.ip},                   {"flexible", r.flexible},
          {"exponent_two", r.exponent_two}, {"power_associative", r.power_associative}};
}

inline Json properties_json(const PropertyReport& r) {
  Json j = Json::object();
  for (const auto& [name, value] : property_flags(r)) j[name] = value;
  return j;
}

inline Json property_witnesses_json(const PropertyReport& r) {
  Json arr = Json::array();
  for (const auto& f : r.failures) {
    arr.push_back({{"property", f.property}, {"assignment", f.assignment}, {"text", format_property_failure(f)}});
  }
  return arr;
}

inline Json nuclei_json(const NucleiReport& r) {
  return Json{{"n_lambda", r.n_lambda}, {"n_mu", r.n_mu}, {"n_rho", r.n_rho}, {"nucleus", r.nucleus}, {"center", r.center}};
}

inline Json spec_json(const SearchSpec& s) {
  Json j{{"order", s.order},
         {"require", s.require},
         {"forbid", s.forbid},
         {"alpha_class", to_string(s.alpha_class)},
         {"max_witnesses", s.max_witnesses}};
  j["node_limit"] = s.node_limit ? Json(*s.node_limit) : Json(nullptr);
  return j;
}

inline Json certificate_json(const ExhaustionCertificate& c) {
  return Json{{"order", c.order},
              {"tables_enumerated", c.tables_enumerated},
              {"instances", c.instances},
              {"matches", c.matches},
              {"witnesses_found", c.witnesses_found},
              {"nodes", c.nodes},
              {"complete", c.complete},
              {"spec", spec_json(c.spec)}};
}

inline std::string format_certificate(const ExhaustionCertificate& c) {
  std::ostringstream s;
  s << "certificate order=" << c.order << " tables=" << c.tables_enumerated << " instances=" << c.instances
    << " matches=" << c.matches << " witnesses=" << c.witnesses_found << " nodes=" << c.nodes
    << " complete=" << (c.complete ? "true" : "false");
  return s.str();
}

inline Json hunt_witness_json(const HuntWitness& w) {
  return Json{{"key", format_key(w.key, w.table.order())}, {"table", table_json(w.table)}, {"alpha", w.alpha.image}};
}

inline Json audit_json(const AuditReport& r, bool timing) {
  Json claims = Json::array();
  for (const auto& c : r.claims) {
    claims.push_back(
        {{"name", c.name}, {"antecedent_holds", c.antecedent_holds}, {"violations", c.violations}, {"status", c.status()}});
  }
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) {
    witnesses.push_back(
        {{"claim", w.claim}, {"key", w.key}, {"table", w.table}, {"alpha", w.alpha}, {"detail", w.detail}});
  }
  Json j{{"theorem_id", r.theorem_id},
         {"statement", r.statement},
         {"scope", r.scope},
         {"status", r.status()},
         {"instances_checked", r.instances_checked},
         {"premise_holds", r.premise_holds},
         {"conclusion_violations", r.conclusion_violations},
         {"claims", claims},
         {"witnesses", witnesses}};
  if (r.agreement) {
    j["agreement"] = {{"instances", r.agreement->instances},
                      {"direct_holds", r.agreement->direct_holds},
                      {"uni_holds", r.agreement->uni_holds},
                      {"agree", r.agreement->agree}};
  }
  j["runtime_ms"] = timing ? r.runtime_ms : 0;
  return j;
}

inline std::string format_audit(const AuditReport& r, bool timing) {
  std::ostringstream s;
  s << "theorem " << r.theorem_id << " status=" << r.status() << " " << r.scope << '\n';
  s << "statement: " << r.statement << '\n';
  s << "instances=" << r.instances_checked << " premise=" << r.premise_holds
    << " violations=" << r.conclusion_violations << '\n';
  for (const auto& c : r.claims) {
    s << "claim \"" << c.name << "\" antecedent=" << c.antecedent_holds << " violations=" << c.violations
      << " status=" << c.status() << '\n';
  }
  if (r.agreement) {
    s << "agreement instances=" << r.agreement->instances << " direct=" << r.agreement->direct_holds
      << " uni=" << r.agreement->uni_holds << " agree=" << r.agreement->agree << '\n';
  }
  for (const auto& w : r.witnesses) {
    s << "witness claim=\"" << w.claim << "\" key=" << w.key << " alpha=";
    for (std::size_t i = 0; i < w.alpha.size(); ++i) s << (i ? "," : "") << w.alpha[i];
    s << " " << w.detail << '\n';
  }
  if (timing) s << "runtime_ms=" << r.runtime_ms << '\n';
  return s.str();
}

}  // namespace loopkit
