#pragma once

// Command-line front end. Exit codes: 0 success (and, for check/universal,
// the property holds), 2 the property fails, 1 usage, IO or format error.

#include <CLI11.hpp>
#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "loopkit/loopkit.hpp"

namespace loopkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitFails = 2;

namespace detail {

struct Session {
  bool json = false;
  bool timing = false;
  std::ostream& out;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  Json doc = Json::object();
  std::ostringstream text;

  Session(std::ostream& o, std::string command) : out(o) {
    doc["command"] = std::move(command);
    doc["inputs"] = Json::object();
    doc["result"] = nullptr;
    doc["witnesses"] = Json::array();
    doc["certificate"] = nullptr;
    doc["runtime_ms"] = 0;
  }

  void flush() {
    if (json) {
      if (timing) {
        doc["runtime_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
      }
      out << doc.dump(2) << '\n';
    } else {
      out << text.str();
      if (timing) {
        out << "runtime_ms="
            << std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count()
            << '\n';
      }
    }
  }
};

inline std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? sep : "") + items[i];
  return s;
}

/// A catalog name, "universal:"-prefixed name (hunt only) or a literal identity containing '='.
inline IdentityLaw law_argument(const std::string& arg) {
  if (arg.find('=') != std::string::npos) return parse_identity(arg, arg);
  return catalog_law(arg);
}

inline std::vector<std::size_t> parse_orders(const std::string& text) {
  std::vector<std::size_t> orders;
  auto number = [&](const std::string& s) -> std::size_t {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw Error(Errc::InvalidArgument, "bad order list '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const std::size_t a = number(text.substr(0, dots)), b = number(text.substr(dots + 2));
    if (a > b) throw Error(Errc::InvalidArgument, "empty order range '" + text + "'");
    for (std::size_t n = a; n <= b; ++n) orders.push_back(n);
    return orders;
  }
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) orders.push_back(number(part));
  if (orders.empty()) throw Error(Errc::InvalidArgument, "empty order list");
  return orders;
}

/// Moves the identity to 0 if needed, carrying alpha along, and says so.
inline void normalize_input(Session& s, LoopTable& t, std::optional<SelfMap>& alpha) {
  if (t.identity() == 0) return;
  const Element old = t.identity();
  const Permutation sigma = normalizing_permutation(t);
  t = relabel(t, sigma);
  if (alpha) alpha = conjugate(*alpha, sigma);
  const std::string notice = "identity " + std::to_string(old) + " relabeled to 0 (swap 0<->" + std::to_string(old) + ")";
  s.doc["inputs"]["notice"] = notice;
  s.text << "notice: " << notice << '\n';
}

struct Options {
  std::string file;
  std::string law;
  std::optional<std::string> alpha_class;
  std::optional<long long> f, g;
  std::size_t order = 0;
  std::vector<std::string> require, forbid;
  std::size_t max_witnesses = 10;
  std::size_t jobs = 1;
  std::optional<std::uint64_t> node_limit;
  std::string theorem;
  std::string orders;
  std::string reading = "both";
};

inline int cmd_validate(Session& s, const Options& o) {
  const LoopFile f = load_loop_file(o.file);
  s.doc["inputs"]["file"] = o.file;
  s.doc["result"] = {{"valid", true}, {"order", f.table.order()}, {"identity", f.table.identity()}};
  if (f.name) s.doc["result"]["name"] = *f.name;
  if (f.alpha) s.doc["result"]["alpha"] = f.alpha->image;
  s.text << "valid order=" << f.table.order() << " identity=" << f.table.identity();
  if (f.name) s.text << " name=" << *f.name;
  s.text << '\n';
  return kExitOk;
}

inline int cmd_props(Session& s, const Options& o) {
  const LoopFile f = load_loop_file(o.file);
  const PropertyReport r = basic_properties(f.table);
  s.doc["inputs"]["file"] = o.file;
  s.doc["result"] = properties_json(r);
  s.doc["witnesses"] = property_witnesses_json(r);
  for (const auto& [name, value] : property_flags(r)) s.text << name << '=' << (value ? "true" : "false") << '\n';
  for (const auto& fail : r.failures) s.text << "witness " << fail.property << ": " << format_property_failure(fail) << '\n';
  return kExitOk;
}

inline int cmd_nuclei(Session& s, const Options& o) {
  LoopFile f = load_loop_file(o.file);
  s.doc["inputs"]["file"] = o.file;
  normalize_input(s, f.table, f.alpha);
  const NucleiReport r = nuclei(f.table);
  s.doc["result"] = nuclei_json(r);
  s.text << "n_lambda=" << format_set(r.n_lambda) << '\n'
         << "n_mu=" << format_set(r.n_mu) << '\n'
         << "n_rho=" << format_set(r.n_rho) << '\n'
         << "nucleus=" << format_set(r.nucleus) << '\n'
         << "center=" << format_set(r.center) << '\n';
  return kExitOk;
}

/// check and universal share everything except the verdict function.
inline int cmd_verdict(Session& s, const Options& o, bool universal) {
  LoopFile f = load_loop_file(o.file);
  s.doc["inputs"]["file"] = o.file;
  s.doc["inputs"]["law"] = o.law;
  const IdentityLaw law = law_argument(o.law);
  if (universal) normalize_input(s, f.table, f.alpha);
  auto decide = [&](const SelfMap& alpha) {
    return universal ? is_universal(law, f.table, alpha) : check_identity(law, f.table, alpha);
  };
  const std::string label = std::string(universal ? "universal " : "") + "law=" + law.name;
  s.doc["result"] = {{"law", law.name}, {"identity", to_string(law)}, {"universal", universal}};

  if (law.uses_alpha && o.alpha_class) {
    const AlphaClass cls = parse_alpha_class(*o.alpha_class);
    s.doc["inputs"]["alpha_class"] = to_string(cls);
    std::uint64_t checked = 0, holding = 0;
    std::optional<SelfMap> first_holding;
    std::optional<std::pair<SelfMap, Verdict>> first_failing;
    for_each_selfmap(f.table.order(), cls, &f.table, [&](const SelfMap& alpha) {
      ++checked;
      Verdict v = decide(alpha);
      if (v.holds) {
        ++holding;
        if (!first_holding) first_holding = alpha;
      } else if (!first_failing) {
        first_failing.emplace(alpha, std::move(v));
      }
      return true;
    });
    const bool holds = holding > 0;
    s.doc["result"]["holds"] = holds;
    s.doc["result"]["maps_checked"] = checked;
    s.doc["result"]["maps_holding"] = holding;
    s.doc["result"]["first_holding_alpha"] = first_holding ? Json(first_holding->image) : Json(nullptr);
    if (holds) {
      s.text << label << " holds for " << holding << " of " << checked << " alpha (first alpha="
             << format_selfmap(*first_holding) << ")\n";
      return kExitOk;
    }
    Json w = witness_json(*first_failing->second.witness);
    w["alpha"] = first_failing->first.image;
    s.doc["witnesses"].push_back(w);
    s.text << label << " fails for all " << checked << " alpha\n";
    if (first_failing) {
      s.text << "witness alpha=" << format_selfmap(first_failing->first) << ": "
             << format_witness(*first_failing->second.witness) << '\n';
    }
    return kExitFails;
  }

  const SelfMap alpha = (law.uses_alpha && f.alpha) ? *f.alpha : identity_map(f.table.order());
  if (law.uses_alpha) s.doc["result"]["alpha"] = alpha.image;
  const Verdict v = decide(alpha);
  s.doc["result"]["holds"] = v.holds;
  if (v.holds) {
    s.text << label << " holds\n";
    return kExitOk;
  }
  s.doc["witnesses"].push_back(witness_json(*v.witness));
  s.text << label << " fails\nwitness " << format_witness(*v.witness) << '\n';
  return kExitFails;
}

inline int cmd_isotopes(Session& s, const Options& o) {
  const LoopFile f = load_loop_file(o.file);
  s.doc["inputs"]["file"] = o.file;
  const std::size_t n = f.table.order();
  if (o.f.has_value() != o.g.has_value()) throw Error(Errc::InvalidArgument, "--f and --g must be given together");
  if (o.f) {
    if (*o.f < 0 || *o.g < 0 || static_cast<std::size_t>(*o.f) >= n || static_cast<std::size_t>(*o.g) >= n) {
      throw Error(Errc::InvalidArgument, "--f/--g out of range");
    }
    const IsotopePair p{static_cast<Element>(*o.f), static_cast<Element>(*o.g)};
    const LoopTable iso = principal_isotope(f.table, p);
    s.doc["inputs"]["f"] = p.f;
    s.doc["inputs"]["g"] = p.g;
    s.doc["result"] = {{"identity", iso.identity()}, {"table", table_json(iso)}};
    s.text << "# principal isotope f=" << p.f << " g=" << p.g << " identity=" << iso.identity() << '\n';
    write_loop_file(s.text, iso, std::nullopt);
    return kExitOk;
  }
  Json list = Json::array();
  for (std::size_t fi = 0; fi < n; ++fi) {
    for (std::size_t gi = 0; gi < n; ++gi) {
      const IsotopePair p{static_cast<Element>(fi), static_cast<Element>(gi)};
      const LoopTable iso = principal_isotope(f.table, p);
      const bool isomorphic = n <= 8 && is_isomorphic(iso, f.table).has_value();
      const std::string key = n <= 8 ? format_key(canonical_key(iso), n) : "";
      list.push_back({{"f", p.f}, {"g", p.g}, {"identity", iso.identity()}, {"isomorphic", isomorphic}, {"key", key}});
      s.text << "f=" << p.f << " g=" << p.g << " identity=" << iso.identity()
             << " isomorphic=" << (isomorphic ? "true" : "false") << " key=" << key << '\n';
    }
  }
  s.doc["result"] = {{"isotopes", list}};
  return kExitOk;
}

inline SearchSpec spec_from(const Options& o, AlphaClass default_class) {
  SearchSpec spec;
  spec.order = o.order;
  spec.require = o.require;
  spec.forbid = o.forbid;
  spec.alpha_class = o.alpha_class ? parse_alpha_class(*o.alpha_class) : default_class;
  spec.max_witnesses = o.max_witnesses;
  spec.node_limit = o.node_limit;
  return spec;
}

inline int cmd_enumerate(Session& s, const Options& o) {
  SearchSpec spec = spec_from(o, AlphaClass::Identity);
  spec.max_witnesses = 0;
  s.doc["inputs"] = spec_json(spec);
  const HuntResult r = hunt(spec, o.jobs);
  s.doc["result"] = {{"count", r.certificate.matches}, {"tables_enumerated", r.certificate.tables_enumerated}};
  s.doc["certificate"] = certificate_json(r.certificate);
  s.text << "count=" << r.certificate.matches << '\n';
  if (!r.certificate.complete) s.text << "partial: node limit reached\n";
  return kExitOk;
}

inline int cmd_hunt(Session& s, const Options& o) {
  const SearchSpec spec = spec_from(o, AlphaClass::Bijective);
  s.doc["inputs"] = spec_json(spec);
  const HuntResult r = hunt(spec, o.jobs);
  s.doc["result"] = {{"witnesses_found", r.witnesses.size()}, {"matches", r.certificate.matches}};
  s.doc["certificate"] = certificate_json(r.certificate);
  std::size_t index = 0;
  for (const auto& w : r.witnesses) {
    s.doc["witnesses"].push_back(hunt_witness_json(w));
    s.text << "witness " << ++index << " key=" << format_key(w.key, w.table.order()) << '\n';
    write_loop_file(s.text, w.table, w.alpha.is_identity() ? std::nullopt : std::optional<SelfMap>(w.alpha));
  }
  s.text << format_certificate(r.certificate) << '\n';
  return kExitOk;
}

inline int cmd_audit(Session& s, const Options& o) {
  const TheoremDef* thm = find_theorem(o.theorem);
  if (!thm) throw Error(Errc::UnknownTheorem, "unknown theorem '" + o.theorem + "'");
  const auto orders = parse_orders(o.orders);
  const AlphaClass cls = o.alpha_class ? parse_alpha_class(*o.alpha_class) : AlphaClass::Bijective;
  std::vector<UniversalityReading> readings;
  if (!thm->uses_universality || o.reading == "direct") {
    readings = {UniversalityReading::Direct};
  } else if (o.reading == "uni") {
    readings = {UniversalityReading::Uni};
  } else if (o.reading == "both") {
    readings = {UniversalityReading::Direct, UniversalityReading::Uni};
  } else {
    throw Error(Errc::InvalidArgument, "--reading must be direct, uni or both");
  }
  s.doc["inputs"] = {{"theorem", thm->id}, {"orders", orders}, {"alpha_class", to_string(cls)}, {"reading", o.reading}};
  Json reports = Json::array();
  for (const auto reading : readings) {
    const AuditReport rep = audit_theorem(thm->id, orders, cls, reading);
    reports.push_back(audit_json(rep, s.timing));
    for (const auto& w : rep.witnesses) {
      s.doc["witnesses"].push_back({{"scope", rep.scope}, {"claim", w.claim}, {"key", w.key}, {"alpha", w.alpha}, {"detail", w.detail}});
    }
    s.text << format_audit(rep, s.timing);
  }
  s.doc["result"] = {{"reports", reports}};
  return kExitOk;
}

}  // namespace detail

/// Runs one CLI invocation; args exclude the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite loop toolkit: Cayley tables, identities, isotopes, enumeration and theorem audits", "loopkit"};
  app.require_subcommand(1);
  bool json = false, timing = false, seedless = false;
  app.add_flag("--json", json, "Emit one JSON document on standard output");
  app.add_flag("--timing", timing, "Report wall-clock runtime (output is otherwise deterministic)");
  app.add_flag("--seedless", seedless, "Accepted for compatibility; output is always deterministic");
  app.fallthrough();

  detail::Options o;
  auto file_cmd = [&](const std::string& name, const std::string& desc) {
    auto* sub = app.add_subcommand(name, desc);
    sub->add_option("file", o.file, "Path to a .loop file")->required();
    return sub;
  };
  auto* validate = file_cmd("validate", "Check that a file holds a valid loop");
  auto* props = file_cmd("props", "Basic properties with witnesses");
  auto* nuc = file_cmd("nuclei", "Left, middle, right nucleus, nucleus and center");
  auto* check = file_cmd("check", "Check an identity on the loop");
  check->add_option("--law", o.law, "Catalog name or literal identity")->required();
  check->add_option("--alpha-class", o.alpha_class, "identity, bijective, all or homomorphic");
  auto* universal = file_cmd("universal", "Check an identity in every principal isotope");
  universal->add_option("--law", o.law, "Catalog name or literal identity")->required();
  universal->add_option("--alpha-class", o.alpha_class, "identity, bijective, all or homomorphic");
  auto* isotopes = file_cmd("isotopes", "Principal isotopes (all, or one with --f/--g)");
  isotopes->add_option("--f", o.f, "Left element f");
  isotopes->add_option("--g", o.g, "Right element g");

  auto search_opts = [&](CLI::App* sub) {
    sub->add_option("--order", o.order, "Order of the loops")->required();
    sub->add_option("--require", o.require, "Law that must hold (repeatable)");
    sub->add_option("--forbid", o.forbid, "Law that must fail (repeatable)");
    sub->add_option("--jobs", o.jobs, "Worker threads");
    sub->add_option("--node-limit", o.node_limit, "Stop after this many search nodes");
  };
  auto* enumerate = app.add_subcommand("enumerate", "Count reduced loops satisfying constraints");
  search_opts(enumerate);
  auto* hunt_cmd = app.add_subcommand("hunt", "Search for loops (and self-maps) meeting a specification");
  search_opts(hunt_cmd);
  hunt_cmd->add_option("--alpha-class", o.alpha_class, "identity, bijective, all or homomorphic");
  hunt_cmd->add_option("--max-witnesses", o.max_witnesses, "Witnesses to keep");
  auto* audit = app.add_subcommand("audit", "Audit a theorem on all loops of the given orders");
  audit->add_option("--theorem", o.theorem, "Theorem id")->required();
  audit->add_option("--orders", o.orders, "A..B or comma list")->required();
  audit->add_option("--alpha-class", o.alpha_class, "identity, bijective, all or homomorphic");
  audit->add_option("--reading", o.reading, "Universality reading: direct, uni or both");

  std::vector<std::string> argv_store{"loopkit"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  detail::Session session(out, chosen->get_name());
  session.json = json;
  session.timing = timing;
  try {
    int code = kExitError;
    if (chosen == validate) code = detail::cmd_validate(session, o);
    else if (chosen == props) code = detail::cmd_props(session, o);
    else if (chosen == nuc) code = detail::cmd_nuclei(session, o);
    else if (chosen == check) code = detail::cmd_verdict(session, o, false);
    else if (chosen == universal) code = detail::cmd_verdict(session, o, true);
    else if (chosen == isotopes) code = detail::cmd_isotopes(session, o);
    else if (chosen == enumerate) code = detail::cmd_enumerate(session, o);
    else if (chosen == hunt_cmd) code = detail::cmd_hunt(session, o);
    else if (chosen == audit) code = detail::cmd_audit(session, o);
    session.flush();
    return code;
  } catch (const Error& e) {
    err << "error: " << errc_name(e.code()) << ": " << e.what() << '\n';
    if (e.code() == Errc::UnknownLaw) err << "available laws: " << detail::join(catalog_names(), ", ") << '\n';
    if (e.code() == Errc::UnknownTheorem) err << "available theorems: " << detail::join(theorem_ids(), ", ") << '\n';
    return kExitError;
  }
}

}  // namespace loopkit::cli
