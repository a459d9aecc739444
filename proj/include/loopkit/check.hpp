#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "loopkit/loop_table.hpp"
#include "loopkit/selfmap.hpp"
#include "loopkit/term.hpp"

namespace loopkit {

using Assignment = std::vector<std::pair<char, Element>>;

struct IsotopePair {
  Element f = 0;
  Element g = 0;
  bool operator==(const IsotopePair&) const = default;
};

struct Witness {
  Assignment assignment;
  /// Present for universality failures: the principal isotope that fails.
  std::optional<IsotopePair> isotope;
  bool operator==(const Witness&) const = default;
};

struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;
};

/// "x=2 y=1", with "(f=.. g=..)" appended for isotope witnesses.
inline std::string format_witness(const Witness& w) {
  std::string s;
  for (const auto& [name, value] : w.assignment) {
    if (!s.empty()) s += ' ';
    s += name;
    s += '=';
    s += std::to_string(value);
  }
  if (w.isotope) {
    if (!s.empty()) s += ' ';
    s += "(f=" + std::to_string(w.isotope->f) + " g=" + std::to_string(w.isotope->g) + ")";
  }
  return s;
}

inline constexpr Element kUnknown = 0xFFFF;

/// A term flattened to postfix so assignment sweeps avoid pointer chasing.
class Program {
 public:
  enum class Op : std::uint8_t { Var, Unit, Mul, LDiv, RDiv, Alpha };

  Program() = default;
  Program(const Term& t, const std::vector<char>& vars) { emit(t, vars); }

  /// Evaluates against a model exposing unit/mul/ldiv/rdiv/alpha. Models that
  /// may answer kUnknown get it propagated to the result.
  template <class Model>
  Element run(const Model& m, const Element* env) const {
    std::array<Element, 64> stack;
    std::size_t sp = 0;
    for (const auto& [op, slot] : code_) {
      switch (op) {
        case Op::Var: stack[sp++] = env[slot]; break;
        case Op::Unit: stack[sp++] = m.unit(); break;
        case Op::Alpha: {
          Element& top = stack[sp - 1];
          if (!Model::kPartial || top != kUnknown) top = m.alpha(top);
          break;
        }
        default: {
          const Element r = stack[--sp];
          Element& l = stack[sp - 1];
          if (Model::kPartial && (l == kUnknown || r == kUnknown)) {
            l = kUnknown;
          } else if (op == Op::Mul) {
            l = m.mul(l, r);
          } else if (op == Op::LDiv) {
            l = m.ldiv(l, r);
          } else {
            l = m.rdiv(l, r);
          }
        }
      }
    }
    return stack[0];
  }

  std::size_t size() const noexcept { return code_.size(); }

 private:
  void emit(const Term& t, const std::vector<char>& vars) {
    switch (t.kind()) {
      case Term::Kind::Var: {
        const auto it = std::find(vars.begin(), vars.end(), t.name());
        if (it == vars.end()) throw Error(Errc::UnboundVariable, std::string("unbound variable '") + t.name() + "'");
        code_.push_back({Op::Var, static_cast<std::uint8_t>(it - vars.begin())});
        break;
      }
      case Term::Kind::Unit: code_.push_back({Op::Unit, 0}); break;
      case Term::Kind::Alpha:
        emit(t.arg(), vars);
        code_.push_back({Op::Alpha, 0});
        break;
      case Term::Kind::Mul:
      case Term::Kind::LDiv:
      case Term::Kind::RDiv:
        emit(t.left(), vars);
        emit(t.right(), vars);
        code_.push_back({t.kind() == Term::Kind::Mul    ? Op::Mul
                         : t.kind() == Term::Kind::LDiv ? Op::LDiv
                                                        : Op::RDiv,
                         0});
        break;
    }
    if (code_.size() > 60) throw Error(Errc::InvalidArgument, "term too large");
  }

  std::vector<std::pair<Op, std::uint8_t>> code_;
};

/// Complete table plus self-map.
struct TableModel {
  static constexpr bool kPartial = false;
  const LoopTable& t;
  const SelfMap& a;
  Element unit() const { return t.identity(); }
  Element mul(Element x, Element y) const { return t.mul(x, y); }
  Element ldiv(Element x, Element y) const { return t.ldiv(x, y); }
  Element rdiv(Element x, Element y) const { return t.rdiv(x, y); }
  Element alpha(Element x) const { return a(x); }
};

/// Both sides of a law compiled over the law's sorted variable list.
class CompiledLaw {
 public:
  explicit CompiledLaw(const IdentityLaw& law) : lhs_(law.lhs, law.vars), rhs_(law.rhs, law.vars), vars_(law.vars) {}

  const std::vector<char>& vars() const noexcept { return vars_; }

  /// Lexicographically first failing tuple in variable order, if any.
  template <class Model>
  std::optional<std::vector<Element>> first_failure(const Model& m, std::size_t n) const {
    const std::size_t k = vars_.size();
    std::vector<Element> env(std::max<std::size_t>(k, 1), 0);
    for (;;) {
      if (lhs_.run(m, env.data()) != rhs_.run(m, env.data())) {
        return std::vector<Element>(env.begin(), env.begin() + k);
      }
      std::size_t pos = k;
      for (;;) {
        if (pos == 0) return std::nullopt;
        --pos;
        if (++env[pos] < n) break;
        env[pos] = 0;
      }
    }
  }

  /// Whether every fully decided instance agrees; undecided instances are skipped.
  template <class Model>
  bool consistent(const Model& m, std::size_t n) const {
    const std::size_t k = vars_.size();
    std::vector<Element> env(std::max<std::size_t>(k, 1), 0);
    for (;;) {
      const Element l = lhs_.run(m, env.data());
      if (l != kUnknown) {
        const Element r = rhs_.run(m, env.data());
        if (r != kUnknown && l != r) return false;
      }
      std::size_t pos = k;
      for (;;) {
        if (pos == 0) return true;
        --pos;
        if (++env[pos] < n) break;
        env[pos] = 0;
      }
    }
  }

  Assignment to_assignment(const std::vector<Element>& values) const {
    Assignment a;
    for (std::size_t i = 0; i < vars_.size(); ++i) a.emplace_back(vars_[i], values[i]);
    return a;
  }

 private:
  Program lhs_;
  Program rhs_;
  std::vector<char> vars_;
};

inline void require_same_order(const LoopTable& t, const SelfMap& alpha) {
  if (alpha.order() != t.order()) throw Error(Errc::OrderMismatch, "self-map and table orders differ");
}

/// Direct structural interpretation of a term.
inline Element eval_term(const Term& term, const LoopTable& t, const SelfMap& alpha,
                         const std::map<char, Element>& env) {
  require_same_order(t, alpha);
  switch (term.kind()) {
    case Term::Kind::Var: {
      const auto it = env.find(term.name());
      if (it == env.end()) {
        throw Error(Errc::UnboundVariable, std::string("unbound variable '") + term.name() + "'");
      }
      if (it->second >= t.order()) throw Error(Errc::InvalidArgument, "assigned element out of range");
      return it->second;
    }
    case Term::Kind::Unit: return t.identity();
    case Term::Kind::Alpha: return alpha(eval_term(term.arg(), t, alpha, env));
    case Term::Kind::Mul: return t.mul(eval_term(term.left(), t, alpha, env), eval_term(term.right(), t, alpha, env));
    case Term::Kind::LDiv: return t.ldiv(eval_term(term.left(), t, alpha, env), eval_term(term.right(), t, alpha, env));
    case Term::Kind::RDiv: return t.rdiv(eval_term(term.left(), t, alpha, env), eval_term(term.right(), t, alpha, env));
  }
  return 0;
}

/// Checks the law under all n^|vars| assignments; the witness is the
/// lexicographically first failure.
inline Verdict check_identity(const IdentityLaw& law, const LoopTable& t, const SelfMap& alpha) {
  require_same_order(t, alpha);
  const CompiledLaw compiled(law);
  if (auto fail = compiled.first_failure(TableModel{t, alpha}, t.order())) {
    return Verdict{false, Witness{compiled.to_assignment(*fail), std::nullopt}};
  }
  return Verdict{true, std::nullopt};
}

inline Verdict check_identity(const IdentityLaw& law, const LoopTable& t) {
  return check_identity(law, t, identity_map(t.order()));
}

}  // namespace loopkit
