#pragma once

// Loop terms over *, \, /, the unit e and a self-map a(...).
//
// Grammar (all binary operators share one precedence level and associate left):
//   identity := term '=' term
//   term     := factor (('*' | '/' | '\') factor)*
//   factor   := var | 'e' | 'a(' term ')' | '(' term ')'
// Variables are single lowercase letters other than 'e' and 'a'.

#include <cctype>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "loopkit/error.hpp"
#include "loopkit/loop_table.hpp"

namespace loopkit {

class Term {
 public:
  enum class Kind { Var, Unit, Mul, LDiv, RDiv, Alpha };

  static Term var(char name) { return Term(Kind::Var, name, nullptr, nullptr); }
  static Term unit() { return Term(Kind::Unit, 0, nullptr, nullptr); }
  static Term mul(Term l, Term r) { return binary(Kind::Mul, std::move(l), std::move(r)); }
  /// l\r
  static Term ldiv(Term l, Term r) { return binary(Kind::LDiv, std::move(l), std::move(r)); }
  /// l/r
  static Term rdiv(Term l, Term r) { return binary(Kind::RDiv, std::move(l), std::move(r)); }
  static Term alpha(Term arg) {
    return Term(Kind::Alpha, 0, std::make_shared<const Term>(std::move(arg)), nullptr);
  }

  Kind kind() const noexcept { return kind_; }
  char name() const noexcept { return name_; }
  const Term& left() const { return *left_; }
  const Term& right() const { return *right_; }
  /// Argument of an Alpha node.
  const Term& arg() const { return *left_; }

  bool is_binary() const noexcept { return kind_ == Kind::Mul || kind_ == Kind::LDiv || kind_ == Kind::RDiv; }

  bool operator==(const Term& o) const {
    if (kind_ != o.kind_ || name_ != o.name_) return false;
    if (kind_ == Kind::Alpha) return arg() == o.arg();
    if (is_binary()) return left() == o.left() && right() == o.right();
    return true;
  }

  void collect_vars(std::set<char>& out) const {
    if (kind_ == Kind::Var) out.insert(name_);
    if (left_) left_->collect_vars(out);
    if (right_) right_->collect_vars(out);
  }

  bool uses_alpha() const {
    if (kind_ == Kind::Alpha) return true;
    return (left_ && left_->uses_alpha()) || (right_ && right_->uses_alpha());
  }

 private:
  Term(Kind k, char name, std::shared_ptr<const Term> l, std::shared_ptr<const Term> r)
      : kind_(k), name_(name), left_(std::move(l)), right_(std::move(r)) {}

  static Term binary(Kind k, Term l, Term r) {
    return Term(k, 0, std::make_shared<const Term>(std::move(l)), std::make_shared<const Term>(std::move(r)));
  }

  Kind kind_;
  char name_;
  std::shared_ptr<const Term> left_;
  std::shared_ptr<const Term> right_;
};

struct IdentityLaw {
  std::string name;
  Term lhs;
  Term rhs;
  /// Sorted variable names; assignments and witnesses follow this order.
  std::vector<char> vars;
  bool uses_alpha = false;

  bool operator==(const IdentityLaw& o) const {
    return name == o.name && lhs == o.lhs && rhs == o.rhs && vars == o.vars && uses_alpha == o.uses_alpha;
  }
};

inline IdentityLaw make_law(std::string name, Term lhs, Term rhs) {
  std::set<char> vs;
  lhs.collect_vars(vs);
  rhs.collect_vars(vs);
  const bool alpha = lhs.uses_alpha() || rhs.uses_alpha();
  return IdentityLaw{std::move(name), std::move(lhs), std::move(rhs), std::vector<char>(vs.begin(), vs.end()), alpha};
}

inline std::string to_string(const Term& t) {
  auto operand = [](const Term& sub) {
    return sub.is_binary() ? "(" + to_string(sub) + ")" : to_string(sub);
  };
  switch (t.kind()) {
    case Term::Kind::Var: return std::string(1, t.name());
    case Term::Kind::Unit: return "e";
    case Term::Kind::Alpha: return "a(" + to_string(t.arg()) + ")";
    case Term::Kind::Mul: return operand(t.left()) + "*" + operand(t.right());
    case Term::Kind::LDiv: return operand(t.left()) + "\\" + operand(t.right());
    case Term::Kind::RDiv: return operand(t.left()) + "/" + operand(t.right());
  }
  return {};
}

inline std::string to_string(const IdentityLaw& law) { return to_string(law.lhs) + " = " + to_string(law.rhs); }

namespace detail {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  IdentityLaw parse_identity(std::string name) {
    Term lhs = parse_term();
    skip_ws();
    expect('=');
    Term rhs = parse_term();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return make_law(std::move(name), std::move(lhs), std::move(rhs));
  }

  Term parse_single_term() {
    Term t = parse_term();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, Errc code = Errc::SyntaxError) const {
    Error err(code, msg + " at position " + std::to_string(pos_));
    err.position = pos_;
    throw err;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Term parse_term() {
    Term acc = parse_factor();
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size()) return acc;
      const char op = text_[pos_];
      if (op != '*' && op != '/' && op != '\\') return acc;
      ++pos_;
      Term rhs = parse_factor();
      if (op == '*') acc = Term::mul(std::move(acc), std::move(rhs));
      else if (op == '/') acc = Term::rdiv(std::move(acc), std::move(rhs));
      else acc = Term::ldiv(std::move(acc), std::move(rhs));
    }
  }

  Term parse_factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Term inner = parse_term();
      expect(')');
      return inner;
    }
    if (c == 'a') {
      std::size_t look = pos_ + 1;
      while (look < text_.size() && std::isspace(static_cast<unsigned char>(text_[look]))) ++look;
      if (look < text_.size() && text_[look] == '(') {
        pos_ = look + 1;
        Term inner = parse_term();
        expect(')');
        return Term::alpha(std::move(inner));
      }
      fail("'a' is reserved for the self-map", Errc::ReservedName);
    }
    if (c == 'e') {
      ++pos_;
      return Term::unit();
    }
    if (c >= 'a' && c <= 'z') {
      ++pos_;
      return Term::var(c);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline IdentityLaw parse_identity(std::string_view text, std::string name = {}) {
  return detail::TermParser(text).parse_identity(std::move(name));
}

inline Term parse_term(std::string_view text) { return detail::TermParser(text).parse_single_term(); }

}  // namespace loopkit
