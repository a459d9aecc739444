#pragma once

#include <string>
#include <vector>

#include "loopkit/term.hpp"

namespace loopkit {

struct CatalogEntry {
  IdentityLaw law;
  std::string description;
};

namespace detail {

struct CatalogSource {
  const char* name;
  const char* text;
  const char* description;
};

// Inverses are not primitive: e/x is the left inverse, x\e the right inverse.
inline constexpr CatalogSource kCatalogSource[] = {
    {"associativity", "(x*y)*z = x*(y*z)", "associative law"},
    {"commutativity", "x*y = y*x", "commutative law"},
    {"flexibility", "(x*y)*x = x*(y*x)", "flexible (elastic) law"},
    {"left_bol", "y*(z*(y*x)) = (y*(z*y))*x", "left Bol identity"},
    {"right_bol", "((x*y)*z)*y = x*((y*z)*y)", "right Bol identity"},
    {"moufang", "((x*y)*z)*y = x*(y*(z*y))", "Moufang identity, first form"},
    {"moufang_2", "(y*z)*(x*y) = y*((z*x)*y)", "Moufang identity, second form"},
    {"moufang_3", "((y*z)*y)*x = y*(z*(y*x))", "Moufang identity, third form"},
    {"generalized_bol", "((x*y)*z)*a(y) = x*((y*z)*a(y))", "generalized Bol identity"},
    {"generalized_moufang", "((x*y)*z)*a(y) = x*(y*(z*a(y)))", "generalized Moufang identity"},
    {"alpha_elasticity", "(y*z)*a(y) = y*(z*a(y))", "alpha-elasticity"},
    {"half_moufang", "((a(y)*z)*y)*x = a(y)*(z*(y*x))", "half-Moufang identity"},
    {"right_alpha_alternative", "(x*y)*a(y) = x*(y*a(y))", "right alpha-alternative law"},
    {"left_alpha_alternative", "(a(y)*y)*x = a(y)*(y*x)", "left alpha-alternative law"},
    {"lip", "(e/x)*(x*y) = y", "left inverse property"},
    {"rip", "(y*x)*(x\\e) = y", "right inverse property"},
    {"middle_bol", "(x/y)*(z\\x) = x*((z*y)\\x)", "middle Bol identity"},
    {"middle_bol_left_inverses", "(x*(e/y))*((e/z)*x) = x*(((e/y)*(e/z))*x)",
     "middle Bol rewritten with left inverses"},
    {"middle_bol_right_inverses", "(x*(y\\e))*((z\\e)*x) = x*(((y\\e)*(z\\e))*x)",
     "middle Bol rewritten with right inverses"},
    {"middle_generalized_bol", "(x/y)*(a(z)\\a(x)) = x*((a(z)*y)\\a(x))", "middle generalized Bol identity"},
    {"uni1", "((y*z)/x)*(b\\(a(y)*x)) = y*(b\\(((b*z)/x)*(b\\(a(y)*x))))",
     "first universality condition for alpha-elasticity"},
    {"uni2", "((((b*y)/x)*(b\\(z*x)))/x)*a(y) = ((b*y)/x)*(b\\(z*a(y)))",
     "second universality condition for alpha-elasticity"},
    {"isotope_alpha_elasticity", "(((y/x)*(b\\z))/x)*(b\\a(y)) = (y/x)*(b\\((z/x)*(b\\a(y))))",
     "alpha-elasticity in the principal isotope u.v = (u/x)(b\\v), all x and b"},
    {"equi", "(((y*x)*(b*z))*x)*(b*a(y)) = (y*x)*(b*((z*x)*(b*a(y))))",
     "equivalent form of the universality conditions in IP loops"},
    {"alpha_shift_condition", "(a(y)*b)*a(b) = a(y*z)*z", "side condition y^a b . b^a = (yz)^a . z"},
    {"alpha_shift_condition_b", "(a(z)*a(x))*x = (a(z)*b)*a(b)", "side condition z^a x^a . x = z^a b . b^a"},
    {"exponent_two_condition", "b*b = z*z", "all squares equal"},
    {"exponent_two", "x*x = e", "every element squares to the identity"},
};

}  // namespace detail

inline const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> catalog = [] {
    std::vector<CatalogEntry> out;
    for (const auto& src : detail::kCatalogSource) {
      out.push_back({parse_identity(src.text, src.name), src.description});
    }
    return out;
  }();
  return catalog;
}

inline const IdentityLaw* find_law(const std::string& name) {
  for (const auto& entry : builtin_catalog()) {
    if (entry.law.name == name) return &entry.law;
  }
  return nullptr;
}

inline const IdentityLaw& catalog_law(const std::string& name) {
  if (const auto* law = find_law(name)) return *law;
  throw Error(Errc::UnknownLaw, "unknown law '" + name + "'");
}

inline std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& entry : builtin_catalog()) names.push_back(entry.law.name);
  return names;
}

}  // namespace loopkit
