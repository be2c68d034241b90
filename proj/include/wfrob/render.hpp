#pragma once

#include <string>
#include <vector>

#include "wfrob/chart.hpp"

namespace wfrob {

/// Slot names for canonical rendering: the polynomial coordinates, the two
/// bare logarithmic coordinates, and the exponential markers E1, E2.
inline std::vector<std::string> chartNames(const GroupSpec& spec,
                                           Chart chart) {
  const char* base = chart == Chart::Y ? "y" : (chart == Chart::Z ? "z" : "t");
  std::vector<std::string> names;
  for (int j = 1; j <= spec.l + 2; ++j)
    names.push_back(std::string(base) + std::to_string(j));
  names.push_back("E1");
  names.push_back("E2");
  return names;
}

/// Deterministic text form: terms in the graded-lex term order of the
/// underlying representation, exact rational coefficients.
inline std::string renderPoly(const LaurentPoly& p,
                              const std::vector<std::string>& names) {
  if (p.isZero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    std::string coef = to_string(c);
    std::string term;
    if (mono.empty())
      term = coef;
    else if (coef == "1")
      term = mono;
    else if (coef == "-1")
      term = "-" + mono;
    else
      term = coef + "*" + mono;
    if (out.empty()) {
      out = term;
    } else if (!term.empty() && term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

}  // namespace wfrob
