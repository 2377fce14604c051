#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "patlas/catalog.hpp"
#include "patlas/parser.hpp"

namespace patlas::test {

inline VarSetPtr vars(std::vector<std::string> names, std::vector<bool> laurent = {}) {
  return make_varset(std::move(names), std::move(laurent));
}

inline VarSetPtr xyz() { return vars({"x", "y", "z"}); }

inline LaurentPoly P(const VarSetPtr& v, const std::string& s) { return parse_polynomial(v, s); }

inline Point Pt(const VarSetPtr& v, const std::string& s) { return parse_point(v, s); }

inline Scalar Q(long n, long d = 1) { return Scalar(n, d); }

inline PoissonPresentation exact(const VarSetPtr& v, const std::string& f) {
  return PoissonPresentation(BracketSpec::exact(P(v, f)));
}

inline std::vector<Scalar> sorted(std::vector<Scalar> s) {
  std::sort(s.begin(), s.end(), [](const Scalar& a, const Scalar& b) { return canonical_less(a, b); });
  return s;
}

inline std::vector<Scalar> scalars(std::initializer_list<Scalar> s) { return sorted(std::vector<Scalar>(s)); }

}  // namespace patlas::test
