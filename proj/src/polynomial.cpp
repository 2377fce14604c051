#include "patlas/polynomial.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "patlas/errors.hpp"
#include "patlas/matrix.hpp"

namespace patlas {

VarSet::VarSet(std::vector<std::string> names, std::vector<bool> laurent)
    : names_(std::move(names)), laurent_(std::move(laurent)) {
  if (laurent_.empty()) laurent_.assign(names_.size(), false);
  if (laurent_.size() != names_.size()) throw DomainError("laurent flags do not match variables");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw DomainError("empty variable name");
    if (!seen.insert(n).second) throw DomainError("duplicate variable '" + n + "'");
  }
}

bool VarSet::any_laurent() const {
  return std::any_of(laurent_.begin(), laurent_.end(), [](bool b) { return b; });
}

std::optional<std::size_t> VarSet::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

VarSetPtr make_varset(std::vector<std::string> names, std::vector<bool> laurent) {
  return std::make_shared<const VarSet>(std::move(names), std::move(laurent));
}

bool same_varset(const VarSetPtr& l, const VarSetPtr& r) {
  return l == r || (l && r && *l == *r);
}

bool GrlexLess::operator()(const Exponent& l, const Exponent& r) const {
  int dl = 0;
  int dr = 0;
  for (int e : l) dl += e;
  for (int e : r) dr += e;
  if (dl != dr) return dl < dr;
  return l < r;
}

bool Point::is_rational() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& s) { return s.is_rational(); });
}

void Point::validate(const VarSet& vars) const {
  if (coords_.size() != vars.size())
    throw DomainError("point has " + std::to_string(coords_.size()) + " coordinates, ring has " +
                      std::to_string(vars.size()) + " variables");
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (vars.is_laurent(i) && coords_[i].is_zero())
      throw DomainError("zero assigned to invertible variable '" + vars.name(i) + "'");
}

std::string Point::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ", ";
    s += coords_[i].str();
  }
  return s + ")";
}

bool point_less(const Point& l, const Point& r) {
  std::size_t n = std::min(l.size(), r.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (canonical_less(l[i], r[i])) return true;
    if (canonical_less(r[i], l[i])) return false;
  }
  return l.size() < r.size();
}

LaurentPoly::LaurentPoly(VarSetPtr vars) : vars_(std::move(vars)) {
  if (!vars_) throw DomainError("polynomial without a variable set");
}

LaurentPoly LaurentPoly::constant(VarSetPtr vars, const Scalar& c) {
  LaurentPoly p(std::move(vars));
  if (!c.is_zero()) p.terms_.emplace(Exponent(p.vars_->size(), 0), c);
  return p;
}

LaurentPoly LaurentPoly::variable(VarSetPtr vars, std::size_t i) {
  if (i >= vars->size()) throw DomainError("variable index out of range");
  Exponent e(vars->size(), 0);
  e[i] = 1;
  return monomial(std::move(vars), std::move(e));
}

LaurentPoly LaurentPoly::variable(VarSetPtr vars, const std::string& name) {
  auto i = vars->index_of(name);
  if (!i) throw DomainError("unknown variable '" + name + "'");
  return variable(std::move(vars), *i);
}

LaurentPoly LaurentPoly::monomial(VarSetPtr vars, Exponent e, const Scalar& c) {
  LaurentPoly p(std::move(vars));
  if (e.size() != p.vars_->size()) throw DomainError("exponent length mismatch");
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] < 0 && !p.vars_->is_laurent(i))
      throw DomainError("negative exponent of non-invertible variable '" + p.vars_->name(i) + "'");
  if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
  return p;
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Scalar LaurentPoly::constant_term() const { return coefficient(Exponent(vars_->size(), 0)); }

Scalar LaurentPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar() : it->second;
}

int LaurentPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

int LaurentPoly::l1_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += std::abs(x);
    d = std::max(d, s);
  }
  return d;
}

std::pair<int, int> LaurentPoly::exponent_range(std::size_t i) const {
  if (terms_.empty()) return {0, 0};
  int lo = terms_.begin()->first.at(i);
  int hi = lo;
  for (const auto& [e, c] : terms_) {
    lo = std::min(lo, e[i]);
    hi = std::max(hi, e[i]);
  }
  return {lo, hi};
}

bool LaurentPoly::has_negative_exponents() const {
  for (const auto& [e, c] : terms_)
    for (int x : e)
      if (x < 0) return true;
  return false;
}

bool LaurentPoly::is_unit_monomial() const {
  if (terms_.size() != 1) return false;
  const auto& e = terms_.begin()->first;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0 && !vars_->is_laurent(i)) return false;
  return true;
}

LaurentPoly LaurentPoly::unit_inverse() const {
  if (!is_unit_monomial()) throw DomainError("inverting a non-unit: " + str());
  const auto& [e, c] = *terms_.begin();
  Exponent inv(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) inv[i] = -e[i];
  return monomial(vars_, inv, c.inverse());
}

void LaurentPoly::check_same(const LaurentPoly& o) const {
  if (!same_varset(vars_, o.vars_)) throw DomainError("polynomials over different variable sets");
}

void LaurentPoly::add_term(const Exponent& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& l, const LaurentPoly& r) {
  l.check_same(r);
  LaurentPoly out(l.vars_);
  Exponent e(l.vars_->size());
  for (const auto& [el, cl] : l.terms_)
    for (const auto& [er, cr] : r.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = el[i] + er[i];
      out.add_term(e, cl * cr);
    }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator+(const Scalar& c) const {
  LaurentPoly p = *this;
  p.add_term(Exponent(vars_->size(), 0), c);
  return p;
}

LaurentPoly LaurentPoly::operator-(const Scalar& c) const { return *this + (-c); }

LaurentPoly LaurentPoly::pow(int n) const {
  if (n < 0) return unit_inverse().pow(-n);
  LaurentPoly result = constant(vars_, 1);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

bool operator==(const LaurentPoly& l, const LaurentPoly& r) {
  return same_varset(l.vars_, r.vars_) && l.terms_ == r.terms_;
}

namespace {

std::string monomial_str(const VarSet& vars, const Exponent& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars.name(i);
    if (e[i] != 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

}  // namespace

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono = monomial_str(*vars_, e);
    bool negative = c.is_rational() && sgn(c.rational_part()) < 0;
    Scalar mag = negative ? -c : c;
    std::string coeff;
    if (!mag.is_rational()) {
      coeff = "(" + mag.str() + ")";
    } else if (!(mag.is_one() && !mono.empty())) {
      coeff = mag.str();
    }
    std::string term = coeff;
    if (!mono.empty()) term += (coeff.empty() ? "" : "*") + mono;
    if (first) {
      out += (negative ? "-" : "") + term;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
    first = false;
  }
  return out;
}

LaurentPoly partial_derivative(const LaurentPoly& p, std::size_t i) {
  if (i >= p.vars()->size()) throw DomainError("variable index out of range");
  LaurentPoly out(p.vars());
  LaurentPoly::Terms terms;
  for (const auto& [e, c] : p.terms()) {
    if (e[i] == 0) continue;
    Exponent d = e;
    d[i] -= 1;
    out += LaurentPoly::monomial(p.vars(), d, c * Scalar(e[i]));
  }
  return out;
}

LaurentPoly partial_derivative(const LaurentPoly& p, const std::string& var) {
  auto i = p.vars()->index_of(var);
  if (!i) throw DomainError("unknown variable '" + var + "'");
  return partial_derivative(p, *i);
}

Scalar evaluate(const LaurentPoly& p, const Point& pt) {
  pt.validate(*p.vars());
  const std::size_t n = pt.size();
  // Powers are cached per variable; exponents are small.
  std::vector<std::map<int, Scalar>> cache(n);
  auto power = [&](std::size_t i, int k) -> Scalar {
    if (k == 0) return Scalar(1);
    auto it = cache[i].find(k);
    if (it != cache[i].end()) return it->second;
    Scalar base = k > 0 ? pt[i] : pt[i].inverse();
    Scalar r = 1;
    for (int j = 0; j < std::abs(k); ++j) r *= base;
    cache[i].emplace(k, r);
    return r;
  };
  Scalar total;
  for (const auto& [e, c] : p.terms()) {
    Scalar t = c;
    for (std::size_t i = 0; i < n && !t.is_zero(); ++i)
      if (e[i] != 0) t *= power(i, e[i]);
    total += t;
  }
  return total;
}

LinearPart linear_part(const LaurentPoly& p, const Point& pt) {
  LinearPart out;
  out.value = evaluate(p, pt);
  out.gradient.reserve(pt.size());
  for (std::size_t i = 0; i < pt.size(); ++i) out.gradient.push_back(evaluate(partial_derivative(p, i), pt));
  return out;
}

std::optional<std::vector<Scalar>> express_in_span(const LaurentPoly& target,
                                                   std::span<const LaurentPoly> basis) {
  std::map<Exponent, std::size_t, GrlexLess> support;
  auto note = [&](const LaurentPoly& p) {
    p.terms();
    for (const auto& [e, c] : p.terms()) support.try_emplace(e, 0);
  };
  note(target);
  for (const auto& b : basis) {
    if (!same_varset(b.vars(), target.vars())) throw DomainError("span basis over a different ring");
    note(b);
  }
  std::size_t row = 0;
  for (auto& [e, idx] : support) idx = row++;
  Matrix m(support.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (const auto& [e, c] : basis[j].terms()) m(support[e], j) = c;
  Vector rhs(support.size());
  for (const auto& [e, c] : target.terms()) rhs[support[e]] = c;
  return solve_linear(m, rhs);
}

LaurentPoly substitute(const LaurentPoly& p, std::span<const LaurentPoly> images, const VarSetPtr& target) {
  if (images.size() != p.vars()->size()) throw DomainError("substitution arity mismatch");
  for (const auto& img : images)
    if (!same_varset(img.vars(), target)) throw DomainError("substitution image over a different ring");
  const std::size_t n = images.size();
  std::vector<std::map<int, LaurentPoly>> cache(n);
  auto power = [&](std::size_t i, int k) -> const LaurentPoly& {
    auto it = cache[i].find(k);
    if (it != cache[i].end()) return it->second;
    return cache[i].emplace(k, images[i].pow(k)).first->second;
  };
  LaurentPoly out(target);
  for (const auto& [e, c] : p.terms()) {
    LaurentPoly t = LaurentPoly::constant(target, c);
    for (std::size_t i = 0; i < n; ++i)
      if (e[i] != 0) t *= power(i, e[i]);
    out += t;
  }
  return out;
}

namespace {

// Multiply by the monomial making every exponent non-negative with minimum 0
// in each variable (a unit in the Laurent ring).
LaurentPoly clear_monomial_content(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  Exponent shift(p.vars()->size());
  for (std::size_t i = 0; i < shift.size(); ++i) {
    shift[i] = -p.exponent_range(i).first;
    if (!p.vars()->is_laurent(i)) shift[i] = 0;
  }
  // Build directly so the shifted exponents need not respect Laurent flags
  // beyond what the result already satisfies.
  LaurentPoly out(p.vars());
  for (const auto& [e, c] : p.terms()) {
    Exponent s = e;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += shift[i];
    out += LaurentPoly::monomial(p.vars(), s, c);
  }
  return out;
}

int degree_of(const Exponent& e) {
  int s = 0;
  for (int x : e) s += x;
  return s;
}

}  // namespace

bool divides(const LaurentPoly& divisor, const LaurentPoly& p) {
  if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
  if (!same_varset(divisor.vars(), p.vars())) throw DomainError("division over different rings");
  if (p.is_zero()) return true;
  LaurentPoly g = clear_monomial_content(divisor);
  LaurentPoly r = clear_monomial_content(p);
  const auto& [lead_e, lead_c] = *g.terms().rbegin();
  // A single divisor is a Groebner basis of its ideal, so the remainder of
  // the division algorithm is zero exactly when g divides r.
  while (!r.is_zero()) {
    const auto& [e, c] = *r.terms().rbegin();
    Exponent q(e.size());
    bool ok = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      q[i] = e[i] - lead_e[i];
      if (q[i] < 0) ok = false;
    }
    if (!ok || degree_of(e) < degree_of(lead_e)) return false;
    LaurentPoly term = LaurentPoly::monomial(r.vars(), q, c / lead_c);
    r -= term * g;
  }
  return true;
}

}  // namespace patlas
