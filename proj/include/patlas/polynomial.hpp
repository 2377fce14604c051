#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "patlas/scalar.hpp"

namespace patlas {

/// Ordered variable names; a variable flagged Laurent may carry negative
/// exponents (it is invertible in the ring).
class VarSet {
 public:
  explicit VarSet(std::vector<std::string> names, std::vector<bool> laurent = {});

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  bool is_laurent(std::size_t i) const { return laurent_.at(i); }
  bool any_laurent() const;
  std::optional<std::size_t> index_of(const std::string& name) const;

  friend bool operator==(const VarSet& l, const VarSet& r) {
    return l.names_ == r.names_ && l.laurent_ == r.laurent_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<bool> laurent_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

VarSetPtr make_varset(std::vector<std::string> names, std::vector<bool> laurent = {});
bool same_varset(const VarSetPtr& l, const VarSetPtr& r);

using Exponent = std::vector<int>;

/// Graded-lexicographic order: total degree first, then lexicographic in
/// variable order. Terms are stored ascending; printing is descending.
struct GrlexLess {
  bool operator()(const Exponent& l, const Exponent& r) const;
};

/// Assignment of one scalar per variable.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<Scalar> coords) : coords_(std::move(coords)) {}

  std::size_t size() const { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_.at(i); }
  const std::vector<Scalar>& coords() const { return coords_; }
  bool is_rational() const;

  /// Throws DomainError unless the point fits the varset (right size,
  /// nonzero at Laurent positions).
  void validate(const VarSet& vars) const;

  friend bool operator==(const Point& l, const Point& r) { return l.coords_ == r.coords_; }
  friend bool operator!=(const Point& l, const Point& r) { return !(l == r); }
  std::string str() const;

 private:
  std::vector<Scalar> coords_;
};

/// Coordinate-wise canonical order (numeric on rational coordinates).
bool point_less(const Point& l, const Point& r);

/// Sparse multivariate Laurent polynomial over Scalar in canonical form.
class LaurentPoly {
 public:
  using Terms = std::map<Exponent, Scalar, GrlexLess>;

  explicit LaurentPoly(VarSetPtr vars);

  static LaurentPoly constant(VarSetPtr vars, const Scalar& c);
  static LaurentPoly variable(VarSetPtr vars, std::size_t i);
  static LaurentPoly variable(VarSetPtr vars, const std::string& name);
  static LaurentPoly monomial(VarSetPtr vars, Exponent e, const Scalar& c = Scalar(1));

  const VarSetPtr& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  Scalar coefficient(const Exponent& e) const;

  /// Max over terms of the exponent sum (polynomial total degree); -1 for zero.
  int total_degree() const;
  /// Max over terms of the sum of absolute exponents; -1 for zero.
  int l1_degree() const;
  /// Exponent range of variable i over the support.
  std::pair<int, int> exponent_range(std::size_t i) const;
  bool has_negative_exponents() const;

  /// A single term whose variables are all Laurent (or absent): a unit.
  bool is_unit_monomial() const;
  LaurentPoly unit_inverse() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Scalar& c);

  friend LaurentPoly operator+(LaurentPoly l, const LaurentPoly& r) { return l += r; }
  friend LaurentPoly operator-(LaurentPoly l, const LaurentPoly& r) { return l -= r; }
  friend LaurentPoly operator*(const LaurentPoly& l, const LaurentPoly& r);
  friend LaurentPoly operator*(LaurentPoly l, const Scalar& c) { return l *= c; }
  friend LaurentPoly operator*(const Scalar& c, LaurentPoly r) { return r *= c; }
  LaurentPoly operator+(const Scalar& c) const;
  LaurentPoly operator-(const Scalar& c) const;

  /// Integer power; negative powers only for unit monomials.
  LaurentPoly pow(int n) const;

  friend bool operator==(const LaurentPoly& l, const LaurentPoly& r);
  friend bool operator!=(const LaurentPoly& l, const LaurentPoly& r) { return !(l == r); }

  /// Descending grlex rendering that the presentation parser reads back.
  std::string str() const;

 private:
  void check_same(const LaurentPoly& o) const;
  void add_term(const Exponent& e, const Scalar& c);

  VarSetPtr vars_;
  Terms terms_;
};

/// Formal partial derivative with respect to variable i.
LaurentPoly partial_derivative(const LaurentPoly& p, std::size_t i);
LaurentPoly partial_derivative(const LaurentPoly& p, const std::string& var);

/// Evaluation homomorphism. Throws DomainError for a zero Laurent coordinate.
Scalar evaluate(const LaurentPoly& p, const Point& pt);

/// Value and gradient at a point: the class of p - p(pt) modulo J^2 is
/// sum_k gradient[k] * (x_k - pt_k).
struct LinearPart {
  Scalar value;
  std::vector<Scalar> gradient;
};
LinearPart linear_part(const LaurentPoly& p, const Point& pt);

/// Coefficients c with sum c_i basis_i == target, if any.
std::optional<std::vector<Scalar>> express_in_span(const LaurentPoly& target,
                                                   std::span<const LaurentPoly> basis);

/// Replaces variable i of p by images[i]; images share one target varset.
/// Negative powers require unit-monomial images.
LaurentPoly substitute(const LaurentPoly& p, std::span<const LaurentPoly> images,
                       const VarSetPtr& target);

/// Whether divisor divides p in the ring (Laurent units allowed).
bool divides(const LaurentPoly& divisor, const LaurentPoly& p);

}  // namespace patlas
