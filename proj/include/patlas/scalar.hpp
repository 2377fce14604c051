#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

namespace patlas {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exact element of Q or of a single quadratic extension Q(sqrt(d)).
///
/// Stored as a + b*sqrt(d) with d square-free and d != 0, 1. A value with
/// b == 0 is normalized to the rational a (d reset to 0), so equality is
/// plain field comparison. Combining two values whose irrational parts use
/// different discriminants throws UnsupportedError.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(long long value) : a_(static_cast<long>(value)) {}  // NOLINT
  Scalar(const Rational& value) : a_(value) { a_.canonicalize(); }  // NOLINT
  Scalar(const Integer& value) : a_(value) {}  // NOLINT
  Scalar(long numerator, long denominator);

  /// a + b*sqrt(d); d need not be square-free (square factors move into b).
  static Scalar make(const Rational& a, const Rational& b, std::int64_t d);

  /// Square root of a rational, in Q or Q(sqrt(d)). Throws UnsupportedError
  /// for irrational inputs.
  static Scalar sqrt(const Scalar& x);

  const Rational& rational_part() const { return a_; }
  const Rational& irrational_part() const { return b_; }
  /// 0 when the value is rational.
  std::int64_t discriminant() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && d_ == 0; }
  bool is_one() const { return d_ == 0 && a_ == 1; }
  bool is_rational() const { return d_ == 0; }
  bool is_integer() const { return d_ == 0 && a_.get_den() == 1; }

  Scalar conjugate() const;
  /// N(a + b sqrt d) = a^2 - d b^2.
  Rational norm() const;
  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar l, const Scalar& r) { return l += r; }
  friend Scalar operator-(Scalar l, const Scalar& r) { return l -= r; }
  friend Scalar operator*(Scalar l, const Scalar& r) { return l *= r; }
  friend Scalar operator/(Scalar l, const Scalar& r) { return l /= r; }

  friend bool operator==(const Scalar& l, const Scalar& r) {
    return l.d_ == r.d_ && l.a_ == r.a_ && l.b_ == r.b_;
  }
  friend bool operator!=(const Scalar& l, const Scalar& r) { return !(l == r); }

  /// Total order used for canonical sorting: numeric on Q, otherwise
  /// lexicographic on (a, d, b). Not a field order.
  friend bool canonical_less(const Scalar& l, const Scalar& r);

  /// Exact rendering: `p/q` or `a+b*sqrt(d)`.
  std::string str() const;

 private:
  void normalize();
  static std::int64_t joint_discriminant(const Scalar& l, const Scalar& r);

  Rational a_{0};
  Rational b_{0};
  std::int64_t d_ = 0;
};

bool canonical_less(const Scalar& l, const Scalar& r);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// n = square * core with core square-free (sign kept in core). Throws
/// UnsupportedError when n has a prime factor too large to certify.
std::pair<Integer, Integer> square_free_decompose(const Integer& n);

/// Exact square root of a non-negative integer, if it is a perfect square.
std::optional<Integer> exact_isqrt(const Integer& n);

}  // namespace patlas
