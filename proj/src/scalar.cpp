#include "patlas/scalar.hpp"

#include <ostream>
#include <sstream>

#include "patlas/errors.hpp"

namespace patlas {

namespace {

constexpr unsigned long kTrialDivisionBound = 1000000UL;

std::string rational_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

std::optional<Integer> exact_isqrt(const Integer& n) {
  if (sgn(n) < 0) return std::nullopt;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  if (r * r == n) return r;
  return std::nullopt;
}

std::pair<Integer, Integer> square_free_decompose(const Integer& n) {
  if (sgn(n) == 0) return {Integer(0), Integer(0)};
  Integer rest = abs(n);
  Integer square = 1;
  Integer core = 1;
  for (unsigned long p = 2; p <= kTrialDivisionBound; p += (p == 2 ? 1 : 2)) {
    Integer pp = Integer(p) * p;
    if (pp > rest) break;
    int e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      rest /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) square *= p;
    if (e % 2 == 1) core *= p;
  }
  if (rest > 1) {
    if (auto r = exact_isqrt(rest)) {
      square *= *r;
    } else {
      // Every prime factor of rest exceeds the bound; below bound^3 it has at
      // most two of them and, not being a square, is square-free.
      Integer bound = kTrialDivisionBound;
      if (rest >= bound * bound * bound) {
        throw UnsupportedError("integer too large to certify square-free part");
      }
      core *= rest;
    }
  }
  if (sgn(n) < 0) core = -core;
  return {square, core};
}

Scalar::Scalar(long numerator, long denominator) : a_(numerator, denominator) {
  if (denominator == 0) throw DomainError("zero denominator");
  a_.canonicalize();
}

Scalar Scalar::make(const Rational& a, const Rational& b, std::int64_t d) {
  Scalar s;
  s.a_ = a;
  if (sgn(b) == 0 || d == 0) {
    s.normalize();
    return s;
  }
  auto [square, core] = square_free_decompose(Integer(static_cast<long>(d)));
  Rational bb = b * square;
  if (core == 1) {
    s.a_ += bb;
    s.normalize();
    return s;
  }
  if (!core.fits_slong_p()) throw UnsupportedError("discriminant out of range");
  s.b_ = bb;
  s.d_ = core.get_si();
  s.normalize();
  return s;
}

Scalar Scalar::sqrt(const Scalar& x) {
  if (!x.is_rational()) throw UnsupportedError("square root of an irrational scalar");
  if (x.is_zero()) return Scalar();
  // sqrt(p/q) = sqrt(p*q)/q
  const Integer& p = x.a_.get_num();
  const Integer& q = x.a_.get_den();
  Integer pq = p * q;
  auto [square, core] = square_free_decompose(pq);
  Rational coeff(square, q);
  coeff.canonicalize();
  if (core == 1) return Scalar(coeff);
  if (!core.fits_slong_p()) throw UnsupportedError("discriminant out of range");
  return make(Rational(0), coeff, core.get_si());
}

void Scalar::normalize() {
  a_.canonicalize();
  b_.canonicalize();
  if (sgn(b_) == 0) d_ = 0;
  if (d_ == 0) b_ = 0;
}

std::int64_t Scalar::joint_discriminant(const Scalar& l, const Scalar& r) {
  if (l.d_ == 0) return r.d_;
  if (r.d_ == 0 || r.d_ == l.d_) return l.d_;
  throw UnsupportedError("extension beyond quadratic required: sqrt(" + std::to_string(l.d_) +
                         ") and sqrt(" + std::to_string(r.d_) + ") mixed");
}

Scalar Scalar::conjugate() const {
  Scalar s = *this;
  s.b_ = -s.b_;
  return s;
}

Rational Scalar::norm() const {
  Rational n = a_ * a_ - Rational(static_cast<long>(d_)) * b_ * b_;
  return n;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  if (d_ == 0) {
    Rational inv = 1 / a_;
    return Scalar(inv);
  }
  Rational n = norm();
  Scalar s;
  s.a_ = a_ / n;
  s.b_ = -b_ / n;
  s.d_ = d_;
  s.normalize();
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.a_ = -s.a_;
  s.b_ = -s.b_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  std::int64_t d = joint_discriminant(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  d_ = d;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  std::int64_t d = joint_discriminant(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  d_ = d;
  normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (d_ == 0 && o.d_ == 0) {
    a_ *= o.a_;
    return *this;
  }
  std::int64_t d = joint_discriminant(*this, o);
  Rational a = a_ * o.a_ + Rational(static_cast<long>(d)) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  d_ = d;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.d_ == 0) {
    if (sgn(o.a_) == 0) throw DomainError("division by zero");
    a_ /= o.a_;
    b_ /= o.a_;
    normalize();
    return *this;
  }
  return *this *= o.inverse();
}

bool canonical_less(const Scalar& l, const Scalar& r) {
  if (l.a_ != r.a_) return l.a_ < r.a_;
  if (l.d_ != r.d_) return l.d_ < r.d_;
  return l.b_ < r.b_;
}

std::string Scalar::str() const {
  if (d_ == 0) return rational_str(a_);
  std::string irr;
  Rational mag = abs(b_);
  std::string root = "sqrt(" + std::to_string(d_) + ")";
  irr = (mag == 1) ? root : rational_str(mag) + "*" + root;
  if (sgn(a_) == 0) return (sgn(b_) < 0 ? "-" : "") + irr;
  return rational_str(a_) + (sgn(b_) < 0 ? "-" : "+") + irr;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace patlas
