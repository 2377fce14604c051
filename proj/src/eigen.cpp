#include "patlas/eigen.hpp"

#include <algorithm>

#include "patlas/errors.hpp"

namespace patlas {

namespace {

using Poly = std::vector<Scalar>;  // ascending coefficients

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Scalar horner(const Poly& p, const Scalar& t) {
  Scalar v;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * t + *it;
  return v;
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Scalar(static_cast<long>(i)));
  trim(d);
  return d;
}

// Quotient by (t - r), assuming r is a root.
Poly deflate(const Poly& p, const Scalar& r) {
  if (p.size() < 2) return {};
  Poly q(p.size() - 1);
  Scalar carry;
  for (std::size_t i = p.size() - 1; i >= 1; --i) {
    carry = p[i] + carry * r;
    q[i - 1] = carry;
  }
  return q;
}

Poly multiply(const Poly& l, const Poly& r) {
  if (l.empty() || r.empty()) return {};
  Poly out(l.size() + r.size() - 1);
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) out[i + j] += l[i] * r[j];
  trim(out);
  return out;
}

std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  Poly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Scalar());
  Scalar lead = b.back().inverse();
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    Scalar c = a.back() * lead;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Scalar inv = a.back().inverse();
    for (auto& c : a) c *= inv;
  }
  return a;
}

std::vector<Integer> divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> small;
  std::vector<Integer> large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Rational roots of a rational polynomial with nonzero constant term.
std::vector<Rational> rational_roots(const Poly& p) {
  Integer lcm = 1;
  for (const auto& c : p) {
    const Integer& den = c.rational_part().get_den();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
  }
  Integer a0 = Rational(p.front().rational_part() * lcm).get_num();
  Integer an = Rational(p.back().rational_part() * lcm).get_num();
  if (abs(a0) > Integer("1000000000000") || abs(an) > Integer("1000000000000"))
    throw UnsupportedError("characteristic polynomial coefficients too large for root search");
  std::vector<Rational> roots;
  for (const auto& num : divisors(a0))
    for (const auto& den : divisors(an))
      for (int sign : {1, -1}) {
        Rational r(num * sign, den);
        r.canonicalize();
        if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
        if (horner(p, Scalar(r)).is_zero()) roots.push_back(r);
      }
  return roots;
}

bool all_rational(const Poly& p) {
  return std::all_of(p.begin(), p.end(), [](const Scalar& c) { return c.is_rational(); });
}

Poly conjugate(const Poly& p) {
  Poly q;
  for (const auto& c : p) q.push_back(c.conjugate());
  return q;
}

}  // namespace

std::vector<Scalar> characteristic_polynomial(const Matrix& m) {
  if (!m.is_square()) throw DomainError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
  Poly c(n + 1);
  c[n] = 1;
  Matrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix next = m * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    c[n - k] = -(m * mk).trace() / Scalar(static_cast<long>(k));
  }
  return c;
}

std::vector<Scalar> Eigensystem::spectrum() const {
  std::vector<Scalar> out;
  for (const auto& p : pairs)
    for (int i = 0; i < p.multiplicity; ++i) out.push_back(p.value);
  return out;
}

bool Eigensystem::diagonalizable() const {
  for (const auto& p : pairs)
    if (static_cast<int>(p.vectors.size()) != p.multiplicity) return false;
  return true;
}

Eigensystem eigen_small(const Matrix& m) {
  if (!m.is_square()) throw DomainError("eigenvalues of a non-square matrix");
  if (m.rows() > kEigenMaxDim) throw UnsupportedError("eigenvalue search is limited to dimension 12");
  Eigensystem out;
  const std::size_t n = m.rows();
  if (n == 0) return out;
  Poly chi = characteristic_polynomial(m);
  std::int64_t field = 0;
  for (const auto& c : chi)
    if (!c.is_rational()) field = c.discriminant();

  // Candidate roots come from a rational polynomial: chi itself, or its norm.
  Poly rational = all_rational(chi) ? chi : multiply(chi, conjugate(chi));
  Poly squarefree = divmod(rational, gcd(rational, derivative(rational))).first;
  std::vector<Scalar> candidates;
  if (squarefree.front().is_zero()) {
    candidates.emplace_back(0);
    squarefree = deflate(squarefree, Scalar());
  }
  for (const auto& r : rational_roots(squarefree)) {
    candidates.emplace_back(r);
    squarefree = deflate(squarefree, Scalar(r));
  }
  if (squarefree.size() > 3) {
    throw UnsupportedError("extension beyond quadratic required: characteristic polynomial has an irreducible factor of degree " +
                           std::to_string(squarefree.size() - 1));
  }
  if (squarefree.size() == 3) {
    // a t^2 + b t + c
    const Rational a = squarefree[2].rational_part();
    const Rational b = squarefree[1].rational_part();
    const Rational c = squarefree[0].rational_part();
    Rational disc = b * b - 4 * a * c;
    Scalar root = Scalar::sqrt(Scalar(disc));
    if (field != 0 && root.discriminant() != field)
      throw UnsupportedError("extension beyond quadratic required: sqrt(" + std::to_string(root.discriminant()) +
                             ") over Q(sqrt(" + std::to_string(field) + "))");
    field = root.discriminant();
    Scalar two_a = Scalar(Rational(2 * a));
    candidates.push_back((Scalar(Rational(-b)) + root) / two_a);
    candidates.push_back((Scalar(Rational(-b)) - root) / two_a);
  }
  for (const auto& lambda : candidates) {
    int mult = 0;
    Poly p = chi;
    while (p.size() > 1 && horner(p, lambda).is_zero()) {
      p = deflate(p, lambda);
      ++mult;
    }
    if (mult == 0) continue;
    Matrix shifted = m;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= lambda;
    out.pairs.push_back({lambda, mult, kernel(shifted)});
  }
  int total = 0;
  for (const auto& p : out.pairs) total += p.multiplicity;
  if (total != static_cast<int>(n)) throw UnsupportedError("characteristic polynomial does not split over Q or one quadratic extension");
  std::sort(out.pairs.begin(), out.pairs.end(),
            [](const Eigenpair& l, const Eigenpair& r) { return canonical_less(l.value, r.value); });
  out.discriminant = field;
  return out;
}

}  // namespace patlas
