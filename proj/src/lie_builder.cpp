#include "patlas/lie_builder.hpp"

#include <map>

#include "patlas/errors.hpp"
#include "patlas/ideals.hpp"
#include "patlas/matrix.hpp"

namespace patlas {

std::string shifted_label(const std::string& var, const Scalar& value) {
  if (value.is_zero()) return var;
  bool neg = value.is_rational() && sgn(value.rational_part()) < 0;
  return "(" + var + (neg ? "+" + (-value).str() : "-" + value.str()) + ")";
}

LieAlgebra lie_from_point(const PoissonPresentation& pres, const Point& pt) {
  if (!is_poisson_maximal(pres, pt)) throw DomainError("point " + pt.str() + " is not Poisson maximal");
  const VarSet& v = *pres.vars();
  const std::size_t n = v.size();
  StructureConstants c(n, std::vector<Vector>(n, Vector(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) c[i][j] = linear_part(pres.spec().generator_bracket(i, j), pt).gradient;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k) labels.push_back(shifted_label(v.name(k), pt[k]));
  return LieAlgebra(std::move(labels), std::move(c));
}

Point InvariantPresentation::base_point() const {
  if (base.size() == 0) return Point(std::vector<Scalar>(generators.size()));
  return base;
}

LaurentPoly InvariantPresentation::expand(const LaurentPoly& p) const {
  return substitute(p, generators, ambient.vars());
}

namespace {

bool is_homogeneous(const LaurentPoly& p) {
  int deg = 0;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    int s = 0;
    for (int x : e) s += x;
    if (first) {
      deg = s;
      first = false;
    } else if (s != deg) {
      return false;
    }
  }
  return true;
}

class GeneratorSolver {
 public:
  explicit GeneratorSolver(const InvariantPresentation& ip) : ip_(ip) {
    Point base = ip.base_point();
    if (base.size() != ip.generators.size()) throw DomainError("base point does not match the generators");
    homogeneous_ = true;
    for (std::size_t k = 0; k < ip.generators.size(); ++k) {
      LaurentPoly g = ip.generators[k] - base[k];
      if (g.is_zero() || g.is_constant()) throw DomainError("generator " + ip.generator_vars->name(k) + " is constant");
      l1_.push_back(g.l1_degree());
      tdeg_.push_back(g.total_degree());
      if (!is_homogeneous(g)) homogeneous_ = false;
      shifted_.push_back(std::move(g));
    }
  }

  struct Solution {
    std::vector<Scalar> linear;   // coefficient per generator
    LaurentPoly in_generators;    // polynomial in generator_vars (shifted)
  };

  // Solves every target sharing one product basis in a single elimination.
  std::vector<Solution> solve(const std::vector<LaurentPoly>& targets, int budget, int exact_degree,
                              const std::vector<std::string>& names) {
    const std::size_t m = shifted_.size();
    std::vector<Exponent> monos;
    monos.emplace_back(m, 0);
    for (std::size_t k = 0; k < m; ++k) {
      Exponent e(m, 0);
      e[k] = 1;
      monos.push_back(e);
    }
    Exponent cur(m, 0);
    enumerate(cur, 0, 0, 0, budget, exact_degree, monos);
    std::vector<const LaurentPoly*> basis;
    for (const auto& e : monos) basis.push_back(&product(e));

    std::map<Exponent, std::size_t, GrlexLess> support;
    auto note = [&](const LaurentPoly& p) {
      for (const auto& [e, c] : p.terms()) support.try_emplace(e, 0);
    };
    for (const auto* b : basis) note(*b);
    for (const auto& t : targets) note(t);
    std::size_t row = 0;
    for (auto& [e, idx] : support) idx = row++;
    const std::size_t cols = basis.size();
    Matrix a(support.size(), cols + targets.size());
    for (std::size_t j = 0; j < cols; ++j)
      for (const auto& [e, c] : basis[j]->terms()) a(support[e], j) = c;
    for (std::size_t t = 0; t < targets.size(); ++t)
      for (const auto& [e, c] : targets[t].terms()) a(support[e], cols + t) = c;
    RowEchelon r = row_reduce(std::move(a), cols);

    // Kernel of the basis part: linear coefficients must not move.
    std::vector<bool> is_pivot(cols, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    for (std::size_t f = 1; f <= m; ++f)
      if (!is_pivot[f]) throw DomainError("generator " + ip_.generator_vars->name(f - 1) + " is linearly dependent on products");
    for (std::size_t f = 0; f < cols; ++f) {
      if (is_pivot[f]) continue;
      for (std::size_t i = 0; i < r.rank(); ++i)
        if (r.pivots[i] >= 1 && r.pivots[i] <= m && !r.reduced(i, f).is_zero())
          throw DomainError("linear coefficients are not determined modulo J^2");
    }

    std::vector<Solution> out;
    for (std::size_t t = 0; t < targets.size(); ++t) {
      for (std::size_t i = r.rank(); i < r.reduced.rows(); ++i)
        if (!r.reduced(i, cols + t).is_zero()) throw DomainError("bracket " + names[t] + " is not expressible in the generators");
      Solution s{std::vector<Scalar>(m), LaurentPoly(ip_.generator_vars)};
      for (std::size_t i = 0; i < r.rank(); ++i) {
        const Scalar& coef = r.reduced(i, cols + t);
        if (coef.is_zero()) continue;
        std::size_t col = r.pivots[i];
        if (col == 0) throw DomainError("bracket " + names[t] + " has a nonzero constant term: base point is not Poisson");
        if (col <= m) s.linear[col - 1] = coef;
        s.in_generators += LaurentPoly::monomial(ip_.generator_vars, monos[col], coef);
      }
      out.push_back(std::move(s));
    }
    return out;
  }

  const std::vector<LaurentPoly>& shifted() const { return shifted_; }
  bool homogeneous() const { return homogeneous_; }

  // Budget and exact degree used for a target: products whose summed
  // l1-degrees fit the target's l1-degree, restricted to the target's
  // degree when everything is homogeneous.
  std::pair<int, int> key_for(const LaurentPoly& target) const {
    int exact = (homogeneous_ && is_homogeneous(target)) ? target.total_degree() : -1;
    return {target.l1_degree(), exact};
  }

 private:
  void enumerate(Exponent& cur, std::size_t k, int factors, int used, int budget, int exact,
                 std::vector<Exponent>& out) {
    if (k == cur.size()) {
      if (factors < 2) return;
      if (exact >= 0) {
        int deg = 0;
        for (std::size_t i = 0; i < cur.size(); ++i) deg += cur[i] * tdeg_[i];
        if (deg != exact) return;
      }
      out.push_back(cur);
      return;
    }
    for (int e = 0; used + e * l1_[k] <= budget; ++e) {
      cur[k] = e;
      enumerate(cur, k + 1, factors + e, used + e * l1_[k], budget, exact, out);
    }
    cur[k] = 0;
  }

  const LaurentPoly& product(const Exponent& e) {
    auto it = memo_.find(e);
    if (it != memo_.end()) return it->second;
    std::size_t k = 0;
    while (k < e.size() && e[k] == 0) ++k;
    if (k == e.size()) return memo_.emplace(e, LaurentPoly::constant(ip_.ambient.vars(), 1)).first->second;
    Exponent rest = e;
    rest[k] -= 1;
    LaurentPoly p = product(rest) * shifted_[k];
    return memo_.emplace(e, std::move(p)).first->second;
  }

  const InvariantPresentation& ip_;
  std::vector<LaurentPoly> shifted_;
  std::vector<int> l1_;
  std::vector<int> tdeg_;
  bool homogeneous_ = true;
  std::map<Exponent, LaurentPoly> memo_;
};

}  // namespace

LieAlgebra lie_from_invariants(const InvariantPresentation& ip) {
  const std::size_t m = ip.generators.size();
  if (ip.generator_vars->size() != m) throw DomainError("generator names do not match the generators");
  GeneratorSolver solver(ip);
  struct Pending {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<LaurentPoly> targets;
    std::vector<std::string> names;
  };
  std::map<std::pair<int, int>, Pending> groups;
  StructureConstants c(m, std::vector<Vector>(m, Vector(m)));
  const VarSet& gv = *ip.generator_vars;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      LaurentPoly b = ip.ambient.bracket(ip.generators[i], ip.generators[j]);
      if (b.is_zero()) continue;
      auto& g = groups[solver.key_for(b)];
      g.pairs.emplace_back(i, j);
      g.targets.push_back(std::move(b));
      g.names.push_back("{" + gv.name(i) + ", " + gv.name(j) + "}");
    }
  for (auto& [key, g] : groups) {
    auto sols = solver.solve(g.targets, key.first, key.second, g.names);
    for (std::size_t t = 0; t < sols.size(); ++t) {
      auto [i, j] = g.pairs[t];
      c[i][j] = sols[t].linear;
      c[j][i] = scale(sols[t].linear, Scalar(-1));
    }
  }
  return LieAlgebra(gv.names(), std::move(c));
}

LaurentPoly generator_bracket_in_generators(const InvariantPresentation& ip, std::size_t i, std::size_t j) {
  GeneratorSolver solver(ip);
  LaurentPoly b = ip.ambient.bracket(ip.generators.at(i), ip.generators.at(j));
  if (b.is_zero()) return LaurentPoly(ip.generator_vars);
  auto key = solver.key_for(b);
  const VarSet& gv = *ip.generator_vars;
  return solver.solve({b}, key.first, key.second, {"{" + gv.name(i) + ", " + gv.name(j) + "}"}).front().in_generators;
}

InvarianceCheck verify_invariance(const InvariantPresentation& ip) {
  InvarianceCheck out;
  const VarSet& gv = *ip.generator_vars;
  for (std::size_t s = 0; s < ip.automorphisms.size(); ++s)
    for (std::size_t k = 0; k < ip.generators.size(); ++k) {
      LaurentPoly image = ip.automorphisms[s].apply(ip.generators[k]);
      if (image != ip.generators[k]) {
        out.passed = false;
        out.violations.push_back("automorphism " + std::to_string(s + 1) + " moves " + gv.name(k) + " to " + image.str());
      }
    }
  for (const auto& r : ip.relations) {
    LaurentPoly e = ip.expand(r);
    if (!reduces_to_zero(e, ip.ambient.relations())) {
      out.passed = false;
      out.violations.push_back("relation " + r.str() + " expands to " + e.str());
    }
  }
  return out;
}

}  // namespace patlas
