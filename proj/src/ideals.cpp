#include "patlas/ideals.hpp"

#include <algorithm>
#include <set>

#include <omp.h>

#include "patlas/errors.hpp"

namespace patlas {

namespace {

constexpr double kMaxBoxPoints = 2e6;

struct ScanPlan {
  std::vector<LaurentPoly> brackets;  // upper-triangle generator brackets
  std::vector<std::vector<Scalar>> axis;
  std::size_t total = 1;
};

ScanPlan plan_scan(const PoissonPresentation& pres, const SearchBox& box) {
  if (box.numerator_bound < 1 || box.denominator_bound < 1) throw DomainError("search box bounds must be at least 1");
  ScanPlan plan;
  const VarSet& v = *pres.vars();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      const LaurentPoly& b = pres.spec().generator_bracket(i, j);
      if (!b.is_zero()) plan.brackets.push_back(b);
    }
  std::vector<Scalar> values = box_values(box);
  double count = 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::vector<Scalar> axis;
    for (const auto& s : values)
      if (!(v.is_laurent(i) && s.is_zero())) axis.push_back(s);
    count *= static_cast<double>(axis.size());
    plan.axis.push_back(std::move(axis));
  }
  if (count > kMaxBoxPoints) throw UnsupportedError("search box too large (" + std::to_string(static_cast<long long>(count)) + " points)");
  plan.total = static_cast<std::size_t>(count);
  return plan;
}

Point point_at(const ScanPlan& plan, std::size_t index) {
  std::vector<Scalar> coords(plan.axis.size());
  for (std::size_t i = plan.axis.size(); i-- > 0;) {
    const auto& axis = plan.axis[i];
    coords[i] = axis[index % axis.size()];
    index /= axis.size();
  }
  return Point(std::move(coords));
}

bool brackets_vanish(const ScanPlan& plan, const Point& pt) {
  for (const auto& b : plan.brackets)
    if (!evaluate(b, pt).is_zero()) return false;
  return true;
}

std::vector<PoissonMaxIdeal> finish(const PoissonPresentation& pres, const SearchBox& box, std::vector<Point> hits) {
  for (const auto& p : box.extra) {
    p.validate(*pres.vars());
    if (is_poisson_maximal(pres, p)) hits.push_back(p);
  }
  std::sort(hits.begin(), hits.end(), point_less);
  hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
  std::vector<PoissonMaxIdeal> out;
  for (const auto& p : hits) out.push_back(make_ideal(pres, p));
  return out;
}

}  // namespace

std::vector<Scalar> box_values(const SearchBox& box) {
  std::vector<Scalar> values;
  for (int q = 1; q <= box.denominator_bound; ++q)
    for (int p = -box.numerator_bound; p <= box.numerator_bound; ++p) values.emplace_back(p, q);
  std::sort(values.begin(), values.end(), canonical_less);
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

bool is_poisson_maximal(const PoissonPresentation& pres, const Point& pt) {
  pt.validate(*pres.vars());
  const std::size_t n = pres.vars()->size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!evaluate(pres.spec().generator_bracket(i, j), pt).is_zero()) return false;
  return true;
}

PoissonMaxIdeal make_ideal(const PoissonPresentation& pres, const Point& pt) {
  PoissonMaxIdeal m;
  m.point = pt;
  for (const auto& r : pres.relations()) m.relation_values.push_back(evaluate(r, pt));
  if (pres.spec().potential()) m.potential_value = evaluate(*pres.spec().potential(), pt);
  return m;
}

std::vector<PoissonMaxIdeal> find_poisson_maximal_serial(const PoissonPresentation& pres, const SearchBox& box) {
  ScanPlan plan = plan_scan(pres, box);
  std::vector<Point> hits;
  for (std::size_t k = 0; k < plan.total; ++k) {
    Point pt = point_at(plan, k);
    if (brackets_vanish(plan, pt)) hits.push_back(std::move(pt));
  }
  return finish(pres, box, std::move(hits));
}

std::vector<PoissonMaxIdeal> find_poisson_maximal(const PoissonPresentation& pres, const SearchBox& box) {
  ScanPlan plan = plan_scan(pres, box);
  std::vector<std::vector<Point>> per_thread(static_cast<std::size_t>(omp_get_max_threads()));
  const auto total = static_cast<long long>(plan.total);
#pragma omp parallel
  {
    auto& local = per_thread[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 64)
    for (long long k = 0; k < total; ++k) {
      Point pt = point_at(plan, static_cast<std::size_t>(k));
      if (brackets_vanish(plan, pt)) local.push_back(std::move(pt));
    }
  }
  std::vector<Point> hits;
  for (auto& local : per_thread) hits.insert(hits.end(), local.begin(), local.end());
  return finish(pres, box, std::move(hits));
}

JSquaredCheck relation_in_J_squared(const PoissonPresentation& pres, const LaurentPoly& r, const Point& pt) {
  JSquaredCheck out;
  out.point_is_poisson = is_poisson_maximal(pres, pt);
  LinearPart lp = linear_part(r, pt);
  out.in_j_squared = lp.value.is_zero() && std::all_of(lp.gradient.begin(), lp.gradient.end(),
                                                       [](const Scalar& s) { return s.is_zero(); });
  return out;
}

LeafReport leaf_report(const PoissonPresentation& pres, const SearchBox& box) {
  if (!pres.spec().potential()) throw DomainError("leaf report needs a potential bracket");
  LeafReport out;
  for (const auto& m : find_poisson_maximal(pres, box)) {
    const Scalar& lambda = *m.potential_value;
    auto it = std::find_if(out.levels.begin(), out.levels.end(),
                           [&](const SingularLevel& l) { return l.lambda == lambda; });
    if (it == out.levels.end()) {
      out.levels.push_back({lambda, {m.point}});
    } else {
      it->points.push_back(m.point);
    }
  }
  std::sort(out.levels.begin(), out.levels.end(),
            [](const SingularLevel& l, const SingularLevel& r) { return canonical_less(l.lambda, r.lambda); });
  std::string lambdas;
  for (const auto& l : out.levels) lambdas += (lambdas.empty() ? "" : ", ") + l.lambda.str();
  out.strata.push_back("smooth surfaces: S_lambda for lambda not in {" + lambdas + "}");
  if (!out.levels.empty()) {
    out.strata.push_back("punctured singular surfaces: S_lambda minus its singular points for lambda in {" + lambdas + "}");
    std::string pts;
    for (const auto& l : out.levels)
      for (const auto& p : l.points) pts += (pts.empty() ? "" : ", ") + p.str();
    out.strata.push_back("singular points: " + pts);
  }
  return out;
}

}  // namespace patlas
