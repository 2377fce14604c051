#pragma once

#include <optional>
#include <string>
#include <vector>

#include "patlas/bracket.hpp"

namespace patlas {

struct PoissonMaxIdeal {
  Point point;
  std::vector<Scalar> relation_values;  // r(pt) per ambient relation
  std::optional<Scalar> potential_value;
};

/// Candidates p/q with |p| <= N and 1 <= q <= D in every coordinate, plus
/// any explicit extra points.
struct SearchBox {
  int numerator_bound = 4;
  int denominator_bound = 2;
  std::vector<Point> extra;
};

/// Distinct values p/q of the box, ascending.
std::vector<Scalar> box_values(const SearchBox& box);

/// All generator brackets vanish at pt.
bool is_poisson_maximal(const PoissonPresentation& pres, const Point& pt);

PoissonMaxIdeal make_ideal(const PoissonPresentation& pres, const Point& pt);

/// Box points (and extras) passing is_poisson_maximal, deduplicated and
/// sorted with point_less. Parallel over the box.
std::vector<PoissonMaxIdeal> find_poisson_maximal(const PoissonPresentation& pres, const SearchBox& box);

/// Single-threaded reference scan with the same output.
std::vector<PoissonMaxIdeal> find_poisson_maximal_serial(const PoissonPresentation& pres, const SearchBox& box);

struct JSquaredCheck {
  bool in_j_squared = false;
  bool point_is_poisson = false;
};

/// r(pt) = 0 and grad r(pt) = 0.
JSquaredCheck relation_in_J_squared(const PoissonPresentation& pres, const LaurentPoly& r, const Point& pt);

struct SingularLevel {
  Scalar lambda;
  std::vector<Point> points;
};

struct LeafReport {
  std::vector<SingularLevel> levels;  // sorted by lambda
  std::vector<std::string> strata;    // smooth, punctured singular, points
};

/// Symplectic-leaf partition for a potential bracket, from the box scan.
LeafReport leaf_report(const PoissonPresentation& pres, const SearchBox& box);

}  // namespace patlas
