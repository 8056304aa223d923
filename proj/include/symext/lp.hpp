#pragma once

// Exact rational simplex (two phases, Bland's rule) and the LP-based
// membership oracle.

#include <cstddef>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "symext/hrep.hpp"
#include "symext/rational.hpp"

namespace symext {

using SparseColumn = std::vector<std::pair<std::size_t, Rat>>;

/// min c.x  s.t.  A x = b, x >= 0, with A stored by columns.
struct StandardLp {
  std::size_t rows = 0;
  std::vector<SparseColumn> columns;
  RatVec b;
  RatVec c;
};

struct StandardLpResult {
  enum class Status { optimal, infeasible, unbounded } status = Status::optimal;
  RatVec x;      // primal point (optimal/unbounded); length = #columns
  RatVec y;      // optimal duals, or a Farkas vector y^T A <= 0, y^T b > 0
  RatVec ray;    // unbounded direction with A ray = 0, ray >= 0, c.ray < 0
  Rat value;
  std::size_t pivots = 0;
};

StandardLpResult solve_standard_form(const StandardLp& lp);

enum class Sense { minimize, maximize };

/// Optimum with an exact dual certificate: objective = A_ineq^T y_ineq +
/// A_eq^T y_eq, y_ineq >= 0 (min) or <= 0 (max), and b.y = value.
struct LpOptimum {
  Rat value;
  RatVec point;
  RatVec dual_ineq;
  RatVec dual_eq;
};

/// y_ineq >= 0 and y_eq with A_ineq^T y_ineq + A_eq^T y_eq = 0, b.y > 0.
struct LpInfeasible {
  RatVec farkas_ineq;
  RatVec farkas_eq;
};

struct LpUnbounded {
  RatVec point;
  RatVec ray;
};

using LpResult = std::variant<LpOptimum, LpInfeasible, LpUnbounded>;

/// Every returned certificate is re-verified exactly; a failed re-check
/// throws internal.
LpResult lp_optimize(const HRep& h, std::span<const Rat> objective, Sense sense);

bool is_feasible(const HRep& h);

struct HullInside {
  RatVec coefficients;  // convex, one per vertex
};

/// a.x < b while a.u >= b for every vertex u.
struct HullOutside {
  RatVec a;
  Rat b;
};

using HullMembership = std::variant<HullInside, HullOutside>;

HullMembership member_of_hull(const std::vector<RatVec>& vertices, std::span<const Rat> x);

}  // namespace symext
