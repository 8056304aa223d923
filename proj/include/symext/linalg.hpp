#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "symext/rational.hpp"

namespace symext {

class AffineAction;

/// Consistent system: one particular solution plus a basis of the
/// homogeneous solution space.
struct LinearSolution {
  RatVec particular;
  std::vector<RatVec> nullspace;
};

/// Farkas-style witness for an inconsistent system: y^T A = 0, y^T b != 0.
struct InconsistencyWitness {
  RatVec y;
};

using LinearSystemResult = std::variant<LinearSolution, InconsistencyWitness>;

/// Exact Gauss-Jordan elimination. Pivots are chosen as the first nonzero
/// entry in column order, so results are reproducible. Returned witness and
/// nullspace vectors have their first nonzero entry positive.
LinearSystemResult solve_linear(const RatMat& a, std::span<const Rat> b);

std::size_t rank(const RatMat& a);
std::size_t rank(const std::vector<RatVec>& rows, std::size_t cols);
std::optional<RatMat> inverse(const RatMat& a);

/// M = L D L^T with L unit lower triangular. A zero pivot leaves its column of
/// L equal to the unit vector.
struct LdlDecomposition {
  RatMat lower;
  RatVec pivots;
};

/// v^T M v < 0, re-evaluated exactly.
struct NegativeDirection {
  RatVec v;
  Rat value;
};

using PsdResult = std::variant<LdlDecomposition, NegativeDirection>;

PsdResult psd_check(const RatMat& m);

inline bool is_psd(const PsdResult& r) { return std::holds_alternative<LdlDecomposition>(r); }

/// Positive definite: PSD with every pivot strictly positive.
bool is_positive_definite(const RatMat& m);

/// G-averaged Gram matrix (1/|G|) sum_g L_g^T seed L_g over the linear parts
/// of the action; the result is checked to be invariant under every element.
RatMat average_bilinear_form(const AffineAction& action, const RatMat& seed);

}  // namespace symext
