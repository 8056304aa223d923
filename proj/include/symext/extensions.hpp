#pragma once

// Extensions (Q, p) of a G-polytope P: verification, sections and averaging,
// the explicit extension of A_n, and restriction to kernel-fixed points.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "symext/polytope.hpp"

namespace symext {

/// y -> M y + t with M of shape m x d.
struct Projection {
  RatMat m;
  RatVec t;

  std::size_t source_dim() const { return m.cols(); }
  std::size_t target_dim() const { return m.rows(); }
  RatVec apply(std::span<const Rat> y) const;
};

/// A section as a table indexed like P's (sorted) vertex list.
using SectionTable = std::vector<RatVec>;

struct ExtensionSpec {
  std::shared_ptr<const Polytope> q;
  std::shared_ptr<const Polytope> p;
  Projection proj;
  AffineAction action_q;
  AffineAction action_p;
  std::optional<SectionTable> section;
};

struct ExtensionVerdict {
  bool is_extension = false;
  bool is_symmetric = false;
  std::vector<std::string> counterexamples;
};

/// Checks that p maps Q onto P and that p commutes with the two actions
/// generator by generator. Throws dimension_mismatch on inconsistent shapes.
ExtensionVerdict verify_symmetric_extension(const ExtensionSpec& spec);

struct SectionCheck {
  bool is_section = false;
  bool is_invariant = false;
  std::vector<std::string> failures;
};

/// Exhaustive over group elements x vertices of P.
SectionCheck check_section(const ExtensionSpec& spec, const SectionTable& s);

/// s_bar(x) = (1/|G|) sum_g g^-1 s(g x). Throws not_a_section naming the first
/// vertex with p(s(x)) != x.
SectionTable average_section(const ExtensionSpec& spec, const SectionTable& s);

/// The 3n-inequality extension of A_n by L_n, with p(y, z) = y - z + 1/2 and
/// S_n permuting the pairs (y_i, z_i).
ExtensionSpec an_extension(int n);

/// Birkhoff(n) onto the permutahedron, p(X)_j = sum_i i x_ij, with the column
/// action upstairs and the coordinate action downstairs. The section sends v
/// to the matrix with x_{v_j, j} = 1.
ExtensionSpec birkhoff_extension(int n);

struct InequalitySlack {
  std::string name;  // "ineq 3", "eq 0 (<=)", ...
  Rat min_slack;
};

struct ProjectionVerdict {
  bool contained = false;  // p(Q) inside P
  bool covers = false;     // every vertex of P has a preimage in Q
  std::vector<InequalitySlack> slacks;
  std::vector<std::string> failures;

  bool equal() const { return contained && covers; }
};

/// Minimizes each inequality of P over Q pulled back through p, and checks
/// that every vertex of P has a preimage in Q (the section image when present,
/// otherwise an LP).
ProjectionVerdict certify_projection_equality(const ExtensionSpec& spec);

struct FixedPointResult {
  bool empty = false;
  std::optional<ExtensionSpec> restricted;
  std::size_t facets_before = 0, facets_after = 0;
  std::size_t dim_before = 0, dim_after = 0;
  ExtensionVerdict verdict;
};

/// Restricts Q to the points fixed by `kernel`. Both actions are over the same
/// group G; the kernel must be a normal subgroup acting trivially on P.
/// Throws not_a_subgroup when the kernel is not normal in G.
FixedPointResult fixed_point_restriction(const ExtensionSpec& spec, const PermGroup& kernel);

/// ceil(log2 |vertices|).
int generic_log_lb(const Polytope& p);

}  // namespace symext
