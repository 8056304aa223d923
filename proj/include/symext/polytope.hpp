#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "symext/action.hpp"
#include "symext/hrep.hpp"
#include "symext/lp.hpp"

namespace symext {

enum class Consistency {
  unchecked,
  vertices_verified,  // every vertex satisfies H; the full H <-> V comparison was too large to run
  certified,          // vertex enumeration of H equals V as sets
};

const char* to_string(Consistency c);

struct Polytope {
  std::optional<HRep> h;
  std::optional<VRep> v;
  Consistency consistency = Consistency::unchecked;

  std::size_t dim() const;
  /// Throws invalid_argument when there is no V-representation.
  const std::vector<RatVec>& vertices() const;
  const HRep& hrep() const;
};

/// Cap on the dimension of the affine hull of the equalities (the space the
/// enumeration actually runs in).
inline constexpr std::size_t kDefaultEnumerationCap = 14;

/// Vertices of a bounded H-polytope by the double description method, sorted
/// lexicographically. Every vertex is re-checked: feasible, and its tight
/// constraints have rank dim. Throws too_large past the cap and unbounded for
/// an unbounded feasible region.
VRep enumerate_vertices(const HRep& h, std::size_t cap = kDefaultEnumerationCap);

/// Inequalities that hold with equality on the whole feasible set.
std::vector<std::size_t> implicit_equalities(const HRep& h);

/// Irredundant description: implicit equalities are moved to `eqs`, then
/// every inequality whose removal leaves the feasible set unchanged is
/// dropped (one LP each). Throws infeasible on an empty region.
HRep facet_filter(const HRep& h);

/// Dimension of the affine hull of the feasible set.
std::size_t affine_dimension(const HRep& h);
std::size_t affine_dimension(const std::vector<RatVec>& points);

/// Fills the missing representation and cross-checks the two; throws
/// internal when they disagree.
Polytope certify(Polytope p, std::size_t cap = kDefaultEnumerationCap);
Polytope from_hrep(HRep h, std::size_t cap = kDefaultEnumerationCap);

/// Each vertex is outside the hull of the others (one LP per vertex).
/// Returns the index of the first non-extreme vertex, if any.
std::optional<std::size_t> first_non_extreme_vertex(const VRep& v);

struct Face {
  std::shared_ptr<const Polytope> parent;
  std::vector<Inequality> tight;
  std::vector<std::size_t> vertex_indices;

  std::vector<RatVec> vertices() const;
  bool contains(std::span<const Rat> x) const;
};

/// Throws invalid_argument naming the violating vertex when some inequality
/// is not valid on the parent.
Face face_of(std::shared_ptr<const Polytope> p, std::vector<Inequality> tight);

struct InvarianceResult {
  bool invariant = true;
  std::optional<Permutation> element;
  std::optional<RatVec> vertex;
};

/// Whether every generator of the action's group maps the point set onto
/// itself (sufficient for the whole group, the set being finite).
InvarianceResult is_invariant(const std::vector<RatVec>& points, const AffineAction& action);
InvarianceResult is_invariant(const Polytope& p, const AffineAction& action);
InvarianceResult is_invariant(const Face& f, const AffineAction& action);

struct AffineSubspace {
  RatVec offset;
  std::vector<RatVec> basis;
};

/// {x : g x = x for all g in subgroup}; nullopt when empty.
std::optional<AffineSubspace> fixed_subspace(const AffineAction& action, const PermGroup& subgroup);

/// Equalities cutting out the same set as fixed_subspace.
std::vector<Inequality> fixed_subspace_equations(const AffineAction& action, const PermGroup& subgroup);

RatVec centroid(const std::vector<RatVec>& points);

}  // namespace symext
