#pragma once

// Lower-bound certificates: affine combinations of vertices whose orbit-block
// sums are nonnegative but whose point leaves P. Verifiers for the LP and SDP
// forms, and the constructive matching certificate.

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "symext/extensions.hpp"

namespace symext {

/// Vertex indices (into P's sorted vertex list), pairwise disjoint.
using Block = std::vector<std::size_t>;

struct FacetClass {
  std::string label;
  PermGroup subgroup;  // H_j; every block must lie in one H_j-orbit
  std::vector<Block> blocks;
};

struct Theorem1Certificate {
  std::shared_ptr<const Polytope> p;
  AffineAction action;
  std::vector<FacetClass> classes;
  std::vector<Rat> c;  // indexed like p->vertices()
  /// Optional face of P (each inequality valid on P, taken with equality)
  /// and an inequality valid on that face that the point should violate.
  std::vector<Inequality> face;
  std::optional<Inequality> target;
};

struct Membership {
  bool inside = false;
  std::optional<Inequality> separator;  // valid on every vertex, violated at the point
  std::optional<std::vector<Rat>> hull_coefficients;
};

struct Theorem1Verdict {
  bool system_ok = false;
  Rat coefficient_sum;
  std::vector<std::string> failures;
  RatVec point;
  Membership membership;
  bool refutation = false;
};

/// Throws invalid_certificate when blocks overlap or a block straddles two
/// H_j-orbits (the message names the class, the block and both orbits).
Theorem1Verdict verify_theorem1(const Theorem1Certificate& cert);

/// Membership of a point in conv(vertices); with a face and a target
/// inequality, a point on the face that violates the target is separated by
/// target + lambda * (face inequalities) for the least lambda valid on P.
Membership decide_membership(const std::vector<RatVec>& vertices, const RatVec& point,
                             const std::vector<Inequality>& face, const std::optional<Inequality>& target);

/// Matchings of V_* u V^* (|V_*| = ls, |V^*| = lu, ls + lu even) with exactly
/// i edges between the two sides.
mpz_class matching_counts(int ls, int lu, int i);
/// Same, among matchings that contain a fixed W with as edges inside V_*, au
/// inside V^* and a crossing. Zero when no such matching exists.
mpz_class matching_counts_restricted(int ls, int lu, int as, int au, int a, int i);

/// b with sum_i b_i f(i) = f(0) for every polynomial f of degree <= k.
std::vector<Rat> solve_interpolation(int k, const std::vector<int>& nodes);

struct MatchingCertificate {
  int n = 0, l = 0, k = 0;
  int ls = 0, lu = 0;
  std::vector<int> nodes;  // I = 1, 3, ..., 2k+1
  std::vector<Rat> b;
  std::vector<int> v_lower, v_upper;  // V_*, V^* (0-based)
};

/// Throws invalid_argument when n < 2l or l < 1.
MatchingCertificate build_matching_certificate(int n, int l);

struct BlockCheck {
  std::vector<int> v_j;
  std::vector<std::pair<int, int>> w;
  Rat direct;
  std::optional<Rat> closed_form;
};

struct MatchingExpansion {
  Theorem1Certificate certificate;
  Rat sum_c;         // must be 1
  Rat crossing_sum;  // sum c_M |M(V_*:V^*)|, must be 0
  std::size_t blocks_checked = 0;
  std::size_t closed_form_mismatches = 0;
  std::vector<BlockCheck> failures;  // negative block sums or closed-form mismatches
  bool ok() const { return sum_c == 1 && crossing_sum == 0 && failures.empty(); }
};

/// Coefficients on the vertices of the matching polytope and, for every
/// V_j with |V_j| <= k, the blocks F_W; every block sum is computed directly
/// and from the closed form.
MatchingExpansion expand_matching_cert(const MatchingCertificate& cert);

struct SdpCertificate {
  std::shared_ptr<const Polytope> p;
  std::vector<RatMat> section;  // s(v), indexed like p->vertices()
  std::vector<RatMat> a;        // A_j . X = b_j
  std::vector<Rat> b;
  std::vector<std::vector<Block>> families;
  std::vector<Rat> c;
  std::optional<Projection> proj;  // on row-major vec(X)
  std::vector<Inequality> face;
  std::optional<Inequality> target;
};

struct SdpVerdict {
  bool system_ok = false;
  std::vector<std::string> failures;
  std::optional<RatVec> psd_witness;
  RatVec point;
  Membership membership;
  bool refutation = false;
};

/// Throws not_symmetric for an asymmetric s(v) and invalid_certificate when
/// some s(v) is not in the spectrahedron or does not project to v.
SdpVerdict verify_theorem1_sdp(const SdpCertificate& cert);

/// The same certificate with every s(v) = [1] and the single constraint
/// [1] . X = 1, one family per facet class.
SdpCertificate diagonal_embedding(const Theorem1Certificate& cert);

/// (1/|G|) sum_g (gA) . (gB) for a linear action on row-major matrix space.
Rat average_frobenius(const AffineAction& action, const RatMat& a, const RatMat& b);

}  // namespace symext
