#pragma once

// Quadratic lower bounds for A_n-polytopes from face families, the facet
// orbit audit, the cube family search and the matroid wrapper.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "symext/polytope.hpp"
#include "symext/zoo.hpp"

namespace symext {

/// One j of the family: F_j (valid inequalities taken with equality), H_j,
/// zeta_j and the witness vertex v_j. j is 1-based.
struct FaceCondition {
  int j = 0;
  std::vector<Inequality> face;
  PermGroup h;
  Permutation zeta;
  RatVec witness;
};

struct SuperlinearCertificate {
  std::string name;
  std::shared_ptr<const Polytope> p;
  AffineAction action;  // A_n on P; n is the degree of its group
  std::vector<FaceCondition> conditions;

  int n() const { return action.group().degree(); }
  std::vector<int> js() const;
};

struct SuperlinearVerdict {
  bool conditions_met = false;
  int n = 0, k = 0;
  Rat bound;  // n k / 2, meaningful only when conditions_met
  std::vector<std::string> failures;
  std::vector<std::string> parity_warnings;
};

/// Throws invalid_certificate when J is empty or repeats a j, some H_j does
/// not have orbits [j] and [n] \ [j] or contains an odd element, or some zeta_j
/// misses zeta^-1([j]) = [j-1] u {j+1}; invalid_argument when a face
/// inequality is not valid on P. An odd zeta_j only adds a parity warning.
SuperlinearVerdict check_superlinear(const SuperlinearCertificate& cert);

/// The certificate keeping only the listed j (throws invalid_argument for a
/// j that is not present).
SuperlinearCertificate restrict_to(const SuperlinearCertificate& cert, const std::vector<int>& js);

/// Face families with J = [n-1] for the permutahedron, the cardinality
/// polytope, the spanning tree polytope of K_n and the Birkhoff polytope.
SuperlinearCertificate permutahedron_certificate(int n);
SuperlinearCertificate cardinality_certificate(int n);
/// F_j = {sum over E(S_j) of x = |S_j| - 1} with S_j = [j] for j >= 2 and
/// S_1 = {2, ..., n} (vertex 1 is a leaf).
SuperlinearCertificate spanning_tree_certificate(int n);
SuperlinearCertificate birkhoff_certificate(int n);
/// Dispatches on perm, card, stp / spanning_tree and birkhoff.
SuperlinearCertificate corollary_certificate(ZooId id, int n);

struct FacetOrbitReport {
  std::size_t facets = 0;
  std::vector<std::vector<std::size_t>> orbits;  // indices into the facet list
  std::vector<std::size_t> sizes;                // sorted
  bool theorem61_applicable = false;             // facets < n(n-1)/2
  bool consistent = false;                       // applicable => sizes in {1, n}
  HRep irredundant;
};

/// Orbits of the facets of P under the action. An image is matched to a
/// facet up to positive scaling, or, when P has equalities and vertices, by
/// its set of tight vertices. Throws not_symmetric when some generator
/// maps a facet to something that is not a facet.
FacetOrbitReport facet_orbit_analysis(const Polytope& p, const AffineAction& action);

enum class CubeForm {
  low_zero,   // x_1 = ... = x_j = 0
  low_one,    // x_1 = ... = x_j = 1
  high_zero,  // x_{j+1} = ... = x_n = 0
  high_one,   // x_{j+1} = ... = x_n = 1
};

const char* to_string(CubeForm f);

struct CubeWitness {
  int j = 0;
  CubeForm form{};
  unsigned vertex = 0;  // bit i is x_{i+1}
  Permutation zeta;
};

struct CubeSearchReport {
  int n = 0;
  int max_feasible_family_size = 0;
  std::vector<CubeWitness> witnesses;  // for the first family of that size
  std::size_t families_checked = 0;
  std::vector<std::size_t> feasible_by_size;  // index = |J|
};

/// Every J in [n-1] with |J| <= max_k and every assignment of the four forms,
/// with zeta_j ranging over all permutations (both parities) satisfying the
/// index condition. Families are visited in lexicographic order of (J,
/// forms); witnesses are the least vertex and then the least zeta. Throws
/// too_large for n > 6 unless the zoo cap override allows it.
CubeSearchReport cube_family_search(int n, int max_k = -1);

/// The corresponding cube certificate; each witness is the least vertex that
/// works, or the least vertex of the common face when none does.
SuperlinearCertificate cube_certificate(int n, const std::vector<std::pair<int, CubeForm>>& family);

struct MatroidCondition {
  int j = 0;
  std::vector<int> flat;     // F_j, 0-based ground elements
  std::vector<int> witness;  // S_j, an independent set
  std::optional<Permutation> zeta;
};

struct MatroidInput {
  int n = 0;                                   // A_n acts on [n]
  std::vector<CoordinateLabel> labels;         // the induced action on the ground set
  std::vector<std::vector<int>> independent;   // all independent sets
  std::vector<MatroidCondition> conditions;
};

struct MatroidResult {
  SuperlinearCertificate certificate;
  SuperlinearVerdict verdict;
  std::vector<int> ranks;  // r(F_j), in condition order
};

/// Checks the independence axioms exhaustively (invalid_argument), that A_n
/// preserves independence (not_symmetric) and that every F_j is a flat
/// (invalid_argument), then checks the face family
/// {sum over F_j of x = r(F_j)} on the independent set polytope.
MatroidResult matroid_superlinear(const MatroidInput& m);

/// Graphic matroid of K_n (forests) with F_j = E(S_j), S_j as in the spanning
/// tree certificate, witness the path 1-2-...-n.
MatroidInput graphic_matroid_input(int n);

}  // namespace symext
