#pragma once

// Constructors for the polytope families used throughout: each returns the
// polytope (H and/or V representation, cross-checked) and its natural action.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "symext/action.hpp"
#include "symext/polytope.hpp"

namespace symext {

enum class ZooId { cube, a_n, b_n, parity, cardinality, birkhoff, permutahedron, spanning_tree, matching, ln };

const char* to_string(ZooId id);
std::optional<ZooId> parse_zoo_id(const std::string& name);

struct KnownBound {
  std::string quantity;
  std::string value;
  std::string provenance;
};

struct ZooEntry {
  ZooId id{};
  int n = 0;
  int l = 0;  // matching size; 0 otherwise
  std::shared_ptr<const Polytope> polytope;
  AffineAction action;
  std::vector<KnownBound> metadata;
};

/// Largest n accepted per family (cube/A_n/B_n/parity/cardinality 14,
/// Birkhoff/permutahedron 7, spanning tree 7, matching 12, L_n 14).
int zoo_cap(ZooId id);
/// Replaces every family cap (and the enumeration cap) when set.
void set_zoo_cap_override(std::optional<int> cap);
std::optional<int> zoo_cap_override();

/// S_n or A_n; past the element cap only generators and the order are kept.
PermGroup acting_group(int n, bool full_symmetric);

ZooEntry cube(int n);
ZooEntry a_n_polytope(int n);
ZooEntry b_n_polytope(int n);
ZooEntry parity_polytope(int n);
ZooEntry cardinality(int n);
/// Cells (i, j) row-major at coordinate i*n + j; A_n permutes columns.
ZooEntry birkhoff(int n);
ZooEntry permutahedron(int n);
/// Edge coordinates of K_n in lexicographic order; vertices via Pruefer codes.
ZooEntry spanning_tree(int n);
/// Vertex representation only.
ZooEntry matching_polytope(int n, int l);
/// {(y, z) in [0, 1/2]^{2n} : y_i + z_i <= 1/2, sum (y_i + z_i) = (n-1)/2}
/// with S_n permuting the (y_i, z_i) pairs.
ZooEntry ln_polytope(int n);

ZooEntry build_zoo(ZooId id, int n, int l = 0);

/// The {0, 1/2, 1}-vectors with exactly `halves` entries equal to 1/2.
std::vector<RatVec> half_integral_points(int n, int halves);

/// Inequalities of the families, exposed for reuse.
HRep cube_hrep(int n);
HRep a_n_hrep(int n);

/// Index of edge {i, j} (0-based, i != j) in the lexicographic edge order.
std::size_t edge_index(int n, int i, int j);

/// Zoo policy: H/V cross-check by vertex enumeration when small, otherwise
/// every vertex is checked against H, otherwise left unchecked.
Polytope cross_checked(HRep h, std::vector<RatVec> vertices);

}  // namespace symext
