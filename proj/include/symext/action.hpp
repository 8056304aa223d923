#pragma once

// Affine group actions x -> L_g x + t_g on rational space.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "symext/group.hpp"
#include "symext/rational.hpp"

namespace symext {

/// What a coordinate is indexed by: a tag plus the points it refers to. The
/// group acts on the points; `unordered` labels are re-sorted after the action
/// (edges {i, j}), ordered ones are not (matrix cells (i, j) under conjugation).
struct CoordinateLabel {
  int tag = 0;
  std::vector<int> points;
  bool unordered = false;

  CoordinateLabel acted(const Permutation& g) const;
  friend auto operator<=>(const CoordinateLabel&, const CoordinateLabel&) = default;
  friend bool operator==(const CoordinateLabel&, const CoordinateLabel&) = default;
};

/// Plain points 0..n-1 with tag 0.
std::vector<CoordinateLabel> point_labels(int n);
/// Edges of K_n in lexicographic (min, max) order.
std::vector<CoordinateLabel> edge_labels(int n);
/// Cells of an n x n matrix, row-major; the group permutes columns.
std::vector<CoordinateLabel> column_cell_labels(int n);
/// Cells of an n x n matrix, row-major; the group acts by conjugation (i, j) -> (g i, g j).
std::vector<CoordinateLabel> conjugation_cell_labels(int n);
/// `count` coordinates nothing moves (e.g. the z-block of the cardinality
/// polytope), tagged tag, tag+1, ...; pick tags no other label uses.
std::vector<CoordinateLabel> fixed_labels(int count, int tag);

class AffineMap {
 public:
  AffineMap() = default;
  AffineMap(RatMat linear, RatVec offset);
  static AffineMap identity(std::size_t dim);
  /// e_c -> e_{perm[c]}.
  static AffineMap coordinate(std::vector<int> perm);

  std::size_t dim() const noexcept { return offset_.size(); }
  RatVec apply(std::span<const Rat> x) const;
  RatMat linear_matrix() const;
  const RatVec& offset() const noexcept { return offset_; }
  const std::optional<std::vector<int>>& coordinate_permutation() const noexcept { return perm_; }
  bool is_linear() const { return is_zero(offset_); }

  /// (a after b)(x) = a(b(x)).
  friend AffineMap compose(const AffineMap& a, const AffineMap& b);
  friend bool operator==(const AffineMap& a, const AffineMap& b);

 private:
  std::optional<std::vector<int>> perm_;
  std::optional<RatMat> linear_;
  RatVec offset_;
};

class AffineAction {
 public:
  AffineAction() = default;

  /// Coordinate permutation action; throws invalid_argument when some label
  /// has an image that is not itself a label.
  static AffineAction coordinate(PermGroup group, std::vector<CoordinateLabel> labels);
  /// Arbitrary affine action given by generator images (same order as
  /// group.generators()). Maps of other elements are obtained by composing.
  static AffineAction from_generators(PermGroup group, std::size_t dim, std::vector<AffineMap> generator_maps);

  const PermGroup& group() const noexcept { return group_; }
  std::size_t dim() const noexcept { return dim_; }
  bool is_coordinate() const noexcept { return labels_.has_value(); }
  bool is_linear() const;
  const std::vector<CoordinateLabel>& labels() const;

  AffineMap map(const Permutation& g) const;
  RatVec apply(const Permutation& g, std::span<const Rat> x) const;
  /// Index of the coordinate that e_c lands on; coordinate actions only.
  std::vector<int> coordinate_permutation(const Permutation& g) const;

  /// Same action restricted to a subgroup (generators must lie in the group
  /// for explicit actions).
  AffineAction restricted_to(const PermGroup& subgroup) const;

  /// Checks identity -> (I, 0) and map(g h) = map(g) o map(h) for every pair
  /// of generators and, for explicit actions, for every element h.
  /// Throws internal on failure.
  void verify_action_property() const;

 private:
  struct ElementCache {
    std::once_flag once;
    std::map<Permutation, AffineMap> maps;
  };

  const std::map<Permutation, AffineMap>& element_maps() const;

  PermGroup group_;
  std::size_t dim_ = 0;
  std::optional<std::vector<CoordinateLabel>> labels_;
  std::map<CoordinateLabel, int> label_index_;
  std::vector<AffineMap> generator_maps_;
  std::shared_ptr<ElementCache> cache_;
};

/// Convenience: coordinate action of `group` on plain points 0..degree-1.
AffineAction point_action(const PermGroup& group);

}  // namespace symext
