#include "symext/action.hpp"

#include <algorithm>
#include <deque>

namespace symext {

CoordinateLabel CoordinateLabel::acted(const Permutation& g) const {
  CoordinateLabel out{tag, {}, unordered};
  out.points.reserve(points.size());
  for (int p : points) out.points.push_back(g(p));
  if (unordered) std::sort(out.points.begin(), out.points.end());
  return out;
}

std::vector<CoordinateLabel> point_labels(int n) {
  std::vector<CoordinateLabel> out;
  for (int i = 0; i < n; ++i) out.push_back({0, {i}, false});
  return out;
}

std::vector<CoordinateLabel> edge_labels(int n) {
  std::vector<CoordinateLabel> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back({0, {i, j}, true});
  return out;
}

std::vector<CoordinateLabel> column_cell_labels(int n) {
  std::vector<CoordinateLabel> out;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out.push_back({r, {c}, false});
  return out;
}

std::vector<CoordinateLabel> conjugation_cell_labels(int n) {
  std::vector<CoordinateLabel> out;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out.push_back({0, {r, c}, false});
  return out;
}

std::vector<CoordinateLabel> fixed_labels(int count, int tag) {
  std::vector<CoordinateLabel> out;
  for (int i = 0; i < count; ++i) out.push_back({tag + i, {}, false});
  return out;
}

AffineMap::AffineMap(RatMat linear, RatVec offset) : linear_(std::move(linear)), offset_(std::move(offset)) {
  if (!linear_->is_square() || linear_->rows() != offset_.size())
    throw Error(ErrorKind::dimension_mismatch, "affine map: linear part must be square and match the offset");
}

AffineMap AffineMap::identity(std::size_t dim) {
  std::vector<int> perm(dim);
  for (std::size_t i = 0; i < dim; ++i) perm[i] = static_cast<int>(i);
  return coordinate(std::move(perm));
}

AffineMap AffineMap::coordinate(std::vector<int> perm) {
  AffineMap m;
  m.offset_ = zeros(perm.size());
  m.perm_ = std::move(perm);
  return m;
}

RatVec AffineMap::apply(std::span<const Rat> x) const {
  if (x.size() != dim()) throw Error(ErrorKind::dimension_mismatch, "affine map applied to vector of wrong length");
  if (perm_) {
    RatVec y(x.size());
    for (std::size_t c = 0; c < x.size(); ++c) y[static_cast<std::size_t>((*perm_)[c])] = x[c];
    return y;
  }
  RatVec y = *linear_ * x;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += offset_[i];
  return y;
}

RatMat AffineMap::linear_matrix() const {
  if (linear_) return *linear_;
  RatMat m(dim(), dim());
  for (std::size_t c = 0; c < dim(); ++c) m(static_cast<std::size_t>((*perm_)[c]), c) = 1;
  return m;
}

AffineMap compose(const AffineMap& a, const AffineMap& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::dimension_mismatch, "composing affine maps of different dimension");
  if (a.perm_ && b.perm_) {
    std::vector<int> p(b.perm_->size());
    for (std::size_t c = 0; c < p.size(); ++c) p[c] = (*a.perm_)[static_cast<std::size_t>((*b.perm_)[c])];
    return AffineMap::coordinate(std::move(p));
  }
  const RatMat la = a.linear_matrix();
  RatVec t = la * b.offset_;
  for (std::size_t i = 0; i < t.size(); ++i) t[i] += a.offset_[i];
  return AffineMap(la * b.linear_matrix(), std::move(t));
}

bool operator==(const AffineMap& a, const AffineMap& b) {
  if (a.perm_ && b.perm_) return *a.perm_ == *b.perm_;
  return a.offset_ == b.offset_ && a.linear_matrix() == b.linear_matrix();
}

AffineAction AffineAction::coordinate(PermGroup group, std::vector<CoordinateLabel> labels) {
  AffineAction act;
  act.dim_ = labels.size();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (int p : labels[i].points)
      if (p < 0 || p >= group.degree())
        throw Error(ErrorKind::invalid_argument, "coordinate label refers to a point outside the group degree");
    if (!act.label_index_.emplace(labels[i], static_cast<int>(i)).second)
      throw Error(ErrorKind::invalid_argument, "duplicate coordinate label at index " + std::to_string(i));
  }
  act.labels_ = std::move(labels);
  act.group_ = std::move(group);
  for (const auto& g : act.group_.generators()) act.generator_maps_.push_back(act.map(g));
  return act;
}

AffineAction AffineAction::from_generators(PermGroup group, std::size_t dim, std::vector<AffineMap> generator_maps) {
  if (generator_maps.size() != group.generators().size())
    throw Error(ErrorKind::invalid_argument, "one affine map per group generator is required");
  for (const auto& m : generator_maps)
    if (m.dim() != dim) throw Error(ErrorKind::dimension_mismatch, "generator map has wrong dimension");
  AffineAction act;
  act.group_ = std::move(group);
  act.dim_ = dim;
  act.generator_maps_ = std::move(generator_maps);
  act.cache_ = std::make_shared<ElementCache>();
  return act;
}

bool AffineAction::is_linear() const {
  return std::all_of(generator_maps_.begin(), generator_maps_.end(), [](const AffineMap& m) { return m.is_linear(); });
}

const std::vector<CoordinateLabel>& AffineAction::labels() const {
  if (!labels_) throw Error(ErrorKind::invalid_argument, "action is not a coordinate action");
  return *labels_;
}

std::vector<int> AffineAction::coordinate_permutation(const Permutation& g) const {
  if (!labels_) throw Error(ErrorKind::invalid_argument, "action is not a coordinate action");
  if (g.degree() != group_.degree()) throw Error(ErrorKind::dimension_mismatch, "permutation degree differs from group");
  std::vector<int> perm(dim_);
  for (std::size_t c = 0; c < dim_; ++c) {
    auto it = label_index_.find((*labels_)[c].acted(g));
    if (it == label_index_.end())
      throw Error(ErrorKind::invalid_argument, "coordinate labels not closed under " + g.cycle_string());
    perm[c] = it->second;
  }
  return perm;
}

const std::map<Permutation, AffineMap>& AffineAction::element_maps() const {
  std::call_once(cache_->once, [this] {
    auto& maps = cache_->maps;
    std::deque<Permutation> queue{Permutation::identity(group_.degree())};
    maps.emplace(queue.front(), AffineMap::identity(dim_));
    while (!queue.empty()) {
      const Permutation h = queue.front();
      queue.pop_front();
      const AffineMap mh = maps.at(h);
      for (std::size_t i = 0; i < group_.generators().size(); ++i) {
        Permutation gh = group_.generators()[i] * h;
        if (maps.count(gh)) continue;
        if (maps.size() >= group_.cap()) throw Error(ErrorKind::too_large, "action closure exceeds element cap");
        maps.emplace(gh, compose(generator_maps_[i], mh));
        queue.push_back(std::move(gh));
      }
    }
  });
  return cache_->maps;
}

AffineMap AffineAction::map(const Permutation& g) const {
  if (labels_) return AffineMap::coordinate(coordinate_permutation(g));
  const auto& maps = element_maps();
  auto it = maps.find(g);
  if (it == maps.end()) throw Error(ErrorKind::not_a_subgroup, g.cycle_string() + " is not in the acting group");
  return it->second;
}

RatVec AffineAction::apply(const Permutation& g, std::span<const Rat> x) const { return map(g).apply(x); }

AffineAction AffineAction::restricted_to(const PermGroup& subgroup) const {
  if (labels_) return coordinate(subgroup, *labels_);
  std::vector<AffineMap> maps;
  for (const auto& g : subgroup.generators()) maps.push_back(map(g));
  return from_generators(subgroup, dim_, std::move(maps));
}

void AffineAction::verify_action_property() const {
  const Permutation e = Permutation::identity(group_.degree());
  if (!(map(e) == AffineMap::identity(dim_))) throw Error(ErrorKind::internal, "identity does not act trivially");
  const auto& gens = group_.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!(map(gens[i]) == generator_maps_[i]))
      throw Error(ErrorKind::internal, "generator map mismatch for " + gens[i].cycle_string());
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (!(map(gens[i] * gens[j]) == compose(map(gens[i]), map(gens[j]))))
        throw Error(ErrorKind::internal,
                    "action property fails for " + gens[i].cycle_string() + ", " + gens[j].cycle_string());
  }
  if (!labels_) {
    // Well-definedness: every relation of the group must hold for the maps.
    for (const auto& [h, mh] : element_maps())
      for (std::size_t i = 0; i < gens.size(); ++i)
        if (!(element_maps().at(gens[i] * h) == compose(generator_maps_[i], mh)))
          throw Error(ErrorKind::internal, "generator maps do not define an action (fails at " +
                                               gens[i].cycle_string() + " * " + h.cycle_string() + ")");
  }
}

AffineAction point_action(const PermGroup& group) { return AffineAction::coordinate(group, point_labels(group.degree())); }

}  // namespace symext
