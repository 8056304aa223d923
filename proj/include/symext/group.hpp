#pragma once

// Finite permutation groups, materialized as full element lists.
//
// Points are 0-based internally. Constructors and serializers that speak the
// usual 1-based notation say so in their name.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "symext/error.hpp"

namespace symext {

class Permutation {
 public:
  Permutation() = default;
  /// Validates that `images` (0-based) is a bijection of {0..n-1}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  static Permutation from_one_based(std::span<const int> images);
  /// Cycle notation with 1-based points, e.g. from_cycles(4, {{1, 2}, {3, 4}}).
  static Permutation from_cycles(int degree, std::initializer_list<std::initializer_list<int>> cycles);
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
  const std::vector<int>& images() const noexcept { return images_; }
  std::vector<int> one_based() const;

  Permutation inverse() const;
  int sign() const;
  bool is_even() const { return sign() > 0; }
  bool is_identity() const;
  /// Preimage of a point set, sorted.
  std::vector<int> preimage(std::span<const int> points) const;
  /// Image of a point set, sorted.
  std::vector<int> image(std::span<const int> points) const;

  /// 1-based cycle notation, "()" for the identity.
  std::string cycle_string() const;

  /// (g * h)(i) = g(h(i)): h acts first.
  friend Permutation operator*(const Permutation& g, const Permutation& h);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

std::size_t default_element_cap();
/// Process-wide default for closure caps (CLI --cap-override).
void set_default_element_cap(std::size_t cap);

class PermGroup {
 public:
  PermGroup() : PermGroup(0, {}) {}
  PermGroup(int degree, std::vector<Permutation> generators, std::size_t cap = default_element_cap());

  /// A group from a trusted, closed element list; a small generating set is
  /// extracted greedily.
  static PermGroup from_elements(int degree, std::vector<Permutation> elements);
  static PermGroup trivial(int degree) { return PermGroup(degree, {}); }

  int degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  /// Lexicographically sorted closure of the generators, materialized on first
  /// use. Throws too_large when the closure exceeds the cap.
  const std::vector<Permutation>& elements() const;
  bool is_materialized() const;
  /// Known order when available (alternating/symmetric), else |elements()|.
  std::size_t order() const;
  bool contains(const Permutation& g) const;
  std::size_t cap() const noexcept { return cap_; }

  void set_known_order(std::size_t order) { known_order_ = order; }

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Permutation> elements;
  };

  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::size_t cap_ = 0;
  std::optional<std::size_t> known_order_;
  std::shared_ptr<Cache> cache_;
};

/// Closure of `generators`; elements are materialized eagerly.
PermGroup close_group(int degree, std::vector<Permutation> generators, std::size_t cap = default_element_cap());
PermGroup symmetric(int n, std::size_t cap = default_element_cap());
PermGroup alternating(int n, std::size_t cap = default_element_cap());
/// Alternating group on `points` (0-based), fixing the rest of [degree].
PermGroup alternating_on(int degree, std::span<const int> points);

/// |group| / |subgroup|; throws not_a_subgroup if a generator of `subgroup`
/// is not in `group`.
std::size_t index(const PermGroup& group, const PermGroup& subgroup);

/// A_n intersected with S_[j] x S_[n]\[j] (j is 1-based, 1 <= j <= n-1).
PermGroup block_subgroup(int n, int j);

enum class ZetaChoice {
  even_preferred,  // an even permutation whenever one exists
  transposition,   // always the transposition (j j+1)
};

struct Zeta {
  Permutation perm;
  bool even = false;
  /// Set when an even representative was requested but none exists.
  bool no_even_representative = false;
};

/// A permutation with zeta^{-1}([j]) = [j-1] u {j+1} (j is 1-based).
Zeta zeta(int n, int j, ZetaChoice choice = ZetaChoice::even_preferred);

/// Orbit of `x` under the group generated by the generators; `act(g, x)`
/// returns g.x. T needs operator<.
template <class T, class Act>
std::vector<T> orbit(const PermGroup& group, const T& x, Act act, std::size_t cap = default_element_cap()) {
  std::set<T> seen{x};
  std::vector<T> out{x};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : group.generators()) {
      T y = act(g, out[head]);
      if (seen.insert(y).second) {
        if (out.size() >= cap) throw Error(ErrorKind::too_large, "orbit exceeds cap");
        out.push_back(std::move(y));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Stabilizer of x, with the orbit-stabilizer identity checked exactly.
template <class T, class Act>
PermGroup stabilizer(const PermGroup& group, const T& x, Act act) {
  std::vector<Permutation> fixing;
  for (const auto& g : group.elements())
    if (act(g, x) == x) fixing.push_back(g);
  const std::size_t orbit_size = orbit(group, x, act).size();
  if (orbit_size * fixing.size() != group.elements().size())
    throw Error(ErrorKind::internal, "orbit-stabilizer identity violated");
  return PermGroup::from_elements(group.degree(), std::move(fixing));
}

/// Natural actions on points, point sets and point tuples.
inline int act_on_point(const Permutation& g, int p) { return g(p); }
std::vector<int> act_on_set(const Permutation& g, const std::vector<int>& s);
std::vector<int> act_on_tuple(const Permutation& g, const std::vector<int>& t);

/// Orbits of the group on {0..n-1} as sorted point lists.
std::vector<std::vector<int>> point_orbits(const PermGroup& group);

std::uint64_t factorial(int n);

}  // namespace symext
