#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "symext/rational.hpp"

namespace symext {

/// a.x >= b as an inequality, a.x = b as an equality.
struct Inequality {
  RatVec a;
  Rat b;

  friend bool operator==(const Inequality&, const Inequality&) = default;
};

inline Rat slack(const Inequality& h, std::span<const Rat> x) { return dot(h.a, x) - h.b; }

/// Scaled so the first nonzero of (a, b) has absolute value 1 and the
/// direction (>=) is kept; equal inequalities up to positive scaling
/// normalize to the same thing.
Inequality normalized(const Inequality& h);
/// As normalized(), but an equality may also be negated: the first nonzero
/// entry is made +1.
Inequality normalized_equality(const Inequality& h);

struct HRep {
  std::size_t dim = 0;
  std::vector<Inequality> ineqs;
  std::vector<Inequality> eqs;

  /// Throws dimension_mismatch when some row has the wrong length.
  void validate() const;
  bool contains(std::span<const Rat> x) const;
};

struct VRep {
  std::size_t dim = 0;
  std::vector<RatVec> vertices;

  void validate() const;
};

}  // namespace symext
