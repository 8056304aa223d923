#pragma once

// Independent brute-force reference computations used by the unit and
// acceptance tests.

#include <algorithm>
#include <array>
#include <map>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "symext/group.hpp"
#include "symext/hrep.hpp"
#include "symext/linalg.hpp"
#include "symext/rational.hpp"

namespace oracle {

using symext::Rat;
using symext::RatMat;
using symext::RatVec;

/// Leibniz expansion; fine up to 5 x 5.
inline Rat determinant(const RatMat& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Rat det;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    Rat term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && sgn(term) != 0; ++i) term *= m(i, p[i]);
    det += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return det;
}

inline RatMat principal_submatrix(const RatMat& m, const std::vector<std::size_t>& idx) {
  RatMat s(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) s(i, j) = m(idx[i], idx[j]);
  return s;
}

/// e_k = sum of all k x k principal minors, k = 0..n.
inline std::vector<Rat> principal_minor_sums(const RatMat& m) {
  const std::size_t n = m.rows();
  std::vector<Rat> e(n + 1);
  e[0] = 1;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    e[idx.size()] += determinant(principal_submatrix(m, idx));
  }
  return e;
}

/// PSD iff every principal minor is nonnegative.
inline bool psd_by_principal_minors(const RatMat& m) {
  const std::size_t n = m.rows();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    if (sgn(determinant(principal_submatrix(m, idx))) < 0) return false;
  }
  return true;
}

/// det(lambda I - M) = sum_k (-1)^k e_k lambda^(n-k); the characteristic
/// polynomial of a symmetric matrix is real-rooted, so Descartes' rule on
/// p(-lambda), whose coefficients have the signs of e_0..e_n, counts the
/// negative eigenvalues exactly.
inline int negative_eigenvalue_count(const RatMat& m) {
  const auto e = principal_minor_sums(m);
  int changes = 0, last = 0;
  for (const auto& c : e) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

inline bool has_negative_eigenvalue(const RatMat& m) { return negative_eigenvalue_count(m) > 0; }

template <class F>
void for_each_symmetric(std::size_t n, int lo, int hi, F&& f) {
  const std::size_t slots = n * (n + 1) / 2;
  std::vector<int> vals(slots, lo);
  for (;;) {
    RatMat m(n, n);
    std::size_t s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j, ++s) {
        m(i, j) = vals[s];
        m(j, i) = vals[s];
      }
    f(m);
    std::size_t k = 0;
    while (k < slots && vals[k] == hi) vals[k++] = lo;
    if (k == slots) return;
    ++vals[k];
  }
}

/// Vertices by brute force over tight subsets: every choice of
/// (dim - rank(eqs)) inequalities is solved together with the equalities.
inline std::vector<RatVec> vertices_by_tight_subsets(const symext::HRep& h) {
  const std::size_t d = h.dim;
  std::vector<RatVec> eq_rows;
  for (const auto& q : h.eqs) eq_rows.push_back(q.a);
  const std::size_t need = d - symext::rank(eq_rows, d);
  std::set<RatVec> found;
  const std::size_t m = h.ineqs.size();
  if (need > m) return {};
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(need), true);
  do {
    std::vector<RatVec> rows;
    RatVec rhs;
    for (const auto& q : h.eqs) {
      rows.push_back(q.a);
      rhs.push_back(q.b);
    }
    for (std::size_t i = 0; i < m; ++i)
      if (pick[i]) {
        rows.push_back(h.ineqs[i].a);
        rhs.push_back(h.ineqs[i].b);
      }
    if (rows.empty()) {
      RatVec x = symext::zeros(d);
      if (d == 0 && h.contains(x)) found.insert(x);
      continue;
    }
    auto r = symext::solve_linear(RatMat::from_rows(rows, d), rhs);
    if (auto* s = std::get_if<symext::LinearSolution>(&r))
      if (s->nullspace.empty() && h.contains(s->particular)) found.insert(s->particular);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return {found.begin(), found.end()};
}

/// All matchings of K_n (vertices 0..n-1) as edge lists (a, b), a < b.
inline void for_each_matching(int n, int size, const std::function<void(const std::vector<std::pair<int, int>>&)>& f) {
  std::vector<std::pair<int, int>> cur;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == size) {
      f(cur);
      return;
    }
    for (int a = start; a < n; ++a) {
      if (used[static_cast<std::size_t>(a)]) continue;
      used[static_cast<std::size_t>(a)] = true;
      for (int b = a + 1; b < n; ++b) {
        if (used[static_cast<std::size_t>(b)]) continue;
        used[static_cast<std::size_t>(b)] = true;
        cur.emplace_back(a, b);
        rec(a + 1);
        cur.pop_back();
        used[static_cast<std::size_t>(b)] = false;
      }
      used[static_cast<std::size_t>(a)] = false;
    }
  };
  rec(0);
}

/// All elements of S_n by next_permutation.
inline std::vector<symext::Permutation> all_permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<symext::Permutation> out;
  do out.emplace_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Rank of the points' affine hull by plain elimination on differences.
inline std::size_t affine_rank(const std::vector<RatVec>& pts) {
  if (pts.empty()) return 0;
  std::vector<RatVec> rows;
  for (std::size_t i = 1; i < pts.size(); ++i) rows.push_back(symext::sub(pts[i], pts[0]));
  std::size_t r = 0;
  const std::size_t d = pts[0].size();
  for (std::size_t c = 0; c < d && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      const Rat f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < d; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

/// Facets from vertex incidences: an inequality is a facet when its tight
/// vertices span a hyperplane of the polytope; facets are counted by their
/// distinct tight sets.
inline std::size_t facet_count_by_incidence(const symext::HRep& h, const std::vector<RatVec>& vertices) {
  const std::size_t dim = affine_rank(vertices);
  std::set<std::vector<std::size_t>> tight_sets;
  for (const auto& q : h.ineqs) {
    std::vector<std::size_t> tight;
    std::vector<RatVec> pts;
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (symext::slack(q, vertices[i]) == 0) {
        tight.push_back(i);
        pts.push_back(vertices[i]);
      }
    if (tight.size() == vertices.size() || pts.empty()) continue;
    if (affine_rank(pts) + 1 == dim) tight_sets.insert(tight);
  }
  return tight_sets.size();
}

/// Counts over all perfect matchings of V_* = {0..ls-1}, V^* = {ls..ls+lu-1}
/// that contain the fixed partial matching W(as, au, a): as edges inside V_*,
/// au inside V^*, a crossing. Indexed [as][au][a][i] with i = crossing edges.
struct RestrictedCounts {
  int ls = 0, lu = 0;
  std::map<std::array<int, 4>, long> table;
  long at(int as, int au, int a, int i) const {
    auto it = table.find({as, au, a, i});
    return it == table.end() ? 0 : it->second;
  }
};

inline RestrictedCounts restricted_counts_by_enumeration(int ls, int lu) {
  RestrictedCounts out{ls, lu, {}};
  const int total = ls + lu;
  if (total % 2) return out;
  auto is_lower = [&](int v) { return v < ls; };
  // All perfect matchings as partner arrays.
  std::vector<std::vector<int>> all;
  std::vector<int> partner(static_cast<std::size_t>(total), -1);
  std::function<void()> rec = [&]() {
    int first = 0;
    while (first < total && partner[static_cast<std::size_t>(first)] >= 0) ++first;
    if (first == total) {
      all.push_back(partner);
      return;
    }
    for (int v = first + 1; v < total; ++v) {
      if (partner[static_cast<std::size_t>(v)] >= 0) continue;
      partner[static_cast<std::size_t>(first)] = v;
      partner[static_cast<std::size_t>(v)] = first;
      rec();
      partner[static_cast<std::size_t>(first)] = partner[static_cast<std::size_t>(v)] = -1;
    }
  };
  rec();
  for (int as = 0; 2 * as <= ls; ++as)
    for (int au = 0; 2 * au <= lu; ++au)
      for (int a = 0; 2 * as + a <= ls && 2 * au + a <= lu; ++a) {
        // W: (0,1),(2,3).. in V_*; (ls,ls+1).. in V^*; crossing (2as+t, ls+2au+t).
        std::vector<std::pair<int, int>> w;
        for (int t = 0; t < as; ++t) w.emplace_back(2 * t, 2 * t + 1);
        for (int t = 0; t < au; ++t) w.emplace_back(ls + 2 * t, ls + 2 * t + 1);
        for (int t = 0; t < a; ++t) w.emplace_back(2 * as + t, ls + 2 * au + t);
        for (const auto& m : all) {
          bool contains = true;
          for (auto [x, y] : w) contains = contains && m[static_cast<std::size_t>(x)] == y;
          if (!contains) continue;
          int crossing = 0;
          for (int v = 0; v < ls; ++v)
            if (!is_lower(m[static_cast<std::size_t>(v)])) ++crossing;
          ++out.table[{as, au, a, crossing}];
        }
      }
  return out;
}

}  // namespace oracle
