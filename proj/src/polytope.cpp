#include "symext/polytope.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_set>

#include "symext/linalg.hpp"

namespace symext {

const char* to_string(Consistency c) {
  switch (c) {
    case Consistency::unchecked: return "unchecked";
    case Consistency::vertices_verified: return "vertices_verified";
    case Consistency::certified: return "certified";
  }
  return "?";
}

std::size_t Polytope::dim() const {
  if (h) return h->dim;
  if (v) return v->dim;
  return 0;
}

const std::vector<RatVec>& Polytope::vertices() const {
  if (!v) throw Error(ErrorKind::invalid_argument, "polytope has no vertex representation");
  return v->vertices;
}

const HRep& Polytope::hrep() const {
  if (!h) throw Error(ErrorKind::invalid_argument, "polytope has no inequality representation");
  return *h;
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool subset_of(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

std::size_t popcount(const Bits& a) {
  std::size_t c = 0;
  for (auto w : a) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

void set_bit(Bits& a, std::size_t i) { a[i / 64] |= std::uint64_t{1} << (i % 64); }

// Scale to a primitive integer vector (positive multiple).
void make_primitive(RatVec& z) {
  mpz_class l = 1, g = 0;
  for (const auto& x : z) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  for (auto& x : z) {
    x *= l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  }
  if (g > 1)
    for (auto& x : z) x /= g;
}

struct Ray {
  RatVec z;
  Bits tight;
};

}  // namespace

VRep enumerate_vertices(const HRep& h, std::size_t cap) {
  h.validate();
  const std::size_t d = h.dim;
  VRep out{d, {}};

  RatVec x0 = zeros(d);
  std::vector<RatVec> basis;
  if (h.eqs.empty()) {
    for (std::size_t k = 0; k < d; ++k) basis.push_back(unit_vector(d, k));
  } else {
    std::vector<RatVec> rows;
    RatVec rhs;
    for (const auto& q : h.eqs) {
      rows.push_back(q.a);
      rhs.push_back(q.b);
    }
    auto sol = solve_linear(RatMat::from_rows(rows, d), rhs);
    if (std::holds_alternative<InconsistencyWitness>(sol)) return out;
    auto& s = std::get<LinearSolution>(sol);
    x0 = std::move(s.particular);
    basis = std::move(s.nullspace);
  }
  const std::size_t k = basis.size();
  if (k > cap)
    throw Error(ErrorKind::too_large, "vertex enumeration in dimension " + std::to_string(k) + " exceeds cap " +
                                          std::to_string(cap));
  if (k == 0) {
    if (h.contains(x0)) out.vertices.push_back(x0);
    return out;
  }

  // Homogenized rows over (u, t): row 0 is t >= 0.
  const std::size_t w = k + 1;
  std::vector<RatVec> rows;
  rows.push_back(unit_vector(w, k));
  for (const auto& q : h.ineqs) {
    RatVec r(w);
    for (std::size_t j = 0; j < k; ++j) r[j] = dot(q.a, basis[j]);
    r[k] = dot(q.a, x0) - q.b;
    rows.push_back(std::move(r));
  }
  const std::size_t m = rows.size();
  const std::size_t words = (m + 63) / 64;

  std::vector<std::size_t> initial;
  std::vector<bool> processed(m, false);
  {
    std::vector<RatVec> chosen;
    for (std::size_t i = 0; i < m && initial.size() < w; ++i) {
      chosen.push_back(rows[i]);
      if (rank(chosen, w) == chosen.size()) {
        initial.push_back(i);
      } else {
        chosen.pop_back();
      }
    }
  }
  if (initial.size() < w) {
    if (is_feasible(h)) throw Error(ErrorKind::unbounded, "feasible region has a lineality direction");
    return out;
  }
  std::vector<RatVec> init_rows;
  for (auto i : initial) init_rows.push_back(rows[i]);
  const auto inv = inverse(RatMat::from_rows(init_rows, w));
  std::vector<Ray> rays;
  for (std::size_t j = 0; j < w; ++j) {
    Ray r{inv->column(j), Bits(words, 0)};
    make_primitive(r.z);
    for (std::size_t q = 0; q < w; ++q)
      if (q != j) set_bit(r.tight, initial[q]);
    rays.push_back(std::move(r));
  }
  for (auto i : initial) processed[i] = true;

  for (std::size_t i = 0; i < m; ++i) {
    if (processed[i]) continue;
    processed[i] = true;
    std::vector<Rat> val(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = dot(rows[i], rays[r].z);
      const int s = sgn(val[r]);
      if (s > 0) pos.push_back(r);
      if (s < 0) neg.push_back(r);
    }
    if (neg.empty()) {
      for (std::size_t r = 0; r < rays.size(); ++r)
        if (sgn(val[r]) == 0) set_bit(rays[r].tight, i);
      continue;
    }
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (sgn(val[r]) < 0) continue;
      Ray keep = rays[r];
      if (sgn(val[r]) == 0) set_bit(keep.tight, i);
      next.push_back(std::move(keep));
    }
    for (auto p : pos)
      for (auto q : neg) {
        Bits common(words);
        for (std::size_t b = 0; b < words; ++b) common[b] = rays[p].tight[b] & rays[q].tight[b];
        if (popcount(common) + 2 < w) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
          if (r != p && r != q && subset_of(common, rays[r].tight)) adjacent = false;
        if (!adjacent) continue;
        RatVec z = scale(val[p], rays[q].z);
        axpy(z, -val[q], rays[p].z);
        make_primitive(z);
        set_bit(common, i);
        next.push_back(Ray{std::move(z), std::move(common)});
      }
    rays = std::move(next);
  }

  std::unordered_set<RatVec, RatVecHash> seen;
  for (const auto& r : rays) {
    if (sgn(r.z[k]) == 0) {
      if (!is_zero(r.z)) throw Error(ErrorKind::unbounded, "feasible region is unbounded");
      continue;
    }
    RatVec x = x0;
    for (std::size_t j = 0; j < k; ++j) axpy(x, r.z[j] / r.z[k], basis[j]);
    if (seen.insert(x).second) out.vertices.push_back(std::move(x));
  }
  std::sort(out.vertices.begin(), out.vertices.end());

  for (const auto& x : out.vertices) {
    if (!h.contains(x)) throw Error(ErrorKind::internal, "enumerated vertex is infeasible: " + to_string(x));
    std::vector<RatVec> tight;
    for (const auto& q : h.ineqs)
      if (sgn(slack(q, x)) == 0) tight.push_back(q.a);
    for (const auto& q : h.eqs) tight.push_back(q.a);
    if (rank(tight, d) != d) throw Error(ErrorKind::internal, "enumerated point is not a vertex: " + to_string(x));
  }
  return out;
}

namespace {

// min a.x over h; nullopt when unbounded below.
std::optional<Rat> lp_min(const HRep& h, std::span<const Rat> a) {
  auto r = lp_optimize(h, a, Sense::minimize);
  if (auto* o = std::get_if<LpOptimum>(&r)) return o->value;
  if (std::holds_alternative<LpInfeasible>(r)) throw Error(ErrorKind::infeasible, "feasible region is empty");
  return std::nullopt;
}

}  // namespace

std::vector<std::size_t> implicit_equalities(const HRep& h) {
  h.validate();
  auto start = lp_optimize(h, zeros(h.dim), Sense::minimize);
  if (!std::holds_alternative<LpOptimum>(start)) throw Error(ErrorKind::infeasible, "feasible region is empty");
  std::vector<RatVec> known{std::get<LpOptimum>(start).point};
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < h.ineqs.size(); ++i) {
    const auto& q = h.ineqs[i];
    if (std::any_of(known.begin(), known.end(), [&](const RatVec& x) { return sgn(slack(q, x)) > 0; })) continue;
    auto r = lp_optimize(h, q.a, Sense::maximize);
    if (auto* o = std::get_if<LpOptimum>(&r)) {
      if (o->value == q.b)
        out.push_back(i);
      else
        known.push_back(o->point);
    }
  }
  return out;
}

HRep facet_filter(const HRep& h) {
  h.validate();
  if (!is_feasible(h)) throw Error(ErrorKind::infeasible, "facet_filter: feasible region is empty");
  const auto implicit = implicit_equalities(h);
  HRep out{h.dim, {}, {}};
  auto push_eq = [&](const Inequality& q) {
    const Inequality n = normalized_equality(q);
    if (is_zero(n.a)) return;
    for (const auto& e : out.eqs)
      if (normalized_equality(e) == n) return;
    out.eqs.push_back(q);
  };
  for (const auto& q : h.eqs) push_eq(q);
  std::vector<bool> is_implicit(h.ineqs.size(), false);
  for (auto i : implicit) {
    is_implicit[i] = true;
    push_eq(h.ineqs[i]);
  }
  std::vector<Inequality> kept;
  for (std::size_t i = 0; i < h.ineqs.size(); ++i)
    if (!is_implicit[i]) kept.push_back(h.ineqs[i]);
  for (std::size_t i = 0; i < kept.size();) {
    HRep test{h.dim, {}, out.eqs};
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) test.ineqs.push_back(kept[j]);
    const auto low = lp_min(test, kept[i].a);
    if (low && *low >= kept[i].b)
      kept.erase(kept.begin() + static_cast<long>(i));
    else
      ++i;
  }
  out.ineqs = std::move(kept);
  return out;
}

std::size_t affine_dimension(const HRep& h) {
  std::vector<RatVec> rows;
  for (const auto& q : h.eqs) rows.push_back(q.a);
  for (auto i : implicit_equalities(h)) rows.push_back(h.ineqs[i].a);
  return h.dim - rank(rows, h.dim);
}

std::size_t affine_dimension(const std::vector<RatVec>& points) {
  if (points.empty()) throw Error(ErrorKind::infeasible, "affine dimension of an empty set");
  std::vector<RatVec> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
  return rank(diffs, points[0].size());
}

std::optional<std::size_t> first_non_extreme_vertex(const VRep& v) {
  v.validate();
  const bool zero_one = std::all_of(v.vertices.begin(), v.vertices.end(), [](const RatVec& x) {
    return std::all_of(x.begin(), x.end(), [](const Rat& e) { return e == 0 || e == 1; });
  });
  std::unordered_set<RatVec, RatVecHash> distinct(v.vertices.begin(), v.vertices.end());
  if (distinct.size() != v.vertices.size()) {
    for (std::size_t i = 0; i < v.vertices.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (v.vertices[i] == v.vertices[j]) return i;
  }
  // Distinct 0/1 points are cube vertices, hence extreme in any subset.
  if (zero_one) return std::nullopt;
  for (std::size_t i = 0; i < v.vertices.size(); ++i) {
    if (v.vertices.size() == 1) break;
    std::vector<RatVec> others;
    for (std::size_t j = 0; j < v.vertices.size(); ++j)
      if (j != i) others.push_back(v.vertices[j]);
    if (std::holds_alternative<HullInside>(member_of_hull(others, v.vertices[i]))) return i;
  }
  return std::nullopt;
}

Polytope certify(Polytope p, std::size_t cap) {
  if (!p.h && !p.v) throw Error(ErrorKind::invalid_argument, "polytope has neither representation");
  if (p.h && !p.v) {
    p.v = enumerate_vertices(*p.h, cap);
    p.consistency = Consistency::certified;
    return p;
  }
  if (!p.h) {
    if (p.v->vertices.size() <= 256 && !first_non_extreme_vertex(*p.v)) p.consistency = Consistency::certified;
    return p;
  }
  p.h->validate();
  p.v->validate();
  if (p.h->dim != p.v->dim) throw Error(ErrorKind::dimension_mismatch, "H and V representations differ in dim");
  for (const auto& x : p.v->vertices)
    if (!p.h->contains(x)) throw Error(ErrorKind::internal, "listed vertex violates the H-representation: " + to_string(x));
  try {
    VRep enumerated = enumerate_vertices(*p.h, cap);
    std::vector<RatVec> listed = p.v->vertices;
    std::sort(listed.begin(), listed.end());
    if (listed != enumerated.vertices)
      throw Error(ErrorKind::internal, "vertex enumeration of H differs from the listed vertices");
    p.consistency = Consistency::certified;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::too_large) throw;
    p.consistency = Consistency::vertices_verified;
  }
  return p;
}

Polytope from_hrep(HRep h, std::size_t cap) {
  Polytope p;
  p.h = std::move(h);
  return certify(std::move(p), cap);
}

std::vector<RatVec> Face::vertices() const {
  std::vector<RatVec> out;
  const auto& all = parent->vertices();
  for (auto i : vertex_indices) out.push_back(all[i]);
  return out;
}

bool Face::contains(std::span<const Rat> x) const {
  for (const auto& q : tight)
    if (sgn(slack(q, x)) != 0) return false;
  return true;
}

Face face_of(std::shared_ptr<const Polytope> p, std::vector<Inequality> tight) {
  if (!p) throw Error(ErrorKind::invalid_argument, "face_of: null polytope");
  const auto& verts = p->vertices();
  for (std::size_t t = 0; t < tight.size(); ++t) {
    if (tight[t].a.size() != p->dim()) throw Error(ErrorKind::dimension_mismatch, "face inequality has wrong length");
    for (const auto& x : verts)
      if (sgn(slack(tight[t], x)) < 0)
        throw Error(ErrorKind::invalid_argument,
                    "inequality " + std::to_string(t) + " is not valid: violated at vertex " + to_string(x));
  }
  Face f{std::move(p), std::move(tight), {}};
  for (std::size_t i = 0; i < verts.size(); ++i)
    if (f.contains(verts[i])) f.vertex_indices.push_back(i);
  return f;
}

InvarianceResult is_invariant(const std::vector<RatVec>& points, const AffineAction& action) {
  std::unordered_set<RatVec, RatVecHash> set(points.begin(), points.end());
  for (const auto& g : action.group().generators()) {
    const AffineMap m = action.map(g);
    for (const auto& x : points)
      if (!set.count(m.apply(x))) return InvarianceResult{false, g, x};
  }
  return {};
}

InvarianceResult is_invariant(const Polytope& p, const AffineAction& action) {
  if (p.dim() != action.dim()) throw Error(ErrorKind::dimension_mismatch, "is_invariant: action dimension differs");
  return is_invariant(p.vertices(), action);
}

InvarianceResult is_invariant(const Face& f, const AffineAction& action) {
  if (f.parent->dim() != action.dim()) throw Error(ErrorKind::dimension_mismatch, "is_invariant: action dimension differs");
  return is_invariant(f.vertices(), action);
}

std::vector<Inequality> fixed_subspace_equations(const AffineAction& action, const PermGroup& subgroup) {
  const std::size_t d = action.dim();
  std::vector<Inequality> eqs;
  for (const auto& g : subgroup.generators()) {
    const AffineMap m = action.map(g);
    const RatMat l = m.linear_matrix();
    for (std::size_t i = 0; i < d; ++i) {
      Inequality q{RatVec(l.row(i).begin(), l.row(i).end()), -m.offset()[i]};
      q.a[i] -= 1;
      if (is_zero(q.a) && sgn(q.b) == 0) continue;
      eqs.push_back(std::move(q));
    }
  }
  return eqs;
}

std::optional<AffineSubspace> fixed_subspace(const AffineAction& action, const PermGroup& subgroup) {
  for (const auto& g : subgroup.generators())
    if (g.degree() != action.group().degree())
      throw Error(ErrorKind::not_a_subgroup, "subgroup degree differs from the acting group");
  const std::size_t d = action.dim();
  const auto eqs = fixed_subspace_equations(action, subgroup);
  if (eqs.empty()) {
    AffineSubspace s{zeros(d), {}};
    for (std::size_t k = 0; k < d; ++k) s.basis.push_back(unit_vector(d, k));
    return s;
  }
  std::vector<RatVec> rows;
  RatVec rhs;
  for (const auto& q : eqs) {
    rows.push_back(q.a);
    rhs.push_back(q.b);
  }
  auto sol = solve_linear(RatMat::from_rows(rows, d), rhs);
  if (std::holds_alternative<InconsistencyWitness>(sol)) return std::nullopt;
  auto& s = std::get<LinearSolution>(sol);
  return AffineSubspace{std::move(s.particular), std::move(s.nullspace)};
}

RatVec centroid(const std::vector<RatVec>& points) {
  if (points.empty()) throw Error(ErrorKind::invalid_argument, "centroid of an empty set");
  RatVec c = zeros(points[0].size());
  for (const auto& x : points) c = add(c, x);
  return scale(Rat(1) / Rat(static_cast<unsigned long>(points.size())), c);
}

}  // namespace symext
