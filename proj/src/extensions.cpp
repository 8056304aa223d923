#include "symext/extensions.hpp"

#include <unordered_map>

#include "symext/lp.hpp"
#include "symext/zoo.hpp"

namespace symext {

namespace {

using VertexIndex = std::unordered_map<RatVec, std::size_t, RatVecHash>;

VertexIndex index_vertices(const std::vector<RatVec>& vs) {
  VertexIndex idx;
  for (std::size_t i = 0; i < vs.size(); ++i) idx.emplace(vs[i], i);
  return idx;
}

bool inside(const Polytope& p, std::span<const Rat> x) {
  if (p.h) return p.h->contains(x);
  return std::holds_alternative<HullInside>(member_of_hull(p.vertices(), RatVec(x.begin(), x.end())));
}

void check_shapes(const ExtensionSpec& spec) {
  if (!spec.q || !spec.p) throw Error(ErrorKind::invalid_argument, "extension spec needs both Q and P");
  const std::size_t d = spec.q->dim(), m = spec.p->dim();
  if (spec.proj.m.rows() != m || spec.proj.m.cols() != d || spec.proj.t.size() != m)
    throw Error(ErrorKind::dimension_mismatch, "projection shape does not match Q and P");
  if (spec.action_q.dim() != d || spec.action_p.dim() != m)
    throw Error(ErrorKind::dimension_mismatch, "action dimensions do not match Q and P");
  if (spec.action_q.group().degree() != spec.action_p.group().degree() ||
      spec.action_q.group().generators() != spec.action_p.group().generators())
    throw Error(ErrorKind::invalid_argument, "actions on Q and P must be over the same group");
  if (spec.section) {
    if (spec.section->size() != spec.p->vertices().size())
      throw Error(ErrorKind::dimension_mismatch, "section table size differs from the vertex count of P");
    for (const auto& y : *spec.section)
      if (y.size() != d) throw Error(ErrorKind::dimension_mismatch, "section value has the wrong dimension");
  }
}

// Is there y in Q with p(y) = x?
bool has_preimage(const ExtensionSpec& spec, const RatVec& x) {
  const Polytope& q = *spec.q;
  if (q.h) {
    HRep fiber = *q.h;
    for (std::size_t r = 0; r < spec.proj.m.rows(); ++r) {
      const auto row = spec.proj.m.row(r);
      fiber.eqs.push_back({RatVec(row.begin(), row.end()), x[r] - spec.proj.t[r]});
    }
    return is_feasible(fiber);
  }
  std::vector<RatVec> images;
  for (const auto& v : q.vertices()) images.push_back(spec.proj.apply(v));
  return std::holds_alternative<HullInside>(member_of_hull(images, x));
}

}  // namespace

RatVec Projection::apply(std::span<const Rat> y) const {
  if (y.size() != m.cols()) throw Error(ErrorKind::dimension_mismatch, "projection input has the wrong dimension");
  return add(m * y, t);
}

ExtensionVerdict verify_symmetric_extension(const ExtensionSpec& spec) {
  check_shapes(spec);
  ExtensionVerdict out;
  out.is_extension = true;
  for (const auto& v : spec.q->vertices()) {
    if (!inside(*spec.p, spec.proj.apply(v))) {
      out.is_extension = false;
      out.counterexamples.push_back("vertex " + to_string(v) + " of Q projects outside P");
      break;
    }
  }
  const auto& pv = spec.p->vertices();
  for (std::size_t i = 0; i < pv.size() && out.is_extension; ++i) {
    bool ok = false;
    if (spec.section) {
      const auto& y = (*spec.section)[i];
      ok = spec.proj.apply(y) == pv[i] && inside(*spec.q, y);
    }
    if (!ok) ok = has_preimage(spec, pv[i]);
    if (!ok) {
      out.is_extension = false;
      out.counterexamples.push_back("vertex " + to_string(pv[i]) + " of P has no preimage in Q");
    }
  }

  out.is_symmetric = true;
  for (const auto& g : spec.action_q.group().generators()) {
    const AffineMap gq = spec.action_q.map(g), gp = spec.action_p.map(g);
    const RatMat lq = gq.linear_matrix(), lp = gp.linear_matrix();
    const bool linear_ok = lp * spec.proj.m == spec.proj.m * lq;
    const bool offset_ok = add(lp * std::span<const Rat>(spec.proj.t), gp.offset()) ==
                           add(spec.proj.m * std::span<const Rat>(gq.offset()), spec.proj.t);
    if (!linear_ok || !offset_ok) {
      out.is_symmetric = false;
      out.counterexamples.push_back("projection does not commute with generator " + g.cycle_string());
    }
  }
  return out;
}

SectionCheck check_section(const ExtensionSpec& spec, const SectionTable& s) {
  const auto& pv = spec.p->vertices();
  if (s.size() != pv.size()) throw Error(ErrorKind::dimension_mismatch, "section table size differs from vertex count");
  const auto idx = index_vertices(pv);
  SectionCheck out{true, true, {}};
  for (std::size_t i = 0; i < pv.size(); ++i) {
    if (spec.proj.apply(s[i]) != pv[i]) {
      out.is_section = false;
      out.failures.push_back("p(s(x)) != x at " + to_string(pv[i]));
    }
  }
  for (const auto& g : spec.action_p.group().elements()) {
    const AffineMap gq = spec.action_q.map(g), gp = spec.action_p.map(g);
    for (std::size_t i = 0; i < pv.size(); ++i) {
      const auto it = idx.find(gp.apply(pv[i]));
      if (it == idx.end()) throw Error(ErrorKind::internal, "P is not invariant under " + g.cycle_string());
      if (s[it->second] != gq.apply(s[i])) {
        out.is_invariant = false;
        if (out.failures.size() < 8)
          out.failures.push_back("s(g x) != g s(x) for g = " + g.cycle_string() + ", x = " + to_string(pv[i]));
      }
    }
  }
  return out;
}

SectionTable average_section(const ExtensionSpec& spec, const SectionTable& s) {
  check_shapes(spec);
  const auto& pv = spec.p->vertices();
  if (s.size() != pv.size()) throw Error(ErrorKind::dimension_mismatch, "section table size differs from vertex count");
  for (std::size_t i = 0; i < pv.size(); ++i)
    if (spec.proj.apply(s[i]) != pv[i]) throw Error(ErrorKind::not_a_section, "p(s(x)) != x at vertex " + to_string(pv[i]));

  const auto idx = index_vertices(pv);
  const auto& elements = spec.action_p.group().elements();
  SectionTable out(pv.size(), zeros(spec.q->dim()));
  for (const auto& g : elements) {
    const AffineMap gp = spec.action_p.map(g), ginv_q = spec.action_q.map(g.inverse());
    for (std::size_t i = 0; i < pv.size(); ++i) {
      const auto it = idx.find(gp.apply(pv[i]));
      if (it == idx.end()) throw Error(ErrorKind::internal, "P is not invariant under " + g.cycle_string());
      axpy(out[i], Rat(1), ginv_q.apply(s[it->second]));
    }
  }
  const Rat inv_order = Rat(1) / Rat(static_cast<unsigned long>(elements.size()));
  for (auto& y : out) y = scale(inv_order, y);
  return out;
}

ExtensionSpec an_extension(int n) {
  const auto ln = ln_polytope(n);
  const auto an = a_n_polytope(n);
  const std::size_t nn = static_cast<std::size_t>(n);
  ExtensionSpec spec;
  spec.q = ln.polytope;
  spec.p = an.polytope;
  spec.proj.m = RatMat(nn, 2 * nn);
  for (std::size_t i = 0; i < nn; ++i) {
    spec.proj.m(i, i) = 1;
    spec.proj.m(i, nn + i) = -1;
  }
  spec.proj.t = RatVec(nn, make_rat(1, 2));
  spec.action_q = ln.action;
  spec.action_p = point_action(ln.action.group());
  const Rat half = make_rat(1, 2);
  SectionTable s;
  for (const auto& v : an.polytope->vertices()) {
    RatVec y(2 * nn);
    for (std::size_t i = 0; i < nn; ++i) {
      if (v[i] > half) y[i] = v[i] - half;
      if (v[i] < half) y[nn + i] = half - v[i];
    }
    s.push_back(std::move(y));
  }
  spec.section = std::move(s);
  return spec;
}

ExtensionSpec birkhoff_extension(int n) {
  const auto b = birkhoff(n);
  const auto p = permutahedron(n);
  const std::size_t nn = static_cast<std::size_t>(n);
  ExtensionSpec spec;
  spec.q = b.polytope;
  spec.p = p.polytope;
  spec.proj.m = RatMat(nn, nn * nn);
  for (std::size_t i = 0; i < nn; ++i)
    for (std::size_t j = 0; j < nn; ++j) spec.proj.m(j, i * nn + j) = static_cast<long>(i + 1);
  spec.proj.t = zeros(nn);
  spec.action_q = b.action;
  spec.action_p = p.action;
  SectionTable s;
  for (const auto& v : p.polytope->vertices()) {
    RatVec x(nn * nn);
    for (std::size_t j = 0; j < nn; ++j) x[(static_cast<std::size_t>(v[j].get_num().get_ui()) - 1) * nn + j] = 1;
    s.push_back(std::move(x));
  }
  spec.section = std::move(s);
  return spec;
}

ProjectionVerdict certify_projection_equality(const ExtensionSpec& spec) {
  check_shapes(spec);
  if (!spec.q->h || !spec.p->h) throw Error(ErrorKind::invalid_argument, "projection equality needs H-representations of Q and P");
  ProjectionVerdict out;
  out.contained = true;
  const RatMat mt = spec.proj.m.transpose();

  auto pull_back = [&](const std::string& name, const RatVec& a, const Rat& b) {
    // min over Q of a.(M y + t) - b
    const RatVec c = mt * std::span<const Rat>(a);
    const auto res = lp_optimize(*spec.q->h, c, Sense::minimize);
    if (const auto* opt = std::get_if<LpOptimum>(&res)) {
      const Rat s = opt->value + dot(a, spec.proj.t) - b;
      out.slacks.push_back({name, s});
      if (s < 0) {
        out.contained = false;
        out.failures.push_back(name + " is violated by p(y) for y = " + to_string(opt->point));
      }
    } else {
      out.contained = false;
      out.failures.push_back(name + ": Q is empty or unbounded");
    }
  };
  const HRep& ph = *spec.p->h;
  for (std::size_t i = 0; i < ph.ineqs.size(); ++i) pull_back("ineq " + std::to_string(i), ph.ineqs[i].a, ph.ineqs[i].b);
  for (std::size_t i = 0; i < ph.eqs.size(); ++i) {
    pull_back("eq " + std::to_string(i) + " (>=)", ph.eqs[i].a, ph.eqs[i].b);
    pull_back("eq " + std::to_string(i) + " (<=)", scale(-1, ph.eqs[i].a), -ph.eqs[i].b);
  }

  out.covers = true;
  const auto& pv = spec.p->vertices();
  for (std::size_t i = 0; i < pv.size(); ++i) {
    bool ok;
    if (spec.section) {
      const auto& y = (*spec.section)[i];
      ok = spec.q->h->contains(y) && spec.proj.apply(y) == pv[i];
    } else {
      ok = has_preimage(spec, pv[i]);
    }
    if (!ok) {
      out.covers = false;
      out.failures.push_back("vertex " + to_string(pv[i]) + " of P has no preimage in Q");
    }
  }
  return out;
}

FixedPointResult fixed_point_restriction(const ExtensionSpec& spec, const PermGroup& kernel) {
  check_shapes(spec);
  const PermGroup& g = spec.action_q.group();
  if (kernel.degree() != g.degree()) throw Error(ErrorKind::dimension_mismatch, "kernel has the wrong degree");
  for (const auto& k : kernel.generators()) {
    if (!g.contains(k)) throw Error(ErrorKind::not_a_subgroup, "kernel generator " + k.cycle_string() + " is not in G");
    for (const auto& x : g.generators())
      if (!kernel.contains(x * k * x.inverse()))
        throw Error(ErrorKind::not_a_subgroup, "kernel is not normal: conjugating " + k.cycle_string() + " by " +
                                                   x.cycle_string() + " leaves it");
    if (!(spec.action_p.map(k) == AffineMap::identity(spec.p->dim())))
      throw Error(ErrorKind::invalid_argument, "kernel element " + k.cycle_string() + " moves P");
  }
  if (!spec.q->h) throw Error(ErrorKind::invalid_argument, "fixed point restriction needs an H-representation of Q");

  FixedPointResult out;
  const HRep q_facets = facet_filter(*spec.q->h);
  out.facets_before = q_facets.ineqs.size();
  out.dim_before = affine_dimension(q_facets);

  HRep r = q_facets;
  for (auto& e : fixed_subspace_equations(spec.action_q, kernel)) r.eqs.push_back(std::move(e));
  if (!is_feasible(r)) {
    out.empty = true;
    return out;
  }
  r = facet_filter(r);
  out.facets_after = r.ineqs.size();
  out.dim_after = affine_dimension(r);
  if (out.facets_after > out.facets_before || out.dim_after > out.dim_before)
    throw Error(ErrorKind::internal, "restriction to the fixed space grew the polytope description");

  ExtensionSpec res = spec;
  res.q = std::make_shared<const Polytope>(from_hrep(std::move(r), std::max<std::size_t>(kDefaultEnumerationCap, out.dim_after)));
  if (spec.section) {
    // Averaging over the kernel lands in the fixed space and keeps p(s(x)) = x.
    const auto& ks = kernel.elements();
    const Rat inv = Rat(1) / Rat(static_cast<unsigned long>(ks.size()));
    SectionTable s;
    for (const auto& y : *spec.section) {
      RatVec acc = zeros(y.size());
      for (const auto& k : ks) axpy(acc, inv, spec.action_q.apply(k, y));
      s.push_back(std::move(acc));
    }
    res.section = std::move(s);
  }
  out.verdict = verify_symmetric_extension(res);
  out.restricted = std::move(res);
  return out;
}

int generic_log_lb(const Polytope& p) {
  const std::size_t v = p.vertices().size();
  int b = 0;
  while ((std::size_t{1} << b) < v) ++b;
  return b;
}

}  // namespace symext
