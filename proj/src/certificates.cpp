#include "symext/certificates.hpp"

#include <map>
#include <numeric>
#include <unordered_map>

#include "symext/linalg.hpp"
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

bool in_group(const PermGroup& g, const Permutation& x) {
  if (x.degree() != g.degree()) return false;
  if (!g.is_materialized()) {
    const std::uint64_t full = g.degree() <= 20 ? factorial(g.degree()) : 0;
    const bool all_even = std::all_of(g.generators().begin(), g.generators().end(),
                                      [](const Permutation& p) { return p.is_even(); });
    // Orders are only known without materializing for the named constructors.
    if (full != 0 && g.order() == full) return true;
    if (full != 0 && all_even && g.order() * 2 == full) return x.is_even();
  }
  return g.contains(x);
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

Rat sum_over(const std::vector<Rat>& c, const Block& block) {
  Rat s;
  for (auto i : block) s += c[i];
  return s;
}

void check_disjoint(const std::vector<Block>& blocks, std::size_t vertex_count, const std::string& label) {
  std::vector<int> owner(vertex_count, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (auto i : blocks[b]) {
      if (i >= vertex_count) throw Error(ErrorKind::invalid_certificate, label + ": block " + std::to_string(b) + " names a vertex out of range");
      if (owner[i] >= 0)
        throw Error(ErrorKind::invalid_certificate, label + ": blocks " + std::to_string(owner[i]) + " and " +
                                                        std::to_string(b) + " share vertex " + std::to_string(i));
      owner[i] = static_cast<int>(b);
    }
}

RatVec combination(const std::vector<RatVec>& vs, const std::vector<Rat>& c, std::size_t dim) {
  RatVec x = zeros(dim);
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (sgn(c[i]) != 0) axpy(x, c[i], vs[i]);
  return x;
}

mpz_class fact(long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

// Perfect matchings of an L + L' vertex set with exactly i crossing edges.
mpz_class crossing_count(long l1, long l2, long i) {
  const long h1 = (l1 - i) / 2, h2 = (l2 - i) / 2;
  mpz_class den = fact(i) * fact(h1) * fact(h2);
  den <<= static_cast<mp_bitcnt_t>(h1 + h2);
  const mpz_class num = fact(l1) * fact(l2);
  return num / den;
}

Rat ratio(const mpz_class& num, const mpz_class& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string set_string(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i] + 1);
  return out + "}";
}

}  // namespace

Membership decide_membership(const std::vector<RatVec>& vertices, const RatVec& point, const std::vector<Inequality>& face,
                             const std::optional<Inequality>& target) {
  Membership out;
  if (target) {
    std::vector<Rat> face_slack(vertices.size());
    for (std::size_t v = 0; v < vertices.size(); ++v) {
      for (const auto& f : face) {
        const Rat s = slack(f, vertices[v]);
        if (s < 0) throw Error(ErrorKind::invalid_certificate, "face inequality violated at vertex " + to_string(vertices[v]));
        face_slack[v] += s;
      }
      if (face_slack[v] == 0 && slack(*target, vertices[v]) < 0)
        throw Error(ErrorKind::invalid_certificate, "target inequality not valid on the face at " + to_string(vertices[v]));
    }
    bool on_face = true;
    for (const auto& f : face) on_face = on_face && slack(f, point) == 0;
    const Rat violation = slack(*target, point);
    if (on_face && violation < 0) {
      Rat lambda = 0;
      for (std::size_t v = 0; v < vertices.size(); ++v) {
        if (face_slack[v] == 0) continue;
        const Rat need = -slack(*target, vertices[v]) / face_slack[v];
        if (need > lambda) lambda = need;
      }
      Inequality sep = *target;
      for (const auto& f : face) {
        axpy(sep.a, lambda, f.a);
        sep.b += lambda * f.b;
      }
      for (const auto& v : vertices)
        if (slack(sep, v) < 0) throw Error(ErrorKind::internal, "constructed separator is not valid on P");
      if (slack(sep, point) >= 0) throw Error(ErrorKind::internal, "constructed separator does not cut the point");
      out.separator = std::move(sep);
      return out;
    }
  }
  const auto res = member_of_hull(vertices, point);
  if (const auto* in = std::get_if<HullInside>(&res)) {
    out.inside = true;
    out.hull_coefficients = in->coefficients;
  } else {
    const auto& o = std::get<HullOutside>(res);
    out.separator = Inequality{o.a, o.b};
  }
  return out;
}

Theorem1Verdict verify_theorem1(const Theorem1Certificate& cert) {
  if (!cert.p) throw Error(ErrorKind::invalid_certificate, "certificate has no polytope");
  const auto& vs = cert.p->vertices();
  if (cert.c.size() != vs.size()) throw Error(ErrorKind::invalid_certificate, "one coefficient per vertex is required");
  if (cert.action.dim() != cert.p->dim()) throw Error(ErrorKind::dimension_mismatch, "action dimension differs from P");
  const auto idx = index_vertices(vs);
  const PermGroup& g = cert.action.group();

  for (const auto& cls : cert.classes) {
    check_disjoint(cls.blocks, vs.size(), cls.label);
    if (cls.subgroup.degree() != g.degree()) throw Error(ErrorKind::invalid_certificate, cls.label + ": subgroup has the wrong degree");
    UnionFind uf(vs.size());
    for (const auto& h : cls.subgroup.generators()) {
      if (!in_group(g, h)) throw Error(ErrorKind::invalid_certificate, cls.label + ": " + h.cycle_string() + " is not in G");
      const AffineMap m = cert.action.map(h);
      for (std::size_t i = 0; i < vs.size(); ++i) {
        const auto it = idx.find(m.apply(vs[i]));
        if (it == idx.end()) throw Error(ErrorKind::invalid_certificate, "P is not invariant under " + h.cycle_string());
        uf.unite(i, it->second);
      }
    }
    for (std::size_t b = 0; b < cls.blocks.size(); ++b) {
      const auto& block = cls.blocks[b];
      for (auto i : block)
        if (uf.find(i) != uf.find(block.front()))
          throw Error(ErrorKind::invalid_certificate, cls.label + ": block " + std::to_string(b) + " meets two orbits, of " +
                                                          to_string(vs[block.front()]) + " and of " + to_string(vs[i]));
    }
  }

  Theorem1Verdict out;
  for (const auto& x : cert.c) out.coefficient_sum += x;
  if (out.coefficient_sum != 1) out.failures.push_back("coefficients sum to " + to_string(out.coefficient_sum));
  for (const auto& cls : cert.classes)
    for (std::size_t b = 0; b < cls.blocks.size(); ++b) {
      const Rat s = sum_over(cert.c, cls.blocks[b]);
      if (s < 0) out.failures.push_back(cls.label + ": block " + std::to_string(b) + " sums to " + to_string(s));
    }
  out.system_ok = out.failures.empty();
  out.point = combination(vs, cert.c, cert.p->dim());
  out.membership = decide_membership(vs, out.point, cert.face, cert.target);
  out.refutation = out.system_ok && !out.membership.inside;
  return out;
}

mpz_class matching_counts(int ls, int lu, int i) {
  if (ls < 0 || lu < 0 || i < 0) throw Error(ErrorKind::invalid_argument, "matching_counts: negative argument");
  if (i > std::min(ls, lu)) throw Error(ErrorKind::invalid_argument, "matching_counts: i exceeds both sides");
  if ((ls - i) % 2 != 0 || (lu - i) % 2 != 0)
    throw Error(ErrorKind::invalid_argument, "matching_counts: parity of i differs from the side sizes");
  return crossing_count(ls, lu, i);
}

mpz_class matching_counts_restricted(int ls, int lu, int as, int au, int a, int i) {
  if (ls < 0 || lu < 0 || as < 0 || au < 0 || a < 0 || i < 0)
    throw Error(ErrorKind::invalid_argument, "matching_counts_restricted: negative argument");
  if (i < a) throw Error(ErrorKind::invalid_argument, "matching_counts_restricted: i < fixed crossing edges");
  const int l1 = ls - 2 * as - a, l2 = lu - 2 * au - a, j = i - a;
  if (l1 < 0 || l2 < 0) throw Error(ErrorKind::invalid_argument, "matching_counts_restricted: fixed edges do not fit");
  if (j > std::min(l1, l2) || (l1 - j) % 2 != 0 || (l2 - j) % 2 != 0) return 0;
  return crossing_count(l1, l2, j);
}

std::vector<Rat> solve_interpolation(int k, const std::vector<int>& nodes) {
  if (k < 0 || nodes.size() != static_cast<std::size_t>(k + 1))
    throw Error(ErrorKind::invalid_argument, "interpolation needs exactly k+1 nodes");
  const std::size_t m = nodes.size();
  RatMat a(m, m);
  for (std::size_t t = 0; t < m; ++t)
    for (std::size_t i = 0; i < m; ++i) {
      mpz_class p;
      mpz_pow_ui(p.get_mpz_t(), mpz_class(nodes[i]).get_mpz_t(), static_cast<unsigned long>(t));
      a(t, i) = Rat(p);
    }
  const auto sol = solve_linear(a, unit_vector(m, 0));
  const auto* s = std::get_if<LinearSolution>(&sol);
  if (!s || !s->nullspace.empty()) throw Error(ErrorKind::invalid_argument, "interpolation nodes are not distinct");
  if (a * std::span<const Rat>(s->particular) != unit_vector(m, 0)) throw Error(ErrorKind::internal, "interpolation check failed");
  return s->particular;
}

MatchingCertificate build_matching_certificate(int n, int l) {
  if (l < 1 || 2 * l > n) throw Error(ErrorKind::invalid_argument, "matching certificate needs 1 <= l and 2l <= n");
  MatchingCertificate c;
  c.n = n;
  c.l = l;
  c.k = (l - 1) / 2;
  c.ls = l % 2 ? l : l - 1;
  c.lu = 2 * l - c.ls;
  for (int t = 0; t <= c.k; ++t) c.nodes.push_back(2 * t + 1);
  c.b = solve_interpolation(c.k, c.nodes);
  for (int v = 0; v < c.ls; ++v) c.v_lower.push_back(v);
  for (int v = c.ls; v < 2 * l; ++v) c.v_upper.push_back(v);
  return c;
}

MatchingExpansion expand_matching_cert(const MatchingCertificate& cert) {
  const int n = cert.n;
  const auto entry = matching_polytope(n, cert.l);
  const auto& vs = entry.polytope->vertices();

  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  for (int v : cert.v_lower) side[static_cast<std::size_t>(v)] = 0;
  for (int v : cert.v_upper) side[static_cast<std::size_t>(v)] = 1;
  auto sd = [&](int v) { return side[static_cast<std::size_t>(v)]; };

  std::map<int, Rat> b_of;
  for (std::size_t t = 0; t < cert.nodes.size(); ++t) b_of[cert.nodes[t]] = cert.b[t];

  MatchingExpansion out;
  auto& t1 = out.certificate;
  t1.p = entry.polytope;
  t1.action = entry.action;
  t1.c.assign(vs.size(), Rat(0));
  std::vector<std::vector<std::pair<int, int>>> matchings(vs.size());
  for (std::size_t m = 0; m < vs.size(); ++m) {
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (vs[m][e] == 1) matchings[m].push_back(edges[e]);
    bool supported = true;
    int crossing = 0;
    for (auto [x, y] : matchings[m]) {
      if (sd(x) < 0 || sd(y) < 0) supported = false;
      else if (sd(x) != sd(y)) ++crossing;
    }
    if (!supported) continue;
    const auto it = b_of.find(crossing);
    if (it == b_of.end()) continue;
    t1.c[m] = it->second / Rat(matching_counts(cert.ls, cert.lu, crossing));
    out.sum_c += t1.c[m];
    out.crossing_sum += t1.c[m] * crossing;
  }

  // Face x_e = 0 off V_* u V^*; on it every matching crosses at least once.
  const std::size_t d = edges.size();
  Inequality target{zeros(d), 1};
  for (std::size_t e = 0; e < d; ++e) {
    const auto [x, y] = edges[e];
    if (sd(x) < 0 || sd(y) < 0) t1.face.push_back({unit_vector(d, e), 0});
    else if (sd(x) != sd(y)) target.a[e] = 1;
  }
  t1.target = target;

  // Every V_j with |V_j| <= k, in lexicographic order of sizes then sets.
  for (int size = 0; size <= cert.k && size <= n; ++size) {
    std::vector<int> pick(static_cast<std::size_t>(size));
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
      std::vector<bool> in_vj(static_cast<std::size_t>(n), false);
      for (int v : pick) in_vj[static_cast<std::size_t>(v)] = true;
      std::map<std::vector<std::pair<int, int>>, Block> by_w;
      for (std::size_t m = 0; m < vs.size(); ++m) {
        std::vector<std::pair<int, int>> w;
        for (auto e : matchings[m])
          if (in_vj[static_cast<std::size_t>(e.first)] || in_vj[static_cast<std::size_t>(e.second)]) w.push_back(e);
        by_w[w].push_back(m);
      }
      std::vector<int> rest;
      for (int v = 0; v < n; ++v)
        if (!in_vj[static_cast<std::size_t>(v)]) rest.push_back(v);
      FacetClass cls{"V_j = " + set_string(pick), rest.size() == static_cast<std::size_t>(n) ? alternating(n) : alternating_on(n, rest), {}};

      for (auto& [w, block] : by_w) {
        const Rat direct = sum_over(t1.c, block);
        // Closed form: nonzero only if W stays on V_* u V^* and covers V_j there.
        std::optional<Rat> closed = Rat(0);
        bool fits = true;
        int as = 0, au = 0, a = 0;
        std::vector<bool> covered(static_cast<std::size_t>(n), false);
        for (auto [x, y] : w) {
          covered[static_cast<std::size_t>(x)] = covered[static_cast<std::size_t>(y)] = true;
          if (sd(x) < 0 || sd(y) < 0) fits = false;
          else if (sd(x) != sd(y)) ++a;
          else if (sd(x) == 0) ++as;
          else ++au;
        }
        for (int v : pick)
          if (sd(v) >= 0 && !covered[static_cast<std::size_t>(v)]) fits = false;
        if (fits) {
          Rat total;
          for (std::size_t t = 0; t < cert.nodes.size(); ++t) {
            const int i = cert.nodes[t];
            if (i < a) continue;
            total += cert.b[t] * ratio(matching_counts_restricted(cert.ls, cert.lu, as, au, a, i),
                                       matching_counts(cert.ls, cert.lu, i));
          }
          closed = total;
        }
        ++out.blocks_checked;
        const bool mismatch = *closed != direct;
        if (mismatch) ++out.closed_form_mismatches;
        if (mismatch || direct < 0) out.failures.push_back({pick, w, direct, closed});
        cls.blocks.push_back(std::move(block));
      }
      t1.classes.push_back(std::move(cls));

      // next combination
      int pos = size - 1;
      while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == n - size + pos) --pos;
      if (pos < 0) break;
      ++pick[static_cast<std::size_t>(pos)];
      for (int q = pos + 1; q < size; ++q) pick[static_cast<std::size_t>(q)] = pick[static_cast<std::size_t>(q - 1)] + 1;
    }
  }
  return out;
}

SdpVerdict verify_theorem1_sdp(const SdpCertificate& cert) {
  if (!cert.p) throw Error(ErrorKind::invalid_certificate, "certificate has no polytope");
  const auto& vs = cert.p->vertices();
  if (cert.section.size() != vs.size() || cert.c.size() != vs.size())
    throw Error(ErrorKind::invalid_certificate, "one section value and one coefficient per vertex are required");
  if (cert.a.size() != cert.b.size()) throw Error(ErrorKind::invalid_certificate, "constraint matrices and right-hand sides differ in number");
  const std::size_t d = vs.empty() ? 0 : cert.section[0].rows();
  for (std::size_t v = 0; v < vs.size(); ++v) {
    const RatMat& s = cert.section[v];
    if (!s.is_square() || s.rows() != d) throw Error(ErrorKind::dimension_mismatch, "section values must be d x d");
    if (!s.is_symmetric()) throw Error(ErrorKind::not_symmetric, "s(v) is not symmetric at " + to_string(vs[v]));
    if (!is_psd(psd_check(s))) throw Error(ErrorKind::invalid_certificate, "s(v) is not psd at " + to_string(vs[v]));
    for (std::size_t j = 0; j < cert.a.size(); ++j)
      if (frobenius(cert.a[j], s) != cert.b[j])
        throw Error(ErrorKind::invalid_certificate, "constraint " + std::to_string(j) + " fails at s(" + to_string(vs[v]) + ")");
    if (cert.proj) {
      RatVec flat;
      for (std::size_t r = 0; r < d; ++r)
        for (const auto& x : s.row(r)) flat.push_back(x);
      if (cert.proj->apply(flat) != vs[v]) throw Error(ErrorKind::invalid_certificate, "p(s(v)) != v at " + to_string(vs[v]));
    }
  }

  SdpVerdict out;
  Rat sum;
  for (const auto& x : cert.c) sum += x;
  if (sum != 1) out.failures.push_back("coefficients sum to " + to_string(sum));
  for (std::size_t f = 0; f < cert.families.size(); ++f) {
    const std::string label = "family " + std::to_string(f);
    check_disjoint(cert.families[f], vs.size(), label);
    for (std::size_t b = 0; b < cert.families[f].size(); ++b) {
      RatMat m(d, d);
      for (auto i : cert.families[f][b])
        if (sgn(cert.c[i]) != 0) m = m + cert.c[i] * cert.section[i];
      const auto res = psd_check(m);
      if (const auto* neg = std::get_if<NegativeDirection>(&res)) {
        if (quadratic_form(m, neg->v) >= 0) throw Error(ErrorKind::internal, "psd witness does not re-verify");
        out.failures.push_back(label + ": block " + std::to_string(b) + " is not psd, witness " + to_string(neg->v));
        if (!out.psd_witness) out.psd_witness = neg->v;
      }
    }
  }
  RatMat agg(d, d);
  for (std::size_t v = 0; v < vs.size(); ++v)
    if (sgn(cert.c[v]) != 0) agg = agg + cert.c[v] * cert.section[v];
  for (std::size_t j = 0; j < cert.a.size(); ++j)
    if (frobenius(cert.a[j], agg) != cert.b[j]) out.failures.push_back("aggregate violates constraint " + std::to_string(j));
  out.system_ok = out.failures.empty();
  out.point = combination(vs, cert.c, cert.p->dim());
  out.membership = decide_membership(vs, out.point, cert.face, cert.target);
  out.refutation = out.system_ok && !out.membership.inside;
  return out;
}

SdpCertificate diagonal_embedding(const Theorem1Certificate& cert) {
  SdpCertificate s;
  s.p = cert.p;
  s.section.assign(cert.p->vertices().size(), RatMat{{1}});
  s.a = {RatMat{{1}}};
  s.b = {Rat(1)};
  for (const auto& cls : cert.classes) s.families.push_back(cls.blocks);
  s.c = cert.c;
  s.face = cert.face;
  s.target = cert.target;
  return s;
}

Rat average_frobenius(const AffineAction& action, const RatMat& a, const RatMat& b) {
  if (!action.is_linear()) throw Error(ErrorKind::invalid_argument, "averaged Frobenius product needs a linear action");
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() * a.cols() != action.dim())
    throw Error(ErrorKind::dimension_mismatch, "matrix shape does not match the action");
  RatVec va, vb;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (const auto& x : a.row(r)) va.push_back(x);
    for (const auto& x : b.row(r)) vb.push_back(x);
  }
  const auto& els = action.group().elements();
  Rat total;
  for (const auto& g : els) {
    const AffineMap m = action.map(g);
    total += dot(m.apply(va), m.apply(vb));
  }
  return total / Rat(static_cast<unsigned long>(els.size()));
}

}  // namespace symext
