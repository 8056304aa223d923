#include "symext/superlinear.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

namespace symext {

namespace {

std::string set_string(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + std::to_string(s[i] + 1);
  return out + "}";
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> out;
  for (int i = lo; i < hi; ++i) out.push_back(i);
  return out;
}

// zeta^-1([j]) should be [j-1] u {j+1}; 0-based that is {0..j-2, j}.
std::vector<int> zeta_preimage_target(int j) {
  auto out = range(0, j - 1);
  out.push_back(j);
  return out;
}

void check_invariants(const SuperlinearCertificate& cert, std::vector<std::string>& parity_warnings) {
  const int n = cert.n();
  if (cert.conditions.empty()) throw Error(ErrorKind::invalid_certificate, "J is empty");
  std::set<int> seen;
  for (const auto& c : cert.conditions) {
    const std::string tag = "j = " + std::to_string(c.j);
    if (c.j < 1 || c.j > n - 1) throw Error(ErrorKind::invalid_certificate, tag + " is outside [n-1]");
    if (!seen.insert(c.j).second) throw Error(ErrorKind::invalid_certificate, tag + " appears twice");
    if (c.h.degree() != n || c.zeta.degree() != n)
      throw Error(ErrorKind::dimension_mismatch, tag + ": H_j or zeta_j has the wrong degree");

    auto orbits = point_orbits(c.h);
    std::sort(orbits.begin(), orbits.end());
    const std::vector<std::vector<int>> want{range(0, c.j), range(c.j, n)};
    if (orbits != want) {
      std::string got;
      for (const auto& o : orbits) got += set_string(o);
      throw Error(ErrorKind::invalid_certificate, tag + ": H_j has orbits " + got + ", expected " + set_string(want[0]) +
                                                      set_string(want[1]));
    }
    for (const auto& g : c.h.generators())
      if (!g.is_even()) throw Error(ErrorKind::invalid_certificate, tag + ": H_j contains the odd " + g.cycle_string());

    const std::vector<int> block = range(0, c.j);
    if (c.zeta.preimage(block) != zeta_preimage_target(c.j))
      throw Error(ErrorKind::invalid_certificate, tag + ": zeta_j = " + c.zeta.cycle_string() + " has zeta^-1([j]) = " +
                                                      set_string(c.zeta.preimage(block)));
    if (!c.zeta.is_even())
      parity_warnings.push_back(tag + ": zeta_j = " + c.zeta.cycle_string() +
                                " is odd; the bound then only covers extensions symmetric under S_n");
  }
}

FaceCondition make_condition(int n, int j, std::vector<Inequality> face, RatVec witness) {
  return FaceCondition{j, std::move(face), block_subgroup(n, j), zeta(n, j).perm, std::move(witness)};
}

SuperlinearCertificate from_entry(std::string name, const ZooEntry& e) {
  SuperlinearCertificate c;
  c.name = std::move(name);
  c.p = e.polytope;
  c.action = e.action;
  return c;
}

void require_certificate_n(int n) {
  if (n < 4) throw Error(ErrorKind::invalid_argument, "the face-family certificates need n >= 4");
}

}  // namespace

std::vector<int> SuperlinearCertificate::js() const {
  std::vector<int> out;
  for (const auto& c : conditions) out.push_back(c.j);
  return out;
}

SuperlinearVerdict check_superlinear(const SuperlinearCertificate& cert) {
  if (!cert.p) throw Error(ErrorKind::invalid_argument, "certificate has no polytope");
  if (cert.action.dim() != cert.p->dim()) throw Error(ErrorKind::dimension_mismatch, "action and polytope differ in dimension");
  SuperlinearVerdict v;
  check_invariants(cert, v.parity_warnings);

  v.n = cert.n();
  v.k = static_cast<int>(cert.conditions.size());
  v.bound = make_rat(v.n * v.k, 2);

  std::vector<Face> faces;
  for (const auto& c : cert.conditions) faces.push_back(face_of(cert.p, c.face));

  const auto& verts = cert.p->vertices();
  for (std::size_t a = 0; a < cert.conditions.size(); ++a) {
    const auto& c = cert.conditions[a];
    const std::string tag = "j = " + std::to_string(c.j);
    if (c.witness.size() != cert.p->dim()) throw Error(ErrorKind::dimension_mismatch, tag + ": witness has wrong length");

    const auto inv = is_invariant(faces[a], cert.action.restricted_to(c.h));
    if (!inv.invariant)
      v.failures.push_back(tag + ": F_j is not invariant under H_j (" + inv.element->cycle_string() + " moves " +
                           to_string(*inv.vertex) + " off the face)");

    if (std::find(verts.begin(), verts.end(), c.witness) == verts.end())
      v.failures.push_back(tag + ": v_j = " + to_string(c.witness) + " is not a vertex of P");
    for (std::size_t b = 0; b < faces.size(); ++b)
      if (!faces[b].contains(c.witness))
        v.failures.push_back(tag + ": v_j is not in F_" + std::to_string(cert.conditions[b].j));

    const RatVec moved = cert.action.apply(c.zeta, c.witness);
    if (faces[a].contains(moved)) v.failures.push_back(tag + ": zeta_j v_j = " + to_string(moved) + " lies in F_j");
  }
  v.conditions_met = v.failures.empty();
  return v;
}

SuperlinearCertificate restrict_to(const SuperlinearCertificate& cert, const std::vector<int>& js) {
  SuperlinearCertificate out = cert;
  out.conditions.clear();
  for (int j : js) {
    auto it = std::find_if(cert.conditions.begin(), cert.conditions.end(), [&](const FaceCondition& c) { return c.j == j; });
    if (it == cert.conditions.end()) throw Error(ErrorKind::invalid_argument, "j = " + std::to_string(j) + " is not in J");
    out.conditions.push_back(*it);
  }
  return out;
}

SuperlinearCertificate permutahedron_certificate(int n) {
  require_certificate_n(n);
  auto c = from_entry("permutahedron", permutahedron(n));
  RatVec v;
  for (int i = 1; i <= n; ++i) v.push_back(i);
  for (int j = 1; j < n; ++j) {
    Inequality q{zeros(static_cast<std::size_t>(n)), make_rat(j * (j + 1), 2)};
    for (int i = 0; i < j; ++i) q.a[static_cast<std::size_t>(i)] = 1;
    c.conditions.push_back(make_condition(n, j, {q}, v));
  }
  return c;
}

SuperlinearCertificate cardinality_certificate(int n) {
  require_certificate_n(n);
  auto c = from_entry("cardinality", cardinality(n));
  const auto dim = static_cast<std::size_t>(2 * n + 1);
  const auto z = [n](int l) { return static_cast<std::size_t>(n + l); };
  for (int j = 1; j < n; ++j) {
    Inequality q{zeros(dim), 0};
    for (int i = 0; i < j; ++i) q.a[static_cast<std::size_t>(i)] = -1;
    for (int l = 0; l <= n; ++l) q.a[z(l)] = std::min(l, j);
    RatVec v = zeros(dim);
    for (int i = 0; i < j; ++i) v[static_cast<std::size_t>(i)] = 1;
    v[z(j)] = 1;
    c.conditions.push_back(make_condition(n, j, {q}, v));
  }
  return c;
}

namespace {

// sum over E(S) of x <= |S| - 1, as a >= row.
Inequality induced_edges_row(int n, const std::vector<int>& s) {
  Inequality q{zeros(static_cast<std::size_t>(n * (n - 1) / 2)), -static_cast<long>(s.size() - 1)};
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b) q.a[edge_index(n, s[a], s[b])] = -1;
  return q;
}

std::vector<int> tree_face_set(int n, int j) { return j == 1 ? range(1, n) : range(0, j); }

RatVec path_vector(int n) {
  RatVec v = zeros(static_cast<std::size_t>(n * (n - 1) / 2));
  for (int i = 0; i + 1 < n; ++i) v[edge_index(n, i, i + 1)] = 1;
  return v;
}

}  // namespace

SuperlinearCertificate spanning_tree_certificate(int n) {
  require_certificate_n(n);
  auto c = from_entry("spanning_tree", spanning_tree(n));
  const RatVec path = path_vector(n);
  for (int j = 1; j < n; ++j) c.conditions.push_back(make_condition(n, j, {induced_edges_row(n, tree_face_set(n, j))}, path));
  return c;
}

SuperlinearCertificate birkhoff_certificate(int n) {
  require_certificate_n(n);
  auto c = from_entry("birkhoff", birkhoff(n));
  const auto dim = static_cast<std::size_t>(n * n);
  RatVec id = zeros(dim);
  for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i * n + i)] = 1;
  for (int j = 1; j < n; ++j) {
    // Row j+1 (1-based), columns 1..j.
    Inequality q{zeros(dim), 0};
    for (int i = 0; i < j; ++i) q.a[static_cast<std::size_t>(j * n + i)] = 1;
    c.conditions.push_back(make_condition(n, j, {q}, id));
  }
  return c;
}

SuperlinearCertificate corollary_certificate(ZooId id, int n) {
  switch (id) {
    case ZooId::permutahedron: return permutahedron_certificate(n);
    case ZooId::cardinality: return cardinality_certificate(n);
    case ZooId::spanning_tree: return spanning_tree_certificate(n);
    case ZooId::birkhoff: return birkhoff_certificate(n);
    default: throw Error(ErrorKind::invalid_argument, std::string("no face-family certificate for ") + to_string(id));
  }
}

// ---------------------------------------------------------------- facet orbits

FacetOrbitReport facet_orbit_analysis(const Polytope& p, const AffineAction& action) {
  FacetOrbitReport r;
  r.irredundant = facet_filter(p.hrep());
  const auto& facets = r.irredundant.ineqs;
  const std::size_t count = facets.size();
  r.facets = count;
  if (action.dim() != r.irredundant.dim) throw Error(ErrorKind::dimension_mismatch, "action and polytope differ in dimension");

  std::map<RatVec, std::size_t> by_key;
  const auto key = [](const Inequality& q) {
    const auto nq = normalized(q);
    RatVec k = nq.a;
    k.push_back(nq.b);
    return k;
  };
  for (std::size_t i = 0; i < count; ++i) by_key.emplace(key(facets[i]), i);

  const bool by_tight = !r.irredundant.eqs.empty() && p.v.has_value();
  std::map<std::vector<std::size_t>, std::size_t> by_tight_set;
  const auto tight_set = [&](const Inequality& q) {
    std::vector<std::size_t> t;
    const auto& verts = p.v->vertices;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      const int s = sgn(slack(q, verts[i]));
      if (s < 0) return std::optional<std::vector<std::size_t>>{};
      if (s == 0) t.push_back(i);
    }
    return std::optional<std::vector<std::size_t>>{std::move(t)};
  };
  if (by_tight)
    for (std::size_t i = 0; i < count; ++i) by_tight_set.emplace(*tight_set(facets[i]), i);

  std::vector<std::size_t> parent(count);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  for (const auto& g : action.group().generators()) {
    // g maps {a.x >= b} to {y : a.(M y + s) >= b} with (M, s) = map(g^-1).
    const AffineMap inv = action.map(g.inverse());
    const RatMat m = inv.linear_matrix();
    for (std::size_t f = 0; f < count; ++f) {
      const auto& q = facets[f];
      Inequality img{zeros(r.irredundant.dim), q.b - dot(q.a, inv.offset())};
      for (std::size_t row = 0; row < m.rows(); ++row)
        if (sgn(q.a[row]) != 0)
          for (std::size_t col = 0; col < m.cols(); ++col) img.a[col] += q.a[row] * m(row, col);

      std::optional<std::size_t> hit;
      if (auto it = by_key.find(key(img)); it != by_key.end()) hit = it->second;
      if (!hit && by_tight)
        if (auto t = tight_set(img))
          if (auto it = by_tight_set.find(*t); it != by_tight_set.end()) hit = it->second;
      if (!hit)
        throw Error(ErrorKind::not_symmetric,
                    g.cycle_string() + " maps facet " + std::to_string(f) + " to an inequality that is not a facet");
      const auto a = find(f), b = find(*hit);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }

  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < count; ++i) groups[find(i)].push_back(i);
  for (auto& [root, members] : groups) {
    r.sizes.push_back(members.size());
    r.orbits.push_back(std::move(members));
  }
  std::sort(r.sizes.begin(), r.sizes.end());

  const auto n = static_cast<std::size_t>(action.group().degree());
  r.theorem61_applicable = 2 * count < n * (n - 1);
  r.consistent = !r.theorem61_applicable ||
                 std::all_of(r.sizes.begin(), r.sizes.end(), [n](std::size_t s) { return s == 1 || s == n; });
  return r;
}

// ---------------------------------------------------------------- cube search

const char* to_string(CubeForm f) {
  switch (f) {
    case CubeForm::low_zero: return "x_1..x_j = 0";
    case CubeForm::low_one: return "x_1..x_j = 1";
    case CubeForm::high_zero: return "x_j+1..x_n = 0";
    case CubeForm::high_one: return "x_j+1..x_n = 1";
  }
  return "?";
}

namespace {

constexpr CubeForm kForms[] = {CubeForm::low_zero, CubeForm::low_one, CubeForm::high_zero, CubeForm::high_one};

struct CubeFace {
  unsigned mask = 0, value = 0;
  bool contains(unsigned v) const { return (v & mask) == value; }
};

CubeFace cube_face(int n, int j, CubeForm f) {
  const unsigned low = (1u << j) - 1, all = (1u << n) - 1;
  const bool is_low = f == CubeForm::low_zero || f == CubeForm::low_one;
  const bool one = f == CubeForm::low_one || f == CubeForm::high_one;
  const unsigned mask = is_low ? low : all & ~low;
  return {mask, one ? mask : 0u};
}

unsigned act_on_mask(const Permutation& g, unsigned v) {
  unsigned out = 0;
  for (int c = 0; c < g.degree(); ++c)
    if (v >> c & 1u) out |= 1u << g(c);
  return out;
}

// All permutations with zeta^-1([j]) = [j-1] u {j+1}, in lexicographic order.
std::vector<Permutation> valid_zetas(int n, int j) {
  std::vector<Permutation> out;
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  const auto target = zeta_preimage_target(j);
  do {
    bool ok = true;
    for (int c = 0; c < n && ok; ++c) {
      const bool in_block = images[static_cast<std::size_t>(c)] < j;
      const bool in_target = std::binary_search(target.begin(), target.end(), c);
      ok = in_block == in_target;
    }
    if (ok) out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::vector<std::vector<int>> subsets_lex(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned m = 1; m < (1u << (n - 1)); ++m) {
    std::vector<int> s;
    for (int j = 1; j < n; ++j)
      if (m >> (j - 1) & 1u) s.push_back(j);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

RatVec cube_point(int n, unsigned v) {
  RatVec x = zeros(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    if (v >> i & 1u) x[static_cast<std::size_t>(i)] = 1;
  return x;
}

}  // namespace

CubeSearchReport cube_family_search(int n, int max_k) {
  const int cap = zoo_cap_override().value_or(6);
  if (n < 2) throw Error(ErrorKind::invalid_argument, "cube_family_search needs n >= 2");
  if (n > cap || n > 12) throw Error(ErrorKind::too_large, "cube_family_search is exhaustive; n = " + std::to_string(n));
  if (max_k < 0 || max_k > n - 1) max_k = n - 1;

  CubeSearchReport r;
  r.n = n;
  r.feasible_by_size.assign(static_cast<std::size_t>(n), 0);
  const unsigned nv = 1u << n;

  // best[j][form][v]: index of the least zeta with zeta v outside the face.
  std::vector<std::vector<Permutation>> zetas(static_cast<std::size_t>(n));
  std::vector<std::array<std::vector<int>, 4>> best(static_cast<std::size_t>(n));
  for (int j = 1; j < n; ++j) {
    zetas[static_cast<std::size_t>(j)] = valid_zetas(n, j);
    for (int f = 0; f < 4; ++f) {
      const auto face = cube_face(n, j, kForms[f]);
      auto& row = best[static_cast<std::size_t>(j)][static_cast<std::size_t>(f)];
      row.assign(nv, -1);
      for (unsigned v = 0; v < nv; ++v) {
        const auto& zs = zetas[static_cast<std::size_t>(j)];
        for (std::size_t z = 0; z < zs.size(); ++z)
          if (!face.contains(act_on_mask(zs[z], v))) {
            row[v] = static_cast<int>(z);
            break;
          }
      }
    }
  }

  for (const auto& js : subsets_lex(n)) {
    const int k = static_cast<int>(js.size());
    if (k > max_k) continue;
    std::vector<int> forms(js.size(), 0);
    while (true) {
      ++r.families_checked;
      std::vector<unsigned> common;
      for (unsigned v = 0; v < nv; ++v) {
        bool in = true;
        for (std::size_t a = 0; a < js.size() && in; ++a)
          in = cube_face(n, js[a], kForms[forms[a]]).contains(v);
        if (in) common.push_back(v);
      }
      std::vector<CubeWitness> wit;
      for (std::size_t a = 0; a < js.size(); ++a) {
        const auto& row = best[static_cast<std::size_t>(js[a])][static_cast<std::size_t>(forms[a])];
        auto it = std::find_if(common.begin(), common.end(), [&](unsigned v) { return row[v] >= 0; });
        if (it == common.end()) break;
        wit.push_back({js[a], kForms[forms[a]], *it,
                       zetas[static_cast<std::size_t>(js[a])][static_cast<std::size_t>(row[*it])]});
      }
      if (wit.size() == js.size()) {
        ++r.feasible_by_size[static_cast<std::size_t>(k)];
        if (k > r.max_feasible_family_size) {
          r.max_feasible_family_size = k;
          r.witnesses = std::move(wit);
        }
      }
      std::size_t pos = forms.size();
      while (pos > 0 && forms[pos - 1] == 3) forms[--pos] = 0;
      if (pos == 0) break;
      ++forms[pos - 1];
    }
  }
  return r;
}

SuperlinearCertificate cube_certificate(int n, const std::vector<std::pair<int, CubeForm>>& family) {
  auto c = from_entry("cube", cube(n));
  const unsigned nv = 1u << n;
  std::vector<unsigned> common;
  for (unsigned v = 0; v < nv; ++v)
    if (std::all_of(family.begin(), family.end(), [&](const auto& jf) { return cube_face(n, jf.first, jf.second).contains(v); }))
      common.push_back(v);
  for (const auto& [j, form] : family) {
    if (j < 1 || j > n - 1) throw Error(ErrorKind::invalid_argument, "cube face needs 1 <= j <= n-1");
    const auto face = cube_face(n, j, form);
    const Permutation z = zeta(n, j).perm;
    unsigned w = common.empty() ? 0u : common.front();
    for (unsigned v : common)
      if (!face.contains(act_on_mask(z, v))) {
        w = v;
        break;
      }
    std::vector<Inequality> ineqs;
    for (int i = 0; i < n; ++i) {
      if (!(face.mask >> i & 1u)) continue;
      Inequality q{zeros(static_cast<std::size_t>(n)), 0};
      const bool one = face.value >> i & 1u;
      q.a[static_cast<std::size_t>(i)] = one ? -1 : 1;
      q.b = one ? -1 : 0;
      ineqs.push_back(std::move(q));
    }
    c.conditions.push_back(FaceCondition{j, std::move(ineqs), block_subgroup(n, j), z, cube_point(n, w)});
  }
  return c;
}

// ---------------------------------------------------------------- matroids

namespace {

int rank_of(const std::set<std::vector<int>>& indep, const std::vector<int>& x) {
  int best = 0;
  for (const auto& s : indep) {
    int c = 0;
    for (int e : s) c += std::binary_search(x.begin(), x.end(), e) ? 1 : 0;
    best = std::max(best, c);
  }
  return best;
}

std::vector<int> sorted_unique(std::vector<int> s, int m, const std::string& what) {
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw Error(ErrorKind::invalid_argument, what + " repeats an element");
  for (int e : s)
    if (e < 0 || e >= m) throw Error(ErrorKind::invalid_argument, what + " has an element outside the ground set");
  return s;
}

}  // namespace

MatroidResult matroid_superlinear(const MatroidInput& in) {
  const int m = static_cast<int>(in.labels.size());
  if (in.n < 2) throw Error(ErrorKind::invalid_argument, "matroid needs n >= 2");
  if (m > 24) throw Error(ErrorKind::too_large, "matroid ground set larger than 24");

  std::set<std::vector<int>> indep;
  for (const auto& s : in.independent) indep.insert(sorted_unique(s, m, "independent set"));
  if (!indep.count({})) throw Error(ErrorKind::invalid_argument, "the empty set is not independent");
  for (const auto& s : indep)
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      auto t = s;
      t.erase(t.begin() + static_cast<std::ptrdiff_t>(drop));
      if (!indep.count(t)) throw Error(ErrorKind::invalid_argument, "not hereditary: " + set_string(s) + " minus an element");
    }
  for (const auto& a : indep)
    for (const auto& b : indep) {
      if (a.size() >= b.size()) continue;
      bool ok = false;
      for (int e : b) {
        if (std::binary_search(a.begin(), a.end(), e)) continue;
        auto t = a;
        t.insert(std::upper_bound(t.begin(), t.end(), e), e);
        if (indep.count(t)) {
          ok = true;
          break;
        }
      }
      if (!ok) throw Error(ErrorKind::invalid_argument, "exchange fails for " + set_string(a) + " and " + set_string(b));
    }

  const auto group = alternating(in.n);
  const auto action = AffineAction::coordinate(group, in.labels);
  for (const auto& g : group.generators()) {
    const auto perm = action.coordinate_permutation(g);
    for (const auto& s : indep) {
      std::vector<int> t;
      for (int e : s) t.push_back(perm[static_cast<std::size_t>(e)]);
      std::sort(t.begin(), t.end());
      if (!indep.count(t))
        throw Error(ErrorKind::not_symmetric, g.cycle_string() + " maps " + set_string(s) + " to a dependent set");
    }
  }

  std::vector<RatVec> verts;
  for (const auto& s : indep) {
    RatVec x = zeros(static_cast<std::size_t>(m));
    for (int e : s) x[static_cast<std::size_t>(e)] = 1;
    verts.push_back(std::move(x));
  }
  std::sort(verts.begin(), verts.end());
  Polytope p;
  p.v = VRep{static_cast<std::size_t>(m), std::move(verts)};
  p.consistency = Consistency::vertices_verified;  // 0/1 points are always extreme

  MatroidResult res;
  res.certificate.name = "matroid";
  res.certificate.p = std::make_shared<const Polytope>(std::move(p));
  res.certificate.action = action;
  for (const auto& c : in.conditions) {
    const std::string tag = "j = " + std::to_string(c.j);
    const auto flat = sorted_unique(c.flat, m, tag + ": F_j");
    const auto s = sorted_unique(c.witness, m, tag + ": S_j");
    const int r = rank_of(indep, flat);
    for (int e = 0; e < m; ++e) {
      if (std::binary_search(flat.begin(), flat.end(), e)) continue;
      auto t = flat;
      t.insert(std::upper_bound(t.begin(), t.end(), e), e);
      if (rank_of(indep, t) == r)
        throw Error(ErrorKind::invalid_argument, tag + ": F_j is not a flat (adding " + std::to_string(e + 1) + " keeps rank " +
                                                     std::to_string(r) + ")");
    }
    if (!indep.count(s)) throw Error(ErrorKind::invalid_argument, tag + ": S_j is not independent");
    if (c.j < 1 || c.j > in.n - 1) throw Error(ErrorKind::invalid_certificate, tag + " is outside [n-1]");

    Inequality q{zeros(static_cast<std::size_t>(m)), -r};
    for (int e : flat) q.a[static_cast<std::size_t>(e)] = -1;
    RatVec w = zeros(static_cast<std::size_t>(m));
    for (int e : s) w[static_cast<std::size_t>(e)] = 1;
    res.certificate.conditions.push_back(
        FaceCondition{c.j, {q}, block_subgroup(in.n, c.j), c.zeta ? *c.zeta : zeta(in.n, c.j).perm, std::move(w)});
    res.ranks.push_back(r);
  }
  res.verdict = check_superlinear(res.certificate);
  return res;
}

MatroidInput graphic_matroid_input(int n) {
  if (n < 4 || n > 5) throw Error(ErrorKind::too_large, "graphic matroid input is built for n = 4, 5");
  const int m = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);

  MatroidInput in;
  in.n = n;
  in.labels = edge_labels(n);
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
      return x;
    };
    bool forest = true;
    std::vector<int> s;
    for (int e = 0; e < m && forest; ++e) {
      if (!(mask >> e & 1u)) continue;
      const int a = find(edges[static_cast<std::size_t>(e)].first), b = find(edges[static_cast<std::size_t>(e)].second);
      if (a == b) forest = false;
      parent[static_cast<std::size_t>(a)] = b;
      s.push_back(e);
    }
    if (forest) in.independent.push_back(std::move(s));
  }

  std::vector<int> path;
  for (int i = 0; i + 1 < n; ++i) path.push_back(static_cast<int>(edge_index(n, i, i + 1)));
  for (int j = 1; j < n; ++j) {
    const auto s = tree_face_set(n, j);
    std::vector<int> flat;
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = a + 1; b < s.size(); ++b) flat.push_back(static_cast<int>(edge_index(n, s[a], s[b])));
    in.conditions.push_back({j, std::move(flat), path, std::nullopt});
  }
  return in;
}

}  // namespace symext
