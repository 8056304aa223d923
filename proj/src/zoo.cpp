#include "symext/zoo.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>

#include "symext/linalg.hpp"

namespace symext {

namespace {

std::optional<int> g_cap_override;

std::string binomial_string(int n, int k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b.get_str();
}

void require_n(ZooId id, int n, int min_n = 1) {
  if (n < min_n)
    throw Error(ErrorKind::invalid_argument, std::string(to_string(id)) + " needs n >= " + std::to_string(min_n));
  if (n > zoo_cap(id))
    throw Error(ErrorKind::too_large, std::string(to_string(id)) + " with n = " + std::to_string(n) +
                                          " exceeds cap " + std::to_string(zoo_cap(id)));
}

std::size_t enumeration_cap() {
  return g_cap_override ? static_cast<std::size_t>(*g_cap_override) : kDefaultEnumerationCap;
}

// Signed 0/1 rows: sum_{i in I} x_i + sum_{i not in I} (1 - x_i) >= rhs, i.e.
// sum_I x_i - sum_{not I} x_i >= rhs - (n - |I|).
Inequality cube_corner_cut(int n, unsigned mask, const Rat& rhs) {
  Inequality q{RatVec(static_cast<std::size_t>(n)), rhs};
  int outside = 0;
  for (int i = 0; i < n; ++i) {
    if (mask & (1u << i)) {
      q.a[static_cast<std::size_t>(i)] = 1;
    } else {
      q.a[static_cast<std::size_t>(i)] = -1;
      ++outside;
    }
  }
  q.b -= outside;
  return q;
}

std::vector<RatVec> zero_one_points(int n, const std::function<bool(int)>& keep_weight) {
  std::vector<RatVec> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const int w = std::popcount(mask);
    if (!keep_weight(w)) continue;
    RatVec x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) x[static_cast<std::size_t>(i)] = 1;
    out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

KnownBound log_bound(std::size_t vertex_count) {
  std::size_t b = 0;
  while ((std::size_t{1} << b) < vertex_count) ++b;
  return {"xc lower bound", std::to_string(b), "log-vertex bound"};
}

KnownBound quadratic_bound(int n) {
  return {"xcs lower bound", std::to_string(n * (n - 1) / 2), "superlinear face-family bound n(n-1)/2"};
}

// Past the element cap the group is kept as generators with its known order;
// anything that needs the element list then fails with too_large.
AffineAction a_n_on_points(int n) { return point_action(acting_group(n, false)); }

}  // namespace

PermGroup acting_group(int n, bool full_symmetric) {
  const std::uint64_t order = full_symmetric ? factorial(n) : (n >= 2 ? factorial(n) / 2 : 1);
  if (order <= default_element_cap()) return full_symmetric ? symmetric(n) : alternating(n);
  std::vector<Permutation> gens;
  if (full_symmetric) {
    std::vector<int> cyc(static_cast<std::size_t>(n));
    std::iota(cyc.begin(), cyc.end(), 1);
    gens = {Permutation::from_cycles(n, {{1, 2}}), Permutation::from_cycles(n, std::vector<std::vector<int>>{cyc})};
  } else {
    for (int i = 3; i <= n; ++i) gens.push_back(Permutation::from_cycles(n, {{1, 2, i}}));
  }
  PermGroup g(n, std::move(gens));
  g.set_known_order(order);
  return g;
}

const char* to_string(ZooId id) {
  switch (id) {
    case ZooId::cube: return "cube";
    case ZooId::a_n: return "A_n";
    case ZooId::b_n: return "B_n";
    case ZooId::parity: return "parity";
    case ZooId::cardinality: return "cardinality";
    case ZooId::birkhoff: return "birkhoff";
    case ZooId::permutahedron: return "permutahedron";
    case ZooId::spanning_tree: return "spanning_tree_Kn";
    case ZooId::matching: return "matching_l";
    case ZooId::ln: return "L_n";
  }
  return "?";
}

std::optional<ZooId> parse_zoo_id(const std::string& name) {
  for (auto id : {ZooId::cube, ZooId::a_n, ZooId::b_n, ZooId::parity, ZooId::cardinality, ZooId::birkhoff,
                  ZooId::permutahedron, ZooId::spanning_tree, ZooId::matching, ZooId::ln})
    if (name == to_string(id)) return id;
  if (name == "a_n" || name == "An") return ZooId::a_n;
  if (name == "b_n" || name == "Bn") return ZooId::b_n;
  if (name == "spanning_tree" || name == "stp") return ZooId::spanning_tree;
  if (name == "matching") return ZooId::matching;
  if (name == "perm") return ZooId::permutahedron;
  if (name == "card") return ZooId::cardinality;
  if (name == "ln" || name == "Ln") return ZooId::ln;
  return std::nullopt;
}

int zoo_cap(ZooId id) {
  if (g_cap_override) return *g_cap_override;
  switch (id) {
    case ZooId::birkhoff:
    case ZooId::permutahedron:
    case ZooId::spanning_tree: return 7;
    case ZooId::matching: return 12;
    default: return 14;
  }
}

void set_zoo_cap_override(std::optional<int> cap) { g_cap_override = cap; }
std::optional<int> zoo_cap_override() { return g_cap_override; }

std::size_t edge_index(int n, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= n || j >= n) throw Error(ErrorKind::invalid_argument, "not an edge of K_n");
  if (i > j) std::swap(i, j);
  // Edges before row i: sum_{r < i} (n - 1 - r).
  return static_cast<std::size_t>(i * (n - 1) - i * (i - 1) / 2 + (j - i - 1));
}

std::vector<RatVec> half_integral_points(int n, int halves) {
  std::vector<RatVec> out;
  const Rat half = make_rat(1, 2);
  std::vector<int> digits(static_cast<std::size_t>(n), 0);  // 0, 1, 2 = 0, 1/2, 1
  for (;;) {
    if (std::count(digits.begin(), digits.end(), 1) == halves) {
      RatVec x(static_cast<std::size_t>(n));
      for (std::size_t i = 0; i < digits.size(); ++i) x[i] = digits[i] == 0 ? Rat(0) : digits[i] == 1 ? half : Rat(1);
      out.push_back(std::move(x));
    }
    std::size_t k = 0;
    while (k < digits.size() && digits[k] == 2) digits[k++] = 0;
    if (k == digits.size()) break;
    ++digits[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

Polytope cross_checked(HRep h, std::vector<RatVec> vertices) {
  std::sort(vertices.begin(), vertices.end());
  Polytope p;
  const std::size_t dim = h.dim;
  std::vector<RatVec> eq_rows;
  for (const auto& q : h.eqs) eq_rows.push_back(q.a);
  const std::size_t free_dim = dim - rank(eq_rows, dim);
  const std::size_t ineqs = h.ineqs.size();
  p.h = std::move(h);
  p.v = VRep{dim, std::move(vertices)};
  if (ineqs <= 300 && free_dim <= std::min<std::size_t>(10, enumeration_cap()) && p.v->vertices.size() <= 5000)
    return certify(std::move(p), enumeration_cap());
  if (p.v->vertices.size() * (ineqs + 1) <= 2'000'000) {
    for (const auto& x : p.v->vertices)
      if (!p.h->contains(x)) throw Error(ErrorKind::internal, "listed vertex violates the inequalities: " + to_string(x));
    p.consistency = Consistency::vertices_verified;
  }
  return p;
}

HRep cube_hrep(int n) {
  const std::size_t d = static_cast<std::size_t>(n);
  HRep h{d, {}, {}};
  for (std::size_t i = 0; i < d; ++i) {
    h.ineqs.push_back({unit_vector(d, i), 0});
    h.ineqs.push_back({scale(-1, unit_vector(d, i)), -1});
  }
  return h;
}

HRep a_n_hrep(int n) {
  HRep h = cube_hrep(n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) h.ineqs.push_back(cube_corner_cut(n, mask, make_rat(1, 2)));
  return h;
}

ZooEntry cube(int n) {
  require_n(ZooId::cube, n);
  ZooEntry e{ZooId::cube, n, 0, nullptr, a_n_on_points(n), {}};
  auto verts = zero_one_points(n, [](int) { return true; });
  e.metadata = {log_bound(verts.size()), {"xcs upper bound", std::to_string(2 * n), "the 2n box inequalities"}};
  e.polytope = std::make_shared<const Polytope>(cross_checked(cube_hrep(n), std::move(verts)));
  return e;
}

ZooEntry a_n_polytope(int n) {
  require_n(ZooId::a_n, n);
  ZooEntry e{ZooId::a_n, n, 0, nullptr, a_n_on_points(n), {}};
  auto verts = half_integral_points(n, 1);
  e.metadata = {log_bound(verts.size()),
                {"xcs upper bound", std::to_string(3 * n), "explicit symmetric extension L_n with 3n inequalities"}};
  e.polytope = std::make_shared<const Polytope>(cross_checked(a_n_hrep(n), std::move(verts)));
  return e;
}

ZooEntry b_n_polytope(int n) {
  require_n(ZooId::b_n, n, 2);
  ZooEntry e{ZooId::b_n, n, 0, nullptr, a_n_on_points(n), {}};
  HRep h = cube_hrep(n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) h.ineqs.push_back(cube_corner_cut(n, mask, Rat(1)));
  auto verts = half_integral_points(n, 2);
  e.metadata = {log_bound(verts.size())};
  e.polytope = std::make_shared<const Polytope>(cross_checked(std::move(h), std::move(verts)));
  return e;
}

ZooEntry parity_polytope(int n) {
  require_n(ZooId::parity, n, 2);
  ZooEntry e{ZooId::parity, n, 0, nullptr, a_n_on_points(n), {}};
  HRep h = cube_hrep(n);
  // Cut every odd-weight point 1_I: sum_{i in I} (1 - x_i) + sum_{i not in I} x_i >= 1.
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) % 2 == 0) continue;
    const unsigned complement = ~mask & ((1u << n) - 1);
    h.ineqs.push_back(cube_corner_cut(n, complement, Rat(1)));
  }
  auto verts = zero_one_points(n, [](int w) { return w % 2 == 0; });
  e.metadata = {log_bound(verts.size())};
  e.polytope = std::make_shared<const Polytope>(cross_checked(std::move(h), std::move(verts)));
  return e;
}

ZooEntry cardinality(int n) {
  require_n(ZooId::cardinality, n);
  const std::size_t nn = static_cast<std::size_t>(n);
  const std::size_t d = 2 * nn + 1;  // x_1..x_n, z_0..z_n
  auto labels = point_labels(n);
  for (auto& l : fixed_labels(n + 1, 1)) labels.push_back(l);
  ZooEntry e{ZooId::cardinality, n, 0, nullptr, AffineAction::coordinate(acting_group(n, false), labels), {}};

  HRep h{d, {}, {}};
  auto z = [&](std::size_t j) { return nn + j; };
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    const std::size_t s = static_cast<std::size_t>(std::popcount(mask));
    // sum_{j <= |S|} j z_j + |S| sum_{j > |S|} z_j - sum_{i in S} x_i >= 0
    Inequality q{RatVec(d), 0};
    for (std::size_t i = 0; i < nn; ++i)
      if (mask & (1u << i)) q.a[i] = -1;
    for (std::size_t j = 0; j <= nn; ++j) q.a[z(j)] = static_cast<long>(std::min(j, s));
    h.ineqs.push_back(std::move(q));
  }
  {
    Inequality sum_x{RatVec(d), 0};
    for (std::size_t i = 0; i < nn; ++i) sum_x.a[i] = 1;
    for (std::size_t j = 0; j <= nn; ++j) sum_x.a[z(j)] = -static_cast<long>(j);
    h.eqs.push_back(std::move(sum_x));
    Inequality sum_z{RatVec(d), 1};
    for (std::size_t j = 0; j <= nn; ++j) sum_z.a[z(j)] = 1;
    h.eqs.push_back(std::move(sum_z));
  }
  for (std::size_t c = 0; c < d; ++c) {
    h.ineqs.push_back({unit_vector(d, c), 0});
    h.ineqs.push_back({scale(-1, unit_vector(d, c)), -1});
  }

  std::vector<RatVec> verts;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    RatVec v(d);
    for (std::size_t i = 0; i < nn; ++i)
      if (mask & (1u << i)) v[i] = 1;
    v[z(static_cast<std::size_t>(std::popcount(mask)))] = 1;
    verts.push_back(std::move(v));
  }
  e.metadata = {log_bound(verts.size()), quadratic_bound(n)};
  e.polytope = std::make_shared<const Polytope>(cross_checked(std::move(h), std::move(verts)));
  return e;
}

ZooEntry birkhoff(int n) {
  require_n(ZooId::birkhoff, n);
  const std::size_t nn = static_cast<std::size_t>(n), d = nn * nn;
  ZooEntry e{ZooId::birkhoff, n, 0, nullptr, AffineAction::coordinate(acting_group(n, false), column_cell_labels(n)), {}};
  HRep h{d, {}, {}};
  for (std::size_t j = 0; j < nn; ++j) {
    Inequality col{RatVec(d), 1};
    for (std::size_t i = 0; i < nn; ++i) col.a[i * nn + j] = 1;
    h.eqs.push_back(std::move(col));
  }
  for (std::size_t i = 0; i < nn; ++i) {
    Inequality row{RatVec(d), 1};
    for (std::size_t j = 0; j < nn; ++j) row.a[i * nn + j] = 1;
    h.eqs.push_back(std::move(row));
  }
  for (std::size_t c = 0; c < d; ++c) {
    h.ineqs.push_back({unit_vector(d, c), 0});
    h.ineqs.push_back({scale(-1, unit_vector(d, c)), -1});
  }
  std::vector<RatVec> verts;
  std::vector<std::size_t> sigma(nn);
  for (std::size_t i = 0; i < nn; ++i) sigma[i] = i;
  do {
    RatVec v(d);
    for (std::size_t i = 0; i < nn; ++i) v[i * nn + sigma[i]] = 1;
    verts.push_back(std::move(v));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  e.metadata = {log_bound(verts.size()), quadratic_bound(n)};
  e.polytope = std::make_shared<const Polytope>(cross_checked(std::move(h), std::move(verts)));
  return e;
}

ZooEntry permutahedron(int n) {
  require_n(ZooId::permutahedron, n);
  const std::size_t nn = static_cast<std::size_t>(n);
  ZooEntry e{ZooId::permutahedron, n, 0, nullptr, a_n_on_points(n), {}};
  HRep h{nn, {}, {}};
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    const long s = std::popcount(mask);
    Inequality q{RatVec(nn), Rat(s * (s + 1) / 2)};
    for (std::size_t i = 0; i < nn; ++i)
      if (mask & (1u << i)) q.a[i] = 1;
    h.ineqs.push_back(std::move(q));
  }
  Inequality total{RatVec(nn, Rat(1)), Rat(static_cast<long>(n) * (n + 1) / 2)};
  h.eqs.push_back(std::move(total));
  std::vector<RatVec> verts;
  std::vector<long> p(nn);
  for (std::size_t i = 0; i < nn; ++i) p[i] = static_cast<long>(i) + 1;
  do {
    RatVec v;
    for (long x : p) v.push_back(x);
    verts.push_back(std::move(v));
  } while (std::next_permutation(p.begin(), p.end()));
  e.metadata = {log_bound(verts.size()), quadratic_bound(n)};
  e.polytope = std::make_shared<const Polytope>(cross_checked(std::move(h), std::move(verts)));
  return e;
}

ZooEntry spanning_tree(int n) {
  require_n(ZooId::spanning_tree, n, 2);
  const std::size_t d = static_cast<std::size_t>(n * (n - 1) / 2);
  ZooEntry e{ZooId::spanning_tree, n, 0, nullptr, AffineAction::coordinate(acting_group(n, false), edge_labels(n)), {}};
  HRep h{d, {}, {}};
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    const long u = std::popcount(mask);
    if (u < 2) continue;  // E[U] is empty
    Inequality q{RatVec(d), Rat(-(u - 1))};
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if ((mask & (1u << i)) && (mask & (1u << j))) q.a[edge_index(n, i, j)] = -1;
    h.ineqs.push_back(std::move(q));
  }
  h.eqs.push_back({RatVec(d, Rat(1)), Rat(n - 1)});
  for (std::size_t c = 0; c < d; ++c) {
    h.ineqs.push_back({unit_vector(d, c), 0});
    h.ineqs.push_back({scale(-1, unit_vector(d, c)), -1});
  }

  // Pruefer decoding of every code in [n]^(n-2).
  std::vector<RatVec> verts;
  std::vector<int> code(static_cast<std::size_t>(std::max(n - 2, 0)), 0);
  for (;;) {
    RatVec v(d);
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int c : code) ++degree[static_cast<std::size_t>(c)];
    for (int c : code) {
      int leaf = 0;
      while (degree[static_cast<std::size_t>(leaf)] != 1) ++leaf;
      v[edge_index(n, leaf, c)] = 1;
      --degree[static_cast<std::size_t>(leaf)];
      --degree[static_cast<std::size_t>(c)];
    }
    int a = -1, b = -1;
    for (int i = 0; i < n; ++i)
      if (degree[static_cast<std::size_t>(i)] == 1) (a < 0 ? a : b) = i;
    v[edge_index(n, a, b)] = 1;
    verts.push_back(std::move(v));
    std::size_t k = 0;
    while (k < code.size() && code[k] == n - 1) code[k++] = 0;
    if (k == code.size()) break;
    ++code[k];
  }
  e.metadata = {log_bound(verts.size()), quadratic_bound(n)};
  e.polytope = std::make_shared<const Polytope>(cross_checked(std::move(h), std::move(verts)));
  return e;
}

ZooEntry matching_polytope(int n, int l) {
  require_n(ZooId::matching, n, 2);
  if (l < 1 || 2 * l > n) throw Error(ErrorKind::invalid_argument, "matching polytope needs 1 <= l and 2l <= n");
  const std::size_t d = static_cast<std::size_t>(n * (n - 1) / 2);
  ZooEntry e{ZooId::matching, n, l, nullptr, AffineAction::coordinate(acting_group(n, false), edge_labels(n)), {}};
  std::vector<RatVec> verts;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  RatVec cur(d);
  std::function<void(int, int)> rec = [&](int start, int left) {
    if (left == 0) {
      verts.push_back(cur);
      return;
    }
    for (int a = start; a < n; ++a) {
      if (used[static_cast<std::size_t>(a)]) continue;
      used[static_cast<std::size_t>(a)] = true;
      for (int b = a + 1; b < n; ++b) {
        if (used[static_cast<std::size_t>(b)]) continue;
        used[static_cast<std::size_t>(b)] = true;
        cur[edge_index(n, a, b)] = 1;
        rec(a + 1, left - 1);
        cur[edge_index(n, a, b)] = 0;
        used[static_cast<std::size_t>(b)] = false;
      }
      used[static_cast<std::size_t>(a)] = false;
    }
  };
  rec(0, l);
  std::sort(verts.begin(), verts.end());
  // Combinatorial validation: 0/1, exactly l edges, pairwise disjoint.
  for (const auto& v : verts) {
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    int edges = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const Rat& x = v[edge_index(n, i, j)];
        if (x != 0 && x != 1) throw Error(ErrorKind::internal, "matching vertex is not 0/1");
        if (x == 1) {
          ++edges;
          ++deg[static_cast<std::size_t>(i)];
          ++deg[static_cast<std::size_t>(j)];
        }
      }
    if (edges != l || std::any_of(deg.begin(), deg.end(), [](int x) { return x > 1; }))
      throw Error(ErrorKind::internal, "enumerated edge set is not an l-matching");
  }
  Polytope p;
  p.v = VRep{d, std::move(verts)};
  p.consistency = Consistency::certified;
  e.polytope = std::make_shared<const Polytope>(std::move(p));
  e.metadata = {log_bound(e.polytope->vertices().size())};
  if (n >= 10)
    e.metadata.push_back({"xcs lower bound (A_n)", binomial_string(n, (l - 1) / 2), "matching lower bound C(n, floor((l-1)/2))"});
  return e;
}

ZooEntry ln_polytope(int n) {
  require_n(ZooId::ln, n);
  const std::size_t nn = static_cast<std::size_t>(n), d = 2 * nn;
  std::vector<CoordinateLabel> labels;
  for (int i = 0; i < n; ++i) labels.push_back({0, {i}, false});
  for (int i = 0; i < n; ++i) labels.push_back({1, {i}, false});
  ZooEntry e{ZooId::ln, n, 0, nullptr, AffineAction::coordinate(acting_group(n, true), labels), {}};
  const Rat half = make_rat(1, 2);
  HRep h{d, {}, {}};
  for (std::size_t c = 0; c < d; ++c) {
    h.ineqs.push_back({unit_vector(d, c), 0});
    h.ineqs.push_back({scale(-1, unit_vector(d, c)), -half});
  }
  for (std::size_t i = 0; i < nn; ++i) {
    Inequality q{RatVec(d), -half};
    q.a[i] = -1;
    q.a[nn + i] = -1;
    h.ineqs.push_back(std::move(q));
  }
  h.eqs.push_back({RatVec(d, Rat(1)), make_rat(n - 1, 2)});
  Polytope p;
  p.h = std::move(h);
  const std::size_t cap = std::min<std::size_t>(static_cast<std::size_t>(2 * n - 1), enumeration_cap());
  if (2 * nn - 1 <= cap && n <= 6) {
    p = certify(std::move(p), cap);
    e.metadata = {log_bound(p.vertices().size())};
  }
  e.polytope = std::make_shared<const Polytope>(std::move(p));
  return e;
}

ZooEntry build_zoo(ZooId id, int n, int l) {
  switch (id) {
    case ZooId::cube: return cube(n);
    case ZooId::a_n: return a_n_polytope(n);
    case ZooId::b_n: return b_n_polytope(n);
    case ZooId::parity: return parity_polytope(n);
    case ZooId::cardinality: return cardinality(n);
    case ZooId::birkhoff: return birkhoff(n);
    case ZooId::permutahedron: return permutahedron(n);
    case ZooId::spanning_tree: return spanning_tree(n);
    case ZooId::matching: return matching_polytope(n, l);
    case ZooId::ln: return ln_polytope(n);
  }
  throw Error(ErrorKind::invalid_argument, "unknown zoo id");
}

}  // namespace symext
