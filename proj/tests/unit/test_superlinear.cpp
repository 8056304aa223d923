#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "symext/superlinear.hpp"

using namespace symext;

namespace {

// Whether the edges of x (coordinates of K_n) induce a connected graph on s.
bool connected_on(int n, const RatVec& x, const std::vector<int>& s) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a) a = parent[static_cast<std::size_t>(a)];
    return a;
  };
  for (int a : s)
    for (int b : s)
      if (a < b && x[edge_index(n, a, b)] == 1) parent[static_cast<std::size_t>(find(a))] = find(b);
  for (int a : s)
    if (find(a) != find(s.front())) return false;
  return true;
}

std::vector<std::vector<int>> nonempty_subsets(const std::vector<int>& js) {
  std::vector<std::vector<int>> out;
  for (unsigned m = 1; m < (1u << js.size()); ++m) {
    std::vector<int> s;
    for (std::size_t i = 0; i < js.size(); ++i)
      if (m >> i & 1u) s.push_back(js[i]);
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("corollary certificates give n(n-1)/2") {
  for (ZooId id : {ZooId::permutahedron, ZooId::cardinality, ZooId::spanning_tree, ZooId::birkhoff})
    for (int n = 4; n <= 5; ++n) {
      CAPTURE(to_string(id));
      CAPTURE(n);
      const auto cert = corollary_certificate(id, n);
      const auto v = check_superlinear(cert);
      CHECK(v.conditions_met);
      CHECK(v.failures.empty());
      CHECK(v.parity_warnings.empty());
      CHECK(v.bound == make_rat(n * (n - 1), 2));
      for (const auto& js : nonempty_subsets(cert.js())) {
        const auto sub = check_superlinear(restrict_to(cert, js));
        CHECK(sub.conditions_met);
        CHECK(sub.bound == make_rat(n * static_cast<long>(js.size()), 2));
      }
    }
  CHECK(check_superlinear(permutahedron_certificate(4)).bound == 6);
  CHECK(check_superlinear(permutahedron_certificate(5)).bound == 10);
  CHECK(check_superlinear(birkhoff_certificate(4)).bound == 6);
  CHECK(check_superlinear(spanning_tree_certificate(4)).bound == 6);
  CHECK_THROWS_AS(corollary_certificate(ZooId::cube, 4), Error);
  CHECK_THROWS_AS(permutahedron_certificate(3), Error);
}

TEST_CASE("spanning tree: the moved path is disconnected on S_j") {
  const int n = 5;
  const auto cert = spanning_tree_certificate(n);
  for (const auto& c : cert.conditions) {
    const std::vector<int> s = c.j == 1 ? std::vector<int>{1, 2, 3, 4} : [&] {
      std::vector<int> t(static_cast<std::size_t>(c.j));
      std::iota(t.begin(), t.end(), 0);
      return t;
    }();
    CHECK(connected_on(n, c.witness, s));
    CHECK(!connected_on(n, cert.action.apply(c.zeta, c.witness), s));
  }
}

TEST_CASE("any valid zeta works; odd ones are flagged") {
  const int n = 4;
  auto cert = permutahedron_certificate(n);
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  int odd = 0, even = 0;
  do {
    const Permutation z(images);
    if (z.preimage(std::vector<int>{0, 1}) != std::vector<int>{0, 2}) continue;
    auto one = restrict_to(cert, {2});
    one.conditions[0].zeta = z;
    const auto v = check_superlinear(one);
    CHECK(v.conditions_met);
    (z.is_even() ? even : odd) += 1;
    CHECK(v.parity_warnings.size() == (z.is_even() ? 0u : 1u));
  } while (std::next_permutation(images.begin(), images.end()));
  CHECK(even == 2);
  CHECK(odd == 2);
}

TEST_CASE("check_superlinear errors and failures") {
  const auto cert = permutahedron_certificate(4);

  auto empty = cert;
  empty.conditions.clear();
  CHECK_THROWS_AS(check_superlinear(empty), Error);

  auto wrong_h = cert;
  wrong_h.conditions[1].h = PermGroup::trivial(4);
  try {
    (void)check_superlinear(wrong_h);
    FAIL("expected invalid_certificate");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::invalid_certificate);
    CHECK(std::string(e.what()).find("orbits") != std::string::npos);
  }

  auto odd_h = cert;
  odd_h.conditions[0].h = PermGroup(4, {Permutation::from_cycles(4, {{2, 3}}), Permutation::from_cycles(4, {{3, 4}})});
  CHECK_THROWS_AS(check_superlinear(odd_h), Error);

  auto bad_zeta = cert;
  bad_zeta.conditions[0].zeta = Permutation::identity(4);
  CHECK_THROWS_AS(check_superlinear(bad_zeta), Error);

  auto invalid_face = cert;
  for (auto& x : invalid_face.conditions[0].face[0].a) x = -x;
  invalid_face.conditions[0].face[0].b = -invalid_face.conditions[0].face[0].b + 1;
  try {
    (void)check_superlinear(invalid_face);
    FAIL("expected invalid_argument");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::invalid_argument);
  }

  // A witness that is not on F_1: (2,1,3,4) has x_1 = 2 > 1.
  auto off = cert;
  off.conditions[2].witness = RatVec{2, 1, 3, 4};
  const auto v = check_superlinear(off);
  CHECK(!v.conditions_met);
  CHECK(v.failures.size() == 1);
  CHECK(v.failures[0] == "j = 3: v_j is not in F_1");

  // A face that is all of P cannot exclude zeta v.
  auto whole = restrict_to(cert, {1});
  whole.conditions[0].face = {Inequality{RatVec{1, 1, 1, 1}, 10}};
  const auto w = check_superlinear(whole);
  CHECK(!w.conditions_met);
  REQUIRE(w.failures.size() == 1);
  CHECK(w.failures[0].find("lies in F_j") != std::string::npos);
}

TEST_CASE("cube: at most two faces") {
  for (int n = 3; n <= 6; ++n) {
    CAPTURE(n);
    const auto r = cube_family_search(n);
    CHECK(r.max_feasible_family_size == 2);
    CHECK(r.witnesses.size() == 2);
    CHECK(r.feasible_by_size[1] == static_cast<std::size_t>(4 * (n - 1)));
    for (std::size_t k = 3; k < r.feasible_by_size.size(); ++k) CHECK(r.feasible_by_size[k] == 0);
  }
  CHECK(cube_family_search(5, 1).max_feasible_family_size == 1);
  CHECK_THROWS_AS(cube_family_search(7), Error);

  // Cross-check against check_superlinear over every family at n = 4.
  const int n = 4;
  const auto r = cube_family_search(n);
  const CubeForm forms[] = {CubeForm::low_zero, CubeForm::low_one, CubeForm::high_zero, CubeForm::high_one};
  std::vector<std::size_t> by_size(n, 0);
  for (const auto& js : nonempty_subsets({1, 2, 3})) {
    const std::size_t total = std::size_t{1} << (2 * js.size());
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<std::pair<int, CubeForm>> family;
      for (std::size_t a = 0; a < js.size(); ++a) family.emplace_back(js[a], forms[code >> (2 * a) & 3u]);
      if (check_superlinear(cube_certificate(n, family)).conditions_met) ++by_size[js.size()];
    }
  }
  CHECK(by_size == r.feasible_by_size);

  std::vector<std::pair<int, CubeForm>> best;
  for (const auto& w : r.witnesses) best.emplace_back(w.j, w.form);
  CHECK(check_superlinear(cube_certificate(n, best)).conditions_met);
}

TEST_CASE("facet_orbit_analysis") {
  const auto b = birkhoff(4);
  auto r = facet_orbit_analysis(*b.polytope, b.action);
  CHECK(r.facets == 16);
  CHECK(r.sizes == std::vector<std::size_t>{4, 4, 4, 4});
  CHECK(!r.theorem61_applicable);
  CHECK(r.consistent);

  for (int n = 4; n <= 8; ++n) {
    const auto c = cube(n);
    r = facet_orbit_analysis(*c.polytope, c.action);
    CHECK(r.sizes == std::vector<std::size_t>{static_cast<std::size_t>(n), static_cast<std::size_t>(n)});
    CHECK(r.theorem61_applicable == (n >= 6));
    CHECK(r.consistent);
    for (auto s : r.sizes) CHECK(c.action.group().order() % s == 0);
  }

  for (int n = 3; n <= 5; ++n) {
    const auto l = ln_polytope(n);
    r = facet_orbit_analysis(*l.polytope, l.action);
    CHECK(r.sizes == std::vector<std::size_t>(3, static_cast<std::size_t>(n)));
  }

  // [0,1] x [0,2] is not invariant under swapping the coordinates.
  HRep rect{2, {{RatVec{1, 0}, 0}, {RatVec{0, 1}, 0}, {RatVec{-1, 0}, -1}, {RatVec{0, -1}, -2}}, {}};
  Polytope p;
  p.h = rect;
  try {
    (void)facet_orbit_analysis(p, point_action(symmetric(2)));
    FAIL("expected not_symmetric");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_symmetric);
  }
}

TEST_CASE("matroid wrapper") {
  const auto k4 = graphic_matroid_input(4);
  CHECK(k4.independent.size() == 38);  // forests of K_4
  const auto res = matroid_superlinear(k4);
  CHECK(res.verdict.conditions_met);
  CHECK(res.verdict.bound == 6);
  CHECK(res.ranks == std::vector<int>{2, 1, 2});

  CHECK(matroid_superlinear(graphic_matroid_input(5)).verdict.bound == 10);

  // U_{1,4}: the flat {} gives the whole polytope.
  MatroidInput u;
  u.n = 4;
  u.labels = point_labels(4);
  u.independent = {{}, {0}, {1}, {2}, {3}};
  u.conditions = {{1, {}, {1}, std::nullopt}};
  const auto ur = matroid_superlinear(u);
  CHECK(!ur.verdict.conditions_met);
  CHECK(ur.ranks == std::vector<int>{0});

  MatroidInput triv;
  triv.n = 4;
  triv.labels = point_labels(4);
  triv.independent = {{}};
  CHECK_THROWS_AS(matroid_superlinear(triv), Error);

  auto not_flat = k4;
  not_flat.conditions[0].flat = {static_cast<int>(edge_index(4, 0, 1)), static_cast<int>(edge_index(4, 0, 2))};
  CHECK_THROWS_AS(matroid_superlinear(not_flat), Error);

  auto broken = u;
  broken.independent = {{}, {0}, {1}, {2}, {3}, {0, 1}};  // {0,1} vs {2}: no exchange
  CHECK_THROWS_AS(matroid_superlinear(broken), Error);

  auto asym = u;
  asym.independent = {{}, {0}};
  asym.conditions.clear();
  try {
    (void)matroid_superlinear(asym);
    FAIL("expected not_symmetric");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_symmetric);
  }
}
