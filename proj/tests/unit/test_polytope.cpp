#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "symext/lp.hpp"
#include "symext/polytope.hpp"

using namespace symext;

namespace {

HRep unit_box(std::size_t d) {
  HRep h{d, {}, {}};
  for (std::size_t i = 0; i < d; ++i) {
    h.ineqs.push_back({unit_vector(d, i), 0});
    h.ineqs.push_back({scale(-1, unit_vector(d, i)), -1});
  }
  return h;
}

std::vector<RatVec> square_vertices() { return {{0, 0}, {0, 1}, {1, 0}, {1, 1}}; }

RatVec r(std::initializer_list<long> xs) {
  RatVec v;
  for (long x : xs) v.push_back(x);
  return v;
}

}  // namespace

TEST_CASE("lp_optimize examples") {
  HRep h = unit_box(2);
  h.ineqs.push_back({r({1, 1}), make_rat(1, 2)});
  auto mx = lp_optimize(h, r({1, 0}), Sense::maximize);
  CHECK(std::get<LpOptimum>(mx).value == 1);
  auto mn = lp_optimize(h, r({1, 1}), Sense::minimize);
  CHECK(std::get<LpOptimum>(mn).value == make_rat(1, 2));

  HRep ray{1, {{r({1}), 0}}, {}};
  CHECK(std::holds_alternative<LpUnbounded>(lp_optimize(ray, r({1}), Sense::maximize)));

  HRep empty{1, {{r({1}), 1}, {r({-1}), 0}}, {}};
  auto inf = lp_optimize(empty, r({1}), Sense::minimize);
  REQUIRE(std::holds_alternative<LpInfeasible>(inf));

  CHECK_THROWS_AS(lp_optimize(h, r({1}), Sense::minimize), Error);
}

TEST_CASE("lp duals certify random bounded LPs") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    HRep h = unit_box(3);
    for (int k = 0; k < 4; ++k) h.ineqs.push_back({RatVec{d(rng), d(rng), d(rng)}, d(rng)});
    if (trial % 3 == 0) h.eqs.push_back({RatVec{1, d(rng), 1}, make_rat(d(rng), 3)});
    const RatVec c{d(rng), d(rng), d(rng)};
    for (auto sense : {Sense::minimize, Sense::maximize}) {
      auto res = lp_optimize(h, c, sense);
      if (auto* o = std::get_if<LpOptimum>(&res)) {
        CHECK(h.contains(o->point));
        CHECK(dot(c, o->point) == o->value);
        // Objective is a conic combination of the constraint normals.
        RatVec comb = zeros(3);
        Rat rhs;
        for (std::size_t i = 0; i < h.ineqs.size(); ++i) {
          CHECK(sgn(o->dual_ineq[i]) * (sense == Sense::minimize ? 1 : -1) >= 0);
          axpy(comb, o->dual_ineq[i], h.ineqs[i].a);
          rhs += o->dual_ineq[i] * h.ineqs[i].b;
        }
        for (std::size_t i = 0; i < h.eqs.size(); ++i) {
          axpy(comb, o->dual_eq[i], h.eqs[i].a);
          rhs += o->dual_eq[i] * h.eqs[i].b;
        }
        CHECK(comb == c);
        CHECK(rhs == o->value);
      } else {
        CHECK(std::holds_alternative<LpInfeasible>(res));
      }
    }
  }
}

TEST_CASE("member_of_hull") {
  const auto sq = square_vertices();
  auto in = member_of_hull(sq, r({0, 1}));
  CHECK(std::get<HullInside>(in).coefficients == r({0, 1, 0, 0}));
  auto mid = member_of_hull(sq, RatVec{make_rat(1, 2), make_rat(1, 2)});
  REQUIRE(std::holds_alternative<HullInside>(mid));
  auto out = member_of_hull(sq, r({2, 0}));
  const auto& sep = std::get<HullOutside>(out);
  CHECK(sep.a == r({-1, 0}));
  CHECK(sep.b == -1);
  for (const auto& v : sq) CHECK(dot(sep.a, v) >= sep.b);
  CHECK(dot(sep.a, r({2, 0})) < sep.b);
}

TEST_CASE("enumerate_vertices examples") {
  CHECK(enumerate_vertices(unit_box(2)).vertices == square_vertices());
  HRep simplex{3, {{r({1, 0, 0}), 0}, {r({0, 1, 0}), 0}, {r({0, 0, 1}), 0}}, {{r({1, 1, 1}), 1}}};
  CHECK(enumerate_vertices(simplex).vertices == std::vector<RatVec>{r({0, 0, 1}), r({0, 1, 0}), r({1, 0, 0})});
  CHECK_THROWS_AS(enumerate_vertices(unit_box(15)), Error);
  CHECK(enumerate_vertices(unit_box(15), 15).vertices.size() == 32768);
  HRep ray{1, {{r({1}), 0}}, {}};
  CHECK_THROWS_AS(enumerate_vertices(ray), Error);
  HRep empty{1, {{r({1}), 1}, {r({-1}), 0}}, {}};
  CHECK(enumerate_vertices(empty).vertices.empty());
}

TEST_CASE("enumerate_vertices agrees with the tight-subset oracle") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    HRep h = unit_box(3);
    for (int k = 0; k < 3; ++k) h.ineqs.push_back({RatVec{d(rng), d(rng), d(rng)}, d(rng)});
    if (trial % 4 == 0) h.eqs.push_back({RatVec{1, 1, d(rng)}, 1});
    const auto got = enumerate_vertices(h).vertices;
    CHECK(got == oracle::vertices_by_tight_subsets(h));
  }
}

TEST_CASE("facet_filter") {
  HRep dup = unit_box(2);
  dup.ineqs.push_back(dup.ineqs[0]);
  CHECK(facet_filter(dup).ineqs.size() == 4);
  HRep red = unit_box(2);
  red.ineqs.push_back({r({1, 1}), -1});
  CHECK(facet_filter(red).ineqs.size() == 4);

  // x >= 0, -x >= 0 pins a coordinate: not facets but an equality.
  HRep pinned = unit_box(2);
  pinned.ineqs.push_back({r({-1, 0}), 0});
  const auto f = facet_filter(pinned);
  CHECK(f.ineqs.size() == 2);
  CHECK(f.eqs.size() == 1);
  CHECK(affine_dimension(pinned) == 1);

  HRep empty{1, {{r({1}), 1}, {r({-1}), 0}}, {}};
  CHECK_THROWS_AS(facet_filter(empty), Error);
}

TEST_CASE("facet_filter is idempotent and order independent") {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int trial = 0; trial < 30; ++trial) {
    HRep h = unit_box(3);
    for (int k = 0; k < 4; ++k) h.ineqs.push_back({RatVec{d(rng), d(rng), d(rng)}, -1});
    h.ineqs.push_back(h.ineqs[1]);
    const auto once = facet_filter(h);
    auto normal_set = [](const HRep& x) {
      std::set<RatVec> s;
      for (const auto& q : x.ineqs) {
        auto n = normalized(q);
        n.a.push_back(n.b);
        s.insert(n.a);
      }
      return s;
    };
    CHECK(normal_set(facet_filter(once)) == normal_set(once));
    HRep shuffled = h;
    std::shuffle(shuffled.ineqs.begin(), shuffled.ineqs.end(), rng);
    CHECK(normal_set(facet_filter(shuffled)) == normal_set(once));
  }
}

TEST_CASE("faces and invariance") {
  auto sq = std::make_shared<const Polytope>(from_hrep(unit_box(2)));
  CHECK(sq->consistency == Consistency::certified);
  const auto edge = face_of(sq, {{r({1, 0}), 0}});
  CHECK(edge.vertex_indices.size() == 2);
  CHECK(face_of(sq, {}).vertex_indices.size() == 4);
  CHECK_THROWS_AS(face_of(sq, {{r({1, 0}), 1}}), Error);

  const auto swap = point_action(symmetric(2));
  CHECK(is_invariant(*sq, swap).invariant);
  const auto res = is_invariant(edge, swap);
  CHECK(!res.invariant);
  CHECK(res.element->cycle_string() == "(1 2)");
  CHECK(*res.vertex == r({0, 1}));
}

TEST_CASE("fixed_subspace") {
  const auto s2 = point_action(symmetric(2));
  auto line = fixed_subspace(s2, s2.group());
  REQUIRE(line);
  CHECK(line->basis.size() == 1);
  CHECK(line->basis[0] == r({1, 1}));
  auto all = fixed_subspace(s2, PermGroup::trivial(2));
  CHECK(all->basis.size() == 2);
  const auto a3 = point_action(alternating(3));
  auto diag = fixed_subspace(a3, a3.group());
  REQUIRE(diag->basis.size() == 1);
  CHECK(diag->basis[0] == r({1, 1, 1}));
  // x -> 1 - x fixes 1/2.
  const auto refl = AffineAction::from_generators(symmetric(2), 1, {AffineMap(RatMat{{-1}}, RatVec{1})});
  CHECK(fixed_subspace(refl, refl.group())->offset == RatVec{make_rat(1, 2)});
}

TEST_CASE("centroid of a certified polytope is inside, vertices have unit coefficients") {
  const auto p = from_hrep(unit_box(3));
  CHECK(std::holds_alternative<HullInside>(member_of_hull(p.vertices(), centroid(p.vertices()))));
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    const auto in = std::get<HullInside>(member_of_hull(p.vertices(), p.vertices()[i]));
    CHECK(in.coefficients == unit_vector(p.vertices().size(), i));
  }
  CHECK(!first_non_extreme_vertex(*p.v));
  VRep with_center = *p.v;
  with_center.vertices.push_back(RatVec{make_rat(1, 2), make_rat(1, 2), make_rat(1, 2)});
  CHECK(first_non_extreme_vertex(with_center) == 8u);
}
