#include "doctest.h"
#include "oracles.hpp"
#include "symext/extensions.hpp"
#include "symext/zoo.hpp"

using namespace symext;

namespace {

RatVec r(std::initializer_list<long> xs) {
  RatVec v;
  for (long x : xs) v.push_back(x);
  return v;
}

std::shared_ptr<const Polytope> box(std::size_t d) { return std::make_shared<const Polytope>(from_hrep(cube_hrep(static_cast<int>(d)))); }

std::shared_ptr<const Polytope> segment(long lo, long hi) {
  HRep h{1, {{r({1}), lo}, {r({-1}), -hi}}, {}};
  return std::make_shared<const Polytope>(from_hrep(std::move(h)));
}

AffineAction trivial_on(const PermGroup& g, std::size_t dim) {
  return AffineAction::from_generators(g, dim, std::vector<AffineMap>(g.generators().size(), AffineMap::identity(dim)));
}

// [0,1]^3, S_2 swapping the first two coordinates, P = [0,1] by the third.
ExtensionSpec cube_onto_segment() {
  const auto s2 = symmetric(2);
  auto labels = point_labels(2);
  labels.push_back(fixed_labels(1, 1)[0]);
  ExtensionSpec spec;
  spec.q = box(3);
  spec.p = segment(0, 1);
  spec.proj = {RatMat{{0, 0, 1}}, r({0})};
  spec.action_q = AffineAction::coordinate(s2, labels);
  spec.action_p = trivial_on(s2, 1);
  return spec;
}

}  // namespace

TEST_CASE("verify_symmetric_extension examples") {
  const auto s2 = symmetric(2);
  ExtensionSpec same{box(2), box(2), {RatMat::identity(2), zeros(2)}, point_action(s2), point_action(s2), std::nullopt};
  auto v = verify_symmetric_extension(same);
  CHECK(v.is_extension);
  CHECK(v.is_symmetric);

  ExtensionSpec first{box(2), segment(0, 1), {RatMat{{1, 0}}, r({0})}, point_action(s2), trivial_on(s2, 1), std::nullopt};
  v = verify_symmetric_extension(first);
  CHECK(v.is_extension);
  CHECK(!v.is_symmetric);
  REQUIRE(!v.counterexamples.empty());
  CHECK(v.counterexamples[0].find("(1 2)") != std::string::npos);

  ExtensionSpec wrong_shape = first;
  wrong_shape.proj.m = RatMat{{1, 0, 0}};
  CHECK_THROWS_AS(verify_symmetric_extension(wrong_shape), Error);

  ExtensionSpec too_small{box(2), segment(0, 2), {RatMat{{1, 0}}, r({0})}, point_action(s2), trivial_on(s2, 1), std::nullopt};
  CHECK(!verify_symmetric_extension(too_small).is_extension);
}

TEST_CASE("birkhoff onto permutahedron") {
  for (int n = 3; n <= 4; ++n) {
    const auto spec = birkhoff_extension(n);
    const auto v = verify_symmetric_extension(spec);
    CHECK(v.is_extension);
    CHECK(v.is_symmetric);
    CHECK(certify_projection_equality(spec).equal());
    const auto sc = check_section(spec, *spec.section);
    CHECK(sc.is_section);
    CHECK(sc.is_invariant);
    CHECK(average_section(spec, *spec.section) == *spec.section);
  }
  // Weighting rows instead of columns does not commute with the column action.
  auto rows = birkhoff_extension(3);
  rows.proj.m = RatMat(3, 9);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) rows.proj.m(i, i * 3 + j) = static_cast<long>(j + 1);
  CHECK(!verify_symmetric_extension(rows).is_symmetric);
}

TEST_CASE("an_extension") {
  const auto spec2 = an_extension(2);
  CHECK(spec2.q->dim() == 4);
  // At n = 2 the equality already implies y_i + z_i <= 1/2: L_2 is a simplex.
  CHECK(facet_filter(spec2.q->hrep()).ineqs.size() == 4);
  const Rat h = make_rat(1, 2);
  const auto& pv = spec2.p->vertices();
  const auto it = std::find(pv.begin(), pv.end(), RatVec{h, 0});
  REQUIRE(it != pv.end());
  const auto& pre = (*spec2.section)[static_cast<std::size_t>(it - pv.begin())];
  CHECK(pre == RatVec{0, 0, 0, h});
  CHECK(spec2.proj.apply(pre) == RatVec{h, 0});

  for (int n = 2; n <= 5; ++n) {
    const auto spec = an_extension(n);
    const auto facets = facet_filter(spec.q->hrep()).ineqs.size();
    CHECK(facets == oracle::facet_count_by_incidence(spec.q->hrep(), spec.q->vertices()));
    if (n >= 3) CHECK(facets == static_cast<std::size_t>(3 * n));
    for (const auto& v : spec.q->vertices())
      for (const auto& x : v) CHECK((x == 0 || x == h));
    const auto ver = verify_symmetric_extension(spec);
    CHECK(ver.is_extension);
    CHECK(ver.is_symmetric);
    const auto eq = certify_projection_equality(spec);
    CHECK(eq.equal());
    CHECK(eq.slacks.size() == spec.p->hrep().ineqs.size());
    // Independent re-check of the certified equality.
    for (const auto& y : spec.q->vertices())
      CHECK(std::holds_alternative<HullInside>(member_of_hull(spec.p->vertices(), spec.proj.apply(y))));
    const auto sc = check_section(spec, *spec.section);
    CHECK(sc.is_section);
    CHECK(sc.is_invariant);
  }
}

TEST_CASE("broken projection is caught") {
  auto spec = an_extension(3);
  HRep loose = spec.q->hrep();
  loose.eqs.clear();
  Polytope q;
  q.h = loose;
  spec.q = std::make_shared<const Polytope>(std::move(q));
  const auto eq = certify_projection_equality(spec);
  CHECK(!eq.contained);
  REQUIRE(!eq.failures.empty());
  CHECK(eq.failures[0].rfind("ineq ", 0) == 0);
}

TEST_CASE("average_section") {
  auto spec = cube_onto_segment();
  CHECK(verify_symmetric_extension(spec).is_symmetric);
  const SectionTable raw{r({1, 0, 0}), r({0, 0, 1})};
  CHECK(!check_section(spec, raw).is_invariant);
  const auto avg = average_section(spec, raw);
  const Rat h = make_rat(1, 2);
  CHECK(avg == SectionTable{RatVec{h, h, 0}, r({0, 0, 1})});
  const auto sc = check_section(spec, avg);
  CHECK(sc.is_section);
  CHECK(sc.is_invariant);
  CHECK(average_section(spec, avg) == avg);

  const auto an = an_extension(3);
  CHECK(average_section(an, *an.section) == *an.section);

  // Trivial group: nothing to average.
  auto triv = spec;
  triv.action_q = AffineAction::coordinate(PermGroup::trivial(2), triv.action_q.labels());
  triv.action_p = trivial_on(PermGroup::trivial(2), 1);
  CHECK(average_section(triv, raw) == raw);

  const SectionTable bad{r({1, 0, 1}), r({0, 0, 1})};
  try {
    (void)average_section(spec, bad);
    FAIL("expected not_a_section");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_a_section);
    CHECK(std::string(e.what()).find("(0)") != std::string::npos);
  }
}

TEST_CASE("fixed_point_restriction") {
  const auto s2 = symmetric(2);
  ExtensionSpec sq{box(2), segment(0, 0), {RatMat(1, 2), r({0})}, point_action(s2), trivial_on(s2, 1), std::nullopt};
  const auto res = fixed_point_restriction(sq, s2);
  REQUIRE(res.restricted);
  CHECK(res.facets_before == 4);
  CHECK(res.facets_after == 2);
  CHECK(res.dim_after == 1);
  CHECK(res.restricted->q->vertices() == std::vector<RatVec>{r({0, 0}), r({1, 1})});
  CHECK(res.verdict.is_extension);
  CHECK(res.verdict.is_symmetric);

  const auto same = fixed_point_restriction(sq, PermGroup::trivial(2));
  CHECK(same.restricted->q->vertices() == sq.q->vertices());
  CHECK(same.facets_after == same.facets_before);

  // [0,1]^4 with <(1 2), (3 4)>; (1 2) acts trivially downstairs.
  const auto g = PermGroup(4, {Permutation::from_cycles(4, {{1, 2}}), Permutation::from_cycles(4, {{3, 4}})});
  const auto down = AffineAction::from_generators(g, 1, {AffineMap::identity(1), AffineMap(RatMat{{-1}}, r({1}))});
  const Rat h = make_rat(1, 2);
  ExtensionSpec four{box(4), segment(0, 1), {RatMat{{0, 0, h, -h}}, RatVec{h}}, point_action(g), down,
                     SectionTable{r({1, 0, 0, 1}), r({0, 1, 1, 0})}};
  CHECK(verify_symmetric_extension(four).is_symmetric);
  const auto kernel = PermGroup(4, {Permutation::from_cycles(4, {{1, 2}})});
  const auto fr = fixed_point_restriction(four, kernel);
  REQUIRE(fr.restricted);
  CHECK(fr.dim_before == 4);
  CHECK(fr.dim_after == 3);
  CHECK(fr.facets_before == 8);
  CHECK(fr.facets_after == 6);
  CHECK(fr.verdict.is_extension);
  CHECK(fr.verdict.is_symmetric);
  CHECK(check_section(*fr.restricted, *fr.restricted->section).is_section);
  // Kernel averages of vertices of Q lie in R.
  for (const auto& v : four.q->vertices()) {
    RatVec avg = zeros(4);
    for (const auto& k : kernel.elements()) axpy(avg, h, four.action_q.apply(k, v));
    CHECK(fr.restricted->q->hrep().contains(avg));
  }

  // (3 4) generates a subgroup that moves P.
  CHECK_THROWS_AS(fixed_point_restriction(four, PermGroup(4, {Permutation::from_cycles(4, {{3, 4}})})), Error);
  // Not normal: <(1 2)> inside S_3.
  const auto s3 = symmetric(3);
  ExtensionSpec tri{box(3), segment(0, 0), {RatMat(1, 3), r({0})}, point_action(s3), trivial_on(s3, 1), std::nullopt};
  try {
    (void)fixed_point_restriction(tri, PermGroup(3, {Permutation::from_cycles(3, {{1, 2}})}));
    FAIL("expected not_a_subgroup");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_a_subgroup);
  }
}

TEST_CASE("generic_log_lb") {
  CHECK(generic_log_lb(*cube(3).polytope) == 3);
  CHECK(generic_log_lb(*permutahedron(4).polytope) == 5);
  CHECK(generic_log_lb(*a_n_polytope(2).polytope) == 2);
  CHECK(generic_log_lb(*a_n_polytope(3).polytope) == 4);  // 12 vertices
}
