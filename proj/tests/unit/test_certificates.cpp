#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "symext/certificates.hpp"
#include "symext/zoo.hpp"

using namespace symext;

namespace {

RatVec r(std::initializer_list<long> xs) {
  RatVec v;
  for (long x : xs) v.push_back(x);
  return v;
}

Theorem1Certificate square_cert(std::vector<Rat> c) {
  const auto sq = std::make_shared<const Polytope>(from_hrep(cube_hrep(2)));
  const auto s2 = symmetric(2);
  // vertices (0,0), (0,1), (1,0), (1,1): orbits {0}, {1,2}, {3}
  return {sq, point_action(s2), {{"swap", s2, {{0}, {1, 2}, {3}}}}, std::move(c), {}, std::nullopt};
}

Theorem1Certificate relabeled(const Theorem1Certificate& cert, const Permutation& g) {
  const auto& vs = cert.p->vertices();
  std::map<RatVec, std::size_t> idx;
  for (std::size_t i = 0; i < vs.size(); ++i) idx[vs[i]] = i;
  const AffineMap m = cert.action.map(g);
  std::vector<std::size_t> image(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) image[i] = idx.at(m.apply(vs[i]));
  Theorem1Certificate out = cert;
  for (std::size_t i = 0; i < vs.size(); ++i) out.c[image[i]] = cert.c[i];
  for (auto& cls : out.classes) {
    std::vector<Permutation> gens;
    for (const auto& h : cls.subgroup.generators()) gens.push_back(g * h * g.inverse());
    cls.subgroup = PermGroup(g.degree(), gens);
    for (auto& block : cls.blocks)
      for (auto& i : block) i = image[i];
  }
  auto move_ineq = [&](Inequality q) {
    q.a = m.linear_matrix() * std::span<const Rat>(q.a);
    return q;
  };
  for (auto& f : out.face) f = move_ineq(f);
  if (out.target) out.target = move_ineq(*out.target);
  return out;
}

}  // namespace

TEST_CASE("verify_theorem1 on the square") {
  auto unit = verify_theorem1(square_cert({0, 1, 0, 0}));
  CHECK(unit.system_ok);
  CHECK(unit.point == r({0, 1}));
  CHECK(unit.membership.inside);
  CHECK(!unit.refutation);

  const Rat h = make_rat(1, 2);
  auto neg = verify_theorem1(square_cert({1, 1, -h, -h}));
  CHECK(!neg.system_ok);
  REQUIRE(neg.failures.size() == 1);
  CHECK(neg.failures[0].find("block 2") != std::string::npos);

  // Every orbit sum is nonnegative yet the point (-1/2, 3/2) leaves the
  // square: no extension has only swap-stable facets.
  auto affine = verify_theorem1(square_cert({h, 1, -1, h}));
  CHECK(affine.system_ok);
  CHECK(affine.point == RatVec{-h, 3 * h});
  CHECK(affine.refutation);

  auto straddle = square_cert({0, 1, 0, 0});
  straddle.classes[0].blocks = {{0, 1}, {2}, {3}};
  CHECK_THROWS_WITH_AS(verify_theorem1(straddle), doctest::Contains("meets two orbits"), Error);
  auto overlap = square_cert({0, 1, 0, 0});
  overlap.classes[0].blocks = {{0}, {0, 3}};
  CHECK_THROWS_AS(verify_theorem1(overlap), Error);
  auto fine = square_cert({0, 1, 0, 0});
  fine.classes[0].blocks = {{1}, {2}};
  CHECK(verify_theorem1(fine).system_ok);

  // Without facet classes any affine combination passes the system.
  auto beyond = square_cert({-2, 1, 2, 0});
  beyond.classes.clear();
  const auto w = verify_theorem1(beyond);
  CHECK(w.point == r({2, 1}));
  CHECK(w.system_ok);
  CHECK(w.refutation);
  REQUIRE(w.membership.separator);
  CHECK(slack(*w.membership.separator, w.point) < 0);
  for (const auto& v : beyond.p->vertices()) CHECK(slack(*w.membership.separator, v) >= 0);
}

TEST_CASE("matching counts") {
  CHECK(matching_counts(3, 3, 1) == 9);
  CHECK(matching_counts(3, 3, 3) == 6);
  CHECK(matching_counts(1, 1, 1) == 1);
  CHECK_THROWS_AS(matching_counts(3, 3, 2), Error);
  CHECK(matching_counts_restricted(3, 3, 0, 0, 0, 1) == 9);
  CHECK(matching_counts_restricted(3, 3, 1, 0, 0, 1) == 3);
  CHECK(matching_counts_restricted(3, 3, 0, 0, 1, 1) == 1);
  CHECK(matching_counts_restricted(3, 3, 0, 0, 1, 3) == 2);
  CHECK(matching_counts_restricted(3, 3, 1, 1, 0, 3) == 0);
  CHECK_THROWS_AS(matching_counts_restricted(3, 3, 2, 0, 0, 1), Error);
  CHECK_THROWS_AS(matching_counts_restricted(3, 3, 0, 0, 2, 1), Error);
}

TEST_CASE("matching counts agree with enumeration") {
  for (int ls = 0; ls <= 6; ++ls)
    for (int lu = ls % 2; lu <= 6; lu += 2) {
      const auto oracle = oracle::restricted_counts_by_enumeration(ls, lu);
      for (int as = 0; 2 * as <= ls; ++as)
        for (int au = 0; 2 * au <= lu; ++au)
          for (int a = 0; 2 * as + a <= ls && 2 * au + a <= lu; ++a)
            for (int i = a; i <= std::min(ls, lu); ++i) {
              CAPTURE(ls);
              CAPTURE(lu);
              CAPTURE(as);
              CAPTURE(au);
              CAPTURE(a);
              CAPTURE(i);
              CHECK(matching_counts_restricted(ls, lu, as, au, a, i) == oracle.at(as, au, a, i));
              if (as == 0 && au == 0 && a == 0 && (ls - i) % 2 == 0) CHECK(matching_counts(ls, lu, i) == oracle.at(0, 0, 0, i));
            }
    }
}

TEST_CASE("solve_interpolation") {
  CHECK(solve_interpolation(1, {1, 3}) == std::vector<Rat>{make_rat(3, 2), make_rat(-1, 2)});
  CHECK(solve_interpolation(0, {1}) == std::vector<Rat>{1});
  CHECK(solve_interpolation(2, {1, 3, 5}) == std::vector<Rat>{make_rat(15, 8), make_rat(-5, 4), make_rat(3, 8)});
  CHECK_THROWS_AS(solve_interpolation(1, {3, 3}), Error);
  CHECK_THROWS_AS(solve_interpolation(2, {1, 3}), Error);

  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (int k = 0; k <= 4; ++k) {
    std::vector<int> nodes;
    for (int t = 0; t <= k; ++t) nodes.push_back(2 * t + 1);
    const auto b = solve_interpolation(k, nodes);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Rat> f;
      for (int t = 0; t <= k; ++t) f.push_back(make_rat(coef(rng), 1 + std::abs(coef(rng))));
      auto eval = [&](long x) {
        Rat y, p = 1;
        for (const auto& a : f) {
          y += a * p;
          p *= x;
        }
        return y;
      };
      Rat lhs;
      for (std::size_t i = 0; i < nodes.size(); ++i) lhs += b[i] * eval(nodes[i]);
      CHECK(lhs == eval(0));
    }
  }
}

TEST_CASE("build_matching_certificate") {
  const auto c103 = build_matching_certificate(10, 3);
  CHECK(c103.k == 1);
  CHECK(c103.ls == 3);
  CHECK(c103.lu == 3);
  CHECK(c103.nodes == std::vector<int>{1, 3});
  CHECK(c103.b == std::vector<Rat>{make_rat(3, 2), make_rat(-1, 2)});
  const auto c104 = build_matching_certificate(10, 4);
  CHECK(c104.k == 1);
  CHECK(c104.ls == 3);
  CHECK(c104.lu == 5);
  CHECK(c104.nodes == std::vector<int>{1, 3});
  const auto c125 = build_matching_certificate(12, 5);
  CHECK(c125.k == 2);
  CHECK(c125.nodes == std::vector<int>{1, 3, 5});
  CHECK(c125.v_upper == std::vector<int>{5, 6, 7, 8, 9});
  CHECK_THROWS_AS(build_matching_certificate(5, 3), Error);
}

TEST_CASE("expand_matching_cert and the refutation") {
  for (auto [n, l] : std::vector<std::pair<int, int>>{{6, 3}, {7, 3}, {8, 3}}) {
    CAPTURE(n);
    const auto exp = expand_matching_cert(build_matching_certificate(n, l));
    CHECK(exp.sum_c == 1);
    CHECK(exp.crossing_sum == 0);
    CHECK(exp.closed_form_mismatches == 0);
    CHECK(exp.failures.empty());
    CHECK(exp.certificate.classes.size() == static_cast<std::size_t>(n + 1));
    const auto v = verify_theorem1(exp.certificate);
    CHECK(v.system_ok);
    CHECK(!v.membership.inside);
    CHECK(v.refutation);
    REQUIRE(v.membership.separator);
    for (const auto& x : exp.certificate.p->vertices()) CHECK(slack(*v.membership.separator, x) >= 0);
    CHECK(slack(*v.membership.separator, v.point) < 0);
  }
  // l = 2 has k = 0: no degree-one interpolation, the crossing mass stays 1.
  const auto e2 = expand_matching_cert(build_matching_certificate(6, 2));
  CHECK(e2.crossing_sum == 1);
  CHECK(!e2.ok());
}

TEST_CASE("refutation is stable under relabeling") {
  const auto exp = expand_matching_cert(build_matching_certificate(6, 3));
  const auto base = verify_theorem1(exp.certificate);
  for (const auto& g : {Permutation::from_cycles(6, {{1, 2, 3}}), Permutation::from_cycles(6, {{1, 4}, {2, 6}}),
                        Permutation::from_cycles(6, {{1, 2, 3, 4, 5}})}) {
    const auto moved = verify_theorem1(relabeled(exp.certificate, g));
    CHECK(moved.system_ok == base.system_ok);
    CHECK(moved.refutation == base.refutation);
  }
}

TEST_CASE("SDP verifier") {
  for (const auto& c : std::vector<std::vector<Rat>>{{0, 1, 0, 0}, {1, 1, make_rat(-1, 2), make_rat(-1, 2)}, {-2, 1, 2, 0}}) {
    for (bool with_classes : {true, false}) {
      auto cert = square_cert(c);
      if (!with_classes) cert.classes.clear();
      const auto lp = verify_theorem1(cert);
      const auto sdp = verify_theorem1_sdp(diagonal_embedding(cert));
      CHECK(lp.system_ok == sdp.system_ok);
      CHECK(lp.refutation == sdp.refutation);
      CHECK(lp.membership.inside == sdp.membership.inside);
    }
  }
  const auto exp = expand_matching_cert(build_matching_certificate(6, 3));
  const auto sdp = verify_theorem1_sdp(diagonal_embedding(exp.certificate));
  CHECK(sdp.system_ok);
  CHECK(sdp.refutation);

  const auto seg = std::make_shared<const Polytope>(from_hrep(cube_hrep(1)));
  SdpCertificate unit;
  unit.p = seg;
  unit.section = {RatMat{{2, 2}, {2, 2}}, RatMat{{1, 0}, {0, 1}}};
  unit.families = {{{0, 1}}};
  unit.c = {1, 0};
  const auto uv = verify_theorem1_sdp(unit);
  CHECK(uv.system_ok);
  CHECK(uv.membership.inside);

  // One block summing to [[1,2],[2,1]].
  SdpCertificate neg = unit;
  neg.c = {2, -1};
  neg.section = {RatMat{{1, 1}, {1, 1}}, RatMat{{1, 0}, {0, 1}}};
  const auto nv = verify_theorem1_sdp(neg);
  CHECK(!nv.system_ok);
  REQUIRE(nv.psd_witness);
  CHECK(quadratic_form(RatMat{{1, 2}, {2, 1}}, *nv.psd_witness) < 0);

  SdpCertificate not_psd = unit;
  not_psd.section[1] = RatMat{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(verify_theorem1_sdp(not_psd), Error);
  SdpCertificate asym = unit;
  asym.section[0] = RatMat{{1, 2}, {0, 1}};
  try {
    (void)verify_theorem1_sdp(asym);
    FAIL("expected not_symmetric");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_symmetric);
  }
}

TEST_CASE("average_frobenius") {
  const RatMat a{{1, 0}, {0, 0}}, b{{0, 0}, {0, 1}};
  const auto triv = AffineAction::coordinate(PermGroup::trivial(2), conjugation_cell_labels(2));
  CHECK(average_frobenius(triv, a, a) == frobenius(a, a));
  CHECK(average_frobenius(triv, a, b) == 0);
  const auto swap = AffineAction::coordinate(symmetric(2), conjugation_cell_labels(2));
  CHECK(average_frobenius(swap, a, a) == 1);
  CHECK(average_frobenius(swap, a, b) == 0);
  const auto s3 = AffineAction::coordinate(symmetric(3), conjugation_cell_labels(3));
  CHECK(average_frobenius(s3, RatMat::identity(3), RatMat::identity(3)) == 3);

  auto act = [&](const Permutation& g, const RatMat& m) {
    RatVec flat;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (const auto& x : m.row(i)) flat.push_back(x);
    const RatVec y = s3.apply(g, flat);
    RatMat out(3, 3);
    for (std::size_t i = 0; i < 9; ++i) out(i / 3, i % 3) = y[i];
    return out;
  };
  const RatMat m1{{1, 2, 0}, {2, 3, 1}, {0, 1, 5}}, m2{{4, 0, 1}, {0, 1, 1}, {1, 1, 2}};
  const Rat base = average_frobenius(s3, m1, m2);
  for (const auto& g : s3.group().elements()) CHECK(average_frobenius(s3, act(g, m1), act(g, m2)) == base);

  const auto refl = AffineAction::from_generators(symmetric(2), 1, {AffineMap(RatMat{{-1}}, RatVec{1})});
  CHECK_THROWS_AS(average_frobenius(refl, RatMat{{1}}, RatMat{{1}}), Error);
}
