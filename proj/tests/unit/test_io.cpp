#include <algorithm>

#include "doctest.h"
#include "symext/extensions.hpp"
#include "symext/io.hpp"
#include "symext/scenarios.hpp"
#include "symext/zoo.hpp"

using namespace symext;
using nlohmann::json;

namespace {

// A reloaded polytope is unchecked until certified again.
json without_consistency(json j) {
  if (j.is_object()) {
    j.erase("consistency");
    for (auto& [k, v] : j.items()) v = without_consistency(v);
  }
  return j;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no Error thrown");
  return ErrorKind::internal;
}

}  // namespace

TEST_CASE("rationals and permutations") {
  CHECK(io::rat_from_json("3/4") == make_rat(3, 4));
  CHECK(io::rat_from_json("-2/4") == make_rat(-1, 2));
  CHECK(io::rat_from_json(5) == 5);
  CHECK(io::to_json(make_rat(-6, 4)) == json("-3/2"));
  CHECK(kind_of([] { io::rat_from_json("1/0"); }) == ErrorKind::parse);
  CHECK(kind_of([] { io::rat_from_json("x"); }) == ErrorKind::parse);
  CHECK(kind_of([] { io::rat_from_json(json::array()); }) == ErrorKind::parse);

  const auto g = Permutation::from_cycles(5, {{1, 3, 4}});
  CHECK(io::to_json(g) == json{3, 2, 4, 1, 5});
  CHECK(io::perm_from_json(io::to_json(g)) == g);
  CHECK(kind_of([] { io::perm_from_json(json{1, 1, 2}); }) == ErrorKind::parse);

  CHECK(io::group_from_json(json{{"named", "alternating"}, {"degree", 5}}).order() == 60);
  const auto s4 = io::group_from_json(io::to_json(symmetric(4)));
  CHECK(s4.order() == 24);
  CHECK(kind_of([] { io::parse("{\"a\": "); }) == ErrorKind::parse);
}

TEST_CASE("polytopes and extension specs survive a round trip") {
  const auto cube = build_zoo(ZooId::cube, 3);
  const json pj = io::to_json(*cube.polytope);
  const Polytope back = io::polytope_from_json(pj);
  CHECK(back.vertices() == cube.polytope->vertices());
  CHECK(without_consistency(io::to_json(back)) == without_consistency(pj));

  const auto spec = an_extension(4);
  const json sj = io::to_json(spec);
  const auto spec2 = io::extension_from_json(sj);
  CHECK(without_consistency(io::to_json(spec2)) == without_consistency(sj));
  const auto v = verify_symmetric_extension(spec2);
  CHECK(v.is_extension);
  CHECK(v.is_symmetric);
}

TEST_CASE("superlinear certificates survive a round trip") {
  const auto cert = corollary_certificate(ZooId::permutahedron, 4);
  const json j = io::to_json(cert);
  const auto back = io::superlinear_from_json(j);
  CHECK(without_consistency(io::to_json(back)) == without_consistency(j));
  const auto verdict = check_superlinear(back);
  CHECK(verdict.conditions_met);
  CHECK(verdict.bound == 6);
}

TEST_CASE("report emission") {
  Report empty;
  empty.scenario = "nothing";
  const json e = json::parse(emit(empty, Format::json));
  CHECK(e["checks"] == json::array());
  CHECK(e["certified_bounds"] == json::array());
  CHECK(e["status"] == "pass");
  CHECK(!e.contains("artifact"));

  Report bad;
  bad.scenario = "bad";
  CHECK(!bad.check("one", false, "detail"));
  const json b = json::parse(emit(bad, Format::json));
  CHECK(b["status"] == "fail");
  CHECK(b["checks"][0]["status"] == "fail");
  const std::string text = emit(bad, Format::text);
  CHECK(text.find("[FAIL] one -- detail") != std::string::npos);
  CHECK(text.find("status: fail") != std::string::npos);

  const auto once = emit(run_scenario("card-lb", {{"n", 4}}), Format::json);
  const auto twice = emit(run_scenario("card-lb", {{"n", 4}}), Format::json);
  CHECK(once == twice);
  CHECK(once.back() == '\n');
}

TEST_CASE("scenario registry") {
  CHECK(kind_of([] { run_scenario("no-such"); }) == ErrorKind::invalid_argument);
  CHECK(kind_of([] { run_scenario("perm-lb", {{"m", 4}}); }) == ErrorKind::invalid_argument);
  CHECK(kind_of([] { run_scenario("perm-lb", {{"n", "four"}}); }) == ErrorKind::invalid_argument);
  CHECK(run_scenario("perm-lb", {{"n", "5"}}).passed());

  // Small parameters keep this quick; bounds must carry the registry provenance.
  const std::map<std::string, json> cheap{
      {"an-extension", {{"n", 3}}},     {"log-lb", {{"n", 4}}},         {"matching-lb", {{"n", 8}, {"l", 3}}},
      {"interpolation", {{"k", 2}}},    {"perm-lb", {{"n", 4}}},        {"card-lb", {{"n", 4}}},
      {"stp-lb", {{"n", 4}}},           {"birkhoff-lb", {{"n", 4}}},    {"cube-obstruction", {{"n", 3}}},
      {"facet-orbits", {{"n", 6}}},     {"averaging", {{"n", 3}}},      {"restriction", {{"n", 3}}},
      {"sdp-diagonal", {{"n", 8}, {"l", 3}}}};
  for (const auto& info : scenario_registry()) {
    CAPTURE(info.name);
    const auto it = cheap.find(info.name);
    REQUIRE(it != cheap.end());
    const Report r = run_scenario(info.name, it->second);
    CHECK(r.passed());
    CHECK(r.scenario == info.name);
    for (const auto& b : r.certified_bounds)
      CHECK(std::find(info.provenance.begin(), info.provenance.end(), b.provenance) != info.provenance.end());
  }
}
