#include "symext/scenarios.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "symext/linalg.hpp"

namespace symext {

using nlohmann::json;

namespace {

constexpr const char* kExtensionProvenance = "explicit symmetric extension";
constexpr const char* kLogProvenance = "log-vertex bound";
constexpr const char* kMatchingProvenance = "matching lower bound";
constexpr const char* kSuperlinearProvenance = "superlinear face-family bound";

std::string join(const std::vector<std::string>& xs, std::size_t limit = 5) {
  std::string out;
  for (std::size_t i = 0; i < xs.size() && i < limit; ++i) out += (i ? "; " : "") + xs[i];
  if (xs.size() > limit) out += "; ... (" + std::to_string(xs.size()) + " total)";
  return out;
}

std::string sizes_string(const std::vector<std::size_t>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + std::to_string(xs[i]);
  return out + "]";
}

std::string num(std::size_t x) { return std::to_string(x); }

Report start(const std::string& name, json inputs) {
  Report r;
  r.scenario = name;
  r.inputs = std::move(inputs);
  return r;
}

// ---------------------------------------------------------------- scenarios

Report an_extension_scenario(int n) {
  Report r = start("an-extension", {{"n", n}});
  const auto spec = an_extension(n);
  const auto irr = facet_filter(spec.q->hrep());
  const auto facets = irr.ineqs.size(), want = static_cast<std::size_t>(3 * n);
  r.check(facets == want ? "facets: " + num(facets) + " = 3n" : "facets: " + num(facets) + " != 3n = " + num(want),
          facets == want, "irredundant inequalities of L_n");
  r.check("variables: " + num(spec.q->dim()) + " = 2n", spec.q->dim() == static_cast<std::size_t>(2 * n));
  const auto pe = certify_projection_equality(spec);
  r.check("p(L_n) inside A_n", pe.contained, join(pe.failures));
  r.check("A_n inside p(L_n)", pe.covers);
  const auto ver = verify_symmetric_extension(spec);
  r.check("extension", ver.is_extension, join(ver.counterexamples));
  r.check("projection is equivariant", ver.is_symmetric, join(ver.counterexamples));
  const auto sc = check_section(spec, *spec.section);
  r.check("section is invariant", sc.is_section && sc.is_invariant, join(sc.failures));
  if (r.passed())
    r.certified_bounds.push_back({"xcs(A_" + std::to_string(n) + ") <=", num(facets), kExtensionProvenance});
  return r;
}

int ceil_log2(const mpz_class& v) {
  int e = 0;
  mpz_class p = 1;
  while (p < v) {
    p *= 2;
    ++e;
  }
  return e;
}

Report log_lb_scenario(int n) {
  Report r = start("log-lb", {{"n", n}});
  const auto entry = a_n_polytope(n);
  const int lb = generic_log_lb(*entry.polytope);
  mpz_class count = n;
  count <<= static_cast<mp_bitcnt_t>(n - 1);
  const int want = ceil_log2(count);
  r.check("vertices: " + num(entry.polytope->vertices().size()) + " = n 2^(n-1)", entry.polytope->vertices().size() == count);
  r.check("log bound: " + std::to_string(lb) + " = ceil(log2(n 2^(n-1)))", lb == want);
  const auto ub = facet_filter(ln_polytope(n).polytope->hrep()).ineqs.size();
  r.check("Theta(n): n-1 <= " + std::to_string(lb) + " and " + num(ub) + " <= 3n", lb >= n - 1 && ub <= static_cast<std::size_t>(3 * n),
          "upper bound is the irredundant size of L_n");
  if (r.passed()) {
    r.certified_bounds.push_back({"xc(A_" + std::to_string(n) + ") >=", std::to_string(lb), kLogProvenance});
    r.certified_bounds.push_back({"xcs(A_" + std::to_string(n) + ") <=", num(ub), kExtensionProvenance});
  }
  return r;
}

Report matching_lb_scenario(int n, int l) {
  Report r = start("matching-lb", {{"n", n}, {"l", l}});
  const auto cert = build_matching_certificate(n, l);
  const auto ex = expand_matching_cert(cert);
  r.check("sum of c = 1", ex.sum_c == 1, to_string(ex.sum_c));
  r.check("crossing sum = 0", ex.crossing_sum == 0, to_string(ex.crossing_sum));
  mpz_class classes = 0;
  for (int i = 0; i <= cert.k; ++i) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(i));
    classes += b;
  }
  r.check("classes: every V_j with |V_j| <= " + std::to_string(cert.k), ex.certificate.classes.size() == classes,
          num(ex.certificate.classes.size()) + " classes");
  std::size_t negative = 0;
  for (const auto& f : ex.failures) negative += f.direct < 0 ? 1 : 0;
  r.check("block sums nonnegative", negative == 0, num(ex.blocks_checked) + " blocks");
  r.check("closed form agrees", ex.closed_form_mismatches == 0, num(ex.closed_form_mismatches) + " mismatches");
  const auto v = verify_theorem1(ex.certificate);
  r.check("system ok", v.system_ok, join(v.failures));
  r.check("point outside P", !v.membership.inside, to_string(v.point));
  bool separator_ok = v.membership.separator.has_value();
  if (separator_ok) {
    const auto& s = *v.membership.separator;
    for (const auto& x : ex.certificate.p->vertices()) separator_ok = separator_ok && sgn(slack(s, x)) >= 0;
    separator_ok = separator_ok && sgn(slack(s, v.point)) < 0;
  }
  r.check("separator valid on P and violated at the point", separator_ok);
  r.check("refutation", v.refutation);
  if (r.passed()) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(cert.k));
    r.certified_bounds.push_back(
        {"xcs(matching_" + std::to_string(l) + "(K_" + std::to_string(n) + ")) >=", b.get_str(), kMatchingProvenance});
  }
  return r;
}

Rat eval_poly(const RatVec& coeffs, const Rat& x) {
  Rat acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Report interpolation_scenario(int k, int seed, int samples) {
  Report r = start("interpolation", {{"k", k}, {"seed", seed}, {"samples", samples}});
  std::vector<int> nodes;
  for (int i = 0; i <= k; ++i) nodes.push_back(2 * i + 1);
  const auto b = solve_interpolation(k, nodes);
  const auto identity = [&](const RatVec& f) {
    Rat s = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) s += b[i] * eval_poly(f, nodes[i]);
    return s == eval_poly(f, 0);
  };
  bool monomials = true;
  for (int d = 0; d <= k; ++d) {
    RatVec f = zeros(static_cast<std::size_t>(d + 1));
    f.back() = 1;
    monomials = monomials && identity(f);
  }
  r.check("monomials x^0 .. x^k", monomials, "b = " + to_string(b));
  std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
  std::uniform_int_distribution<long> num_dist(-50, 50), den_dist(1, 12);
  std::uniform_int_distribution<int> deg_dist(0, k);
  int ok = 0;
  for (int s = 0; s < samples; ++s) {
    RatVec f(static_cast<std::size_t>(deg_dist(rng) + 1));
    for (auto& c : f) c = make_rat(num_dist(rng), den_dist(rng));
    ok += identity(f) ? 1 : 0;
  }
  r.check("random polynomials: " + std::to_string(ok) + "/" + std::to_string(samples), ok == samples);
  return r;
}

Report superlinear_scenario(const std::string& name, ZooId id, int n) {
  Report r = start(name, {{"n", n}});
  const auto cert = corollary_certificate(id, n);
  const auto v = check_superlinear(cert);
  r.check("H_j orbits and zeta_j index condition", true, "J = [n-1], k = " + std::to_string(v.k));
  r.check("conditions met", v.conditions_met, join(v.failures));
  r.check("bound " + to_string(v.bound) + " = n(n-1)/2", v.bound == make_rat(n * (n - 1), 2));
  r.check("zeta_j all even", v.parity_warnings.empty(), join(v.parity_warnings));
  bool monotone = true;
  const auto js = cert.js();
  for (std::size_t m = 1; m < (std::size_t{1} << js.size()); ++m) {
    std::vector<int> sub;
    for (std::size_t i = 0; i < js.size(); ++i)
      if (m >> i & 1u) sub.push_back(js[i]);
    const auto sv = check_superlinear(restrict_to(cert, sub));
    monotone = monotone && sv.conditions_met && sv.bound == make_rat(n * static_cast<long>(sub.size()), 2);
  }
  r.check("every nonempty J' in J verifies with n|J'|/2", monotone);
  if (r.passed())
    r.certified_bounds.push_back(
        {"xcs(" + std::string(to_string(id)) + "(" + std::to_string(n) + ")) >=", to_string(v.bound), kSuperlinearProvenance});
  return r;
}

Report cube_obstruction_scenario(int n) {
  Report r = start("cube-obstruction", {{"n", n}});
  const auto s = cube_family_search(n);
  r.check("max feasible family size = 2", s.max_feasible_family_size == 2,
          "feasible families by |J|: " + sizes_string(s.feasible_by_size) + ", " + num(s.families_checked) + " checked");
  if (n >= 4) {
    std::vector<std::pair<int, CubeForm>> family;
    std::string desc;
    for (const auto& w : s.witnesses) {
      family.emplace_back(w.j, w.form);
      desc += (desc.empty() ? "" : ", ") + std::string("j = ") + std::to_string(w.j) + ": " + to_string(w.form);
    }
    r.check("largest family verifies", check_superlinear(cube_certificate(n, family)).conditions_met, desc);
  }
  return r;
}

Report facet_orbits_scenario(ZooId id, int n) {
  Report r = start("facet-orbits", {{"polytope", to_string(id)}, {"n", n}});
  const auto entry = build_zoo(id, n);
  AffineAction action = entry.action;
  const std::size_t an_order = n >= 2 ? factorial(n) / 2 : 1;
  if (action.group().order() != an_order) action = action.restricted_to(acting_group(n, false));
  const auto rep = facet_orbit_analysis(*entry.polytope, action);
  std::size_t total = 0;
  bool divides = true;
  for (auto s : rep.sizes) {
    total += s;
    divides = divides && an_order % s == 0;
  }
  r.check("orbit sizes " + sizes_string(rep.sizes) + " sum to " + num(rep.facets) + " facets", total == rep.facets);
  r.check("orbit sizes divide |A_n|", divides);
  r.check(rep.theorem61_applicable ? "facets < n(n-1)/2: orbit sizes in {1, n}" : "facets >= n(n-1)/2: no constraint",
          rep.consistent);
  return r;
}

AffineAction trivial_action(const PermGroup& g, std::size_t dim) {
  return AffineAction::from_generators(g, dim, std::vector<AffineMap>(g.generators().size(), AffineMap::identity(dim)));
}

RatMat seed_matrix(std::size_t d) {
  RatMat m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      m(i, j) = i == j ? static_cast<long>(d + 1 + i) : static_cast<long>((i + j + i * j) % 3) - 1;  // diagonally dominant
  return m;
}

Rat bilinear(const RatMat& b, const RatVec& x, const RatVec& y) {
  Rat s = 0;
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) s += x[i] * b(i, j) * y[j];
  return s;
}

Report averaging_scenario(int n) {
  Report r = start("averaging", {{"n", n}});
  std::vector<std::pair<std::string, ExtensionSpec>> specs{{"L_n -> A_n", an_extension(n)}};
  if (n >= 2 && n <= 5) specs.emplace_back("Birkhoff -> permutahedron", birkhoff_extension(n));
  for (const auto& [name, spec] : specs) {
    const auto avg = average_section(spec, *spec.section);
    const auto sc = check_section(spec, avg);
    r.check(name + ": averaged section is a section", sc.is_section, join(sc.failures));
    r.check(name + ": averaged section is equivariant", sc.is_invariant, join(sc.failures));
  }

  const auto& q = specs.front().second;
  const auto b = average_bilinear_form(q.action_q, seed_matrix(q.q->dim()));
  const auto& elems = q.action_q.group().elements();
  const auto& verts = q.q->vertices();
  bool form_ok = true;
  std::size_t evaluations = 0;
  for (const auto& g : elems) {
    const RatMat l = q.action_q.map(g).linear_matrix();
    for (std::size_t i = 0; i < b.rows() && form_ok; ++i)
      for (std::size_t j = 0; j < b.cols() && form_ok; ++j) {
        Rat s = 0;
        for (std::size_t a = 0; a < b.rows(); ++a)
          for (std::size_t c = 0; c < b.cols(); ++c) s += l(a, i) * b(a, c) * l(c, j);
        form_ok = s == b(i, j);
      }
  }
  if (elems.size() * verts.size() * verts.size() <= 200000) {
    std::vector<std::vector<RatVec>> moved;
    for (const auto& g : elems) {
      std::vector<RatVec> row;
      for (const auto& x : verts) row.push_back(q.action_q.apply(g, x));
      moved.push_back(std::move(row));
    }
    for (std::size_t a = 0; a < verts.size(); ++a)
      for (std::size_t c = 0; c < verts.size(); ++c) {
        const Rat base = bilinear(b, verts[a], verts[c]);
        for (const auto& row : moved) {
          form_ok = form_ok && bilinear(b, row[a], row[c]) == base;
          ++evaluations;
        }
      }
  }
  r.check("averaged bilinear form is invariant", form_ok,
          num(elems.size()) + " elements, " + num(evaluations) + " vertex-pair evaluations");

  if (n >= 2 && n <= 4) {
    const auto g = symmetric(n);
    const auto act = AffineAction::coordinate(g, conjugation_cell_labels(n));
    const auto d = static_cast<std::size_t>(n);
    RatMat a(d, d), c(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        a(i, j) = static_cast<long>(i * d + j + 1);
        c(i, j) = static_cast<long>((i + 2 * j) % 3) - 1;
      }
    const Rat f = average_frobenius(act, a, c);
    const auto moved = [&](const Permutation& h, const RatMat& m) {
      RatVec flat;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) flat.push_back(m(i, j));
      const auto img = act.apply(h, flat);
      RatMat out(d, d);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) out(i, j) = img[i * d + j];
      return out;
    };
    bool frob_ok = true;
    for (const auto& h : g.elements()) frob_ok = frob_ok && average_frobenius(act, moved(h, a), moved(h, c)) == f;
    r.check("averaged Frobenius product is invariant", frob_ok, "S_" + std::to_string(n) + " by conjugation, value " + to_string(f));
  }
  return r;
}

Report restriction_scenario(int n) {
  Report r = start("restriction", {{"n", n}});
  const auto g = symmetric(n);
  auto labels = point_labels(n);
  labels.push_back(fixed_labels(1, 1)[0]);
  const auto d = static_cast<std::size_t>(n + 1);
  ExtensionSpec spec;
  spec.q = std::make_shared<const Polytope>(from_hrep(cube_hrep(n + 1)));
  spec.p = std::make_shared<const Polytope>(from_hrep(HRep{1, {{RatVec{1}, 0}, {RatVec{-1}, -1}}, {}}));
  RatMat m(1, d);
  m(0, d - 1) = 1;
  spec.proj = {m, RatVec{0}};
  spec.action_q = AffineAction::coordinate(g, labels);
  spec.action_p = trivial_action(g, 1);
  spec.section = SectionTable{zeros(d), unit_vector(d, d - 1)};
  const auto res = fixed_point_restriction(spec, g);
  r.check("dimension " + num(res.dim_before) + " -> " + num(res.dim_after), res.dim_after <= res.dim_before);
  r.check("facets " + num(res.facets_before) + " -> " + num(res.facets_after), res.facets_after <= res.facets_before);
  r.check("restricted map is an extension", !res.empty && res.verdict.is_extension, join(res.verdict.counterexamples));
  r.check("restricted map is symmetric", !res.empty && res.verdict.is_symmetric, join(res.verdict.counterexamples));
  if (res.restricted && res.restricted->section)
    r.check("restricted section is a section", check_section(*res.restricted, *res.restricted->section).is_section);
  return r;
}

Report sdp_diagonal_scenario(int n, int l) {
  Report r = start("sdp-diagonal", {{"n", n}, {"l", l}});
  const auto cert = expand_matching_cert(build_matching_certificate(n, l)).certificate;
  const auto lp = verify_theorem1(cert);
  const auto sdp = verify_theorem1_sdp(diagonal_embedding(cert));
  r.check("system ok agrees", lp.system_ok == sdp.system_ok,
          std::string("lp ") + (lp.system_ok ? "true" : "false") + ", sdp " + (sdp.system_ok ? "true" : "false"));
  r.check("point agrees", lp.point == sdp.point);
  r.check("membership agrees", lp.membership.inside == sdp.membership.inside);
  r.check("refutation agrees", lp.refutation == sdp.refutation,
          std::string("refutation ") + (lp.refutation ? "true" : "false"));
  if (r.passed() && sdp.refutation) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>((l - 1) / 2));
    r.certified_bounds.push_back(
        {"xcs(matching_" + std::to_string(l) + "(K_" + std::to_string(n) + ")) >=", b.get_str(), kMatchingProvenance});
  }
  return r;
}

// ---------------------------------------------------------------- registry

struct Entry {
  ScenarioInfo info;
  std::function<Report(const json&)> run;
};

int int_param(const json& p, const std::string& key) {
  const auto& v = p.at(key);
  if (v.is_number_integer()) return v.get<int>();
  if (v.is_string()) {
    try {
      std::size_t pos = 0;
      const int x = std::stoi(v.get<std::string>(), &pos);
      if (pos == v.get<std::string>().size()) return x;
    } catch (const std::exception&) {
    }
  }
  throw Error(ErrorKind::invalid_argument, "parameter " + key + " must be an integer");
}

std::string string_param(const json& p, const std::string& key) {
  const auto& v = p.at(key);
  return v.is_string() ? v.get<std::string>() : v.dump();
}

ZooId zoo_param(const json& p, const std::string& key) {
  const auto name = string_param(p, key);
  const auto id = parse_zoo_id(name);
  if (!id) throw Error(ErrorKind::invalid_argument, "unknown polytope family " + name);
  return *id;
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all = [] {
    std::vector<Entry> e;
    e.push_back({{"an-extension", {"n=4"}, "L_n is a 3n-facet symmetric extension of A_n", {kExtensionProvenance}},
                 [](const json& p) { return an_extension_scenario(int_param(p, "n")); }});
    e.push_back({{"log-lb", {"n=4"}, "generic log-vertex lower bound for A_n with the L_n upper bound", {kLogProvenance, kExtensionProvenance}},
                 [](const json& p) { return log_lb_scenario(int_param(p, "n")); }});
    e.push_back({{"matching-lb", {"n=10", "l=3"}, "matching certificate: expansion, verification and refutation",
                  {kMatchingProvenance}},
                 [](const json& p) { return matching_lb_scenario(int_param(p, "n"), int_param(p, "l")); }});
    e.push_back({{"interpolation", {"k=3", "seed=1", "samples=20"}, "sum b_i f(i) = f(0) for deg f <= k", {}},
                 [](const json& p) {
                   return interpolation_scenario(int_param(p, "k"), int_param(p, "seed"), int_param(p, "samples"));
                 }});
    const std::pair<const char*, ZooId> superlinear[] = {{"perm-lb", ZooId::permutahedron},
                                                         {"card-lb", ZooId::cardinality},
                                                         {"stp-lb", ZooId::spanning_tree},
                                                         {"birkhoff-lb", ZooId::birkhoff}};
    for (const auto& [name, id] : superlinear) {
      const std::string nm = name;
      const ZooId zid = id;
      e.push_back({{nm, {"n=5"}, std::string("face-family bound n(n-1)/2 for ") + to_string(zid), {kSuperlinearProvenance}},
                   [nm, zid](const json& p) { return superlinear_scenario(nm, zid, int_param(p, "n")); }});
    }
    e.push_back({{"cube-obstruction", {"n=4"}, "cube face families have at most two members", {}},
                 [](const json& p) { return cube_obstruction_scenario(int_param(p, "n")); }});
    e.push_back({{"facet-orbits", {"polytope=cube", "n=6"}, "facet orbit sizes under A_n", {}},
                 [](const json& p) { return facet_orbits_scenario(zoo_param(p, "polytope"), int_param(p, "n")); }});
    e.push_back({{"averaging", {"n=3"}, "averaged sections, bilinear forms and Frobenius products are invariant", {}},
                 [](const json& p) { return averaging_scenario(int_param(p, "n")); }});
    e.push_back({{"restriction", {"n=3"}, "fixed-point restriction of [0,1]^(n+1) onto [0,1]", {}},
                 [](const json& p) { return restriction_scenario(int_param(p, "n")); }});
    e.push_back({{"sdp-diagonal", {"n=8", "l=3"}, "SDP verdict on the diagonal embedding equals the LP verdict",
                  {kMatchingProvenance}},
                 [](const json& p) { return sdp_diagonal_scenario(int_param(p, "n"), int_param(p, "l")); }});
    return e;
  }();
  return all;
}

}  // namespace

const std::vector<ScenarioInfo>& scenario_registry() {
  static const std::vector<ScenarioInfo> infos = [] {
    std::vector<ScenarioInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

Report run_scenario(const std::string& name, const json& params) {
  const auto& all = entries();
  auto it = std::find_if(all.begin(), all.end(), [&](const Entry& e) { return e.info.name == name; });
  if (it == all.end()) throw Error(ErrorKind::invalid_argument, "unknown scenario " + name);
  if (!params.is_null() && !params.is_object()) throw Error(ErrorKind::invalid_argument, "scenario parameters must be an object");
  json full = json::object();
  for (const auto& p : it->info.params) {
    const auto eq = p.find('=');
    const std::string key = p.substr(0, eq), def = p.substr(eq + 1);
    full[key] = def;
  }
  if (params.is_object())
    for (const auto& [k, v] : params.items()) {
      if (!full.contains(k)) throw Error(ErrorKind::invalid_argument, "scenario " + name + " has no parameter " + k);
      full[k] = v;
    }
  Report r = it->run(full);
  r.scenario = name;
  return r;
}

// ---------------------------------------------------------------- verbs

Report zoo_build_report(ZooId id, int n, int l) {
  Report r = start("zoo build", {{"id", to_string(id)}, {"n", n}, {"l", l}});
  const auto e = build_zoo(id, n, l);
  const auto inv = is_invariant(*e.polytope, e.action);
  r.check("polytope is invariant under the action", inv.invariant);
  r.check(std::string("consistency: ") + to_string(e.polytope->consistency), true);
  for (const auto& b : e.metadata) r.certified_bounds.push_back({b.quantity, b.value, b.provenance});
  r.artifact = json{{"id", to_string(id)}, {"n", n}, {"l", l}, {"polytope", io::to_json(*e.polytope)}, {"action", io::to_json(e.action)}};
  return r;
}

Report polytope_report(const std::string& verb, const json& in) {
  Report r = start("polytope " + verb, json::object());
  Polytope p = io::polytope_from_json(in);
  if (verb == "certify") {
    const Polytope c = certify(p);
    r.check("H and V describe the same polytope", c.consistency == Consistency::certified, to_string(c.consistency));
    r.artifact = io::to_json(c);
  } else if (verb == "facets") {
    const HRep h = facet_filter(p.hrep());
    r.check("facets: " + num(h.ineqs.size()), true, num(h.eqs.size()) + " equalities");
    Polytope out;
    out.h = h;
    r.artifact = io::to_json(out);
  } else if (verb == "vertices") {
    const VRep v = enumerate_vertices(p.hrep());
    r.check("vertices: " + num(v.vertices.size()), true);
    Polytope out;
    out.v = v;
    r.artifact = io::to_json(out);
  } else {
    throw Error(ErrorKind::invalid_argument, "unknown polytope verb " + verb);
  }
  return r;
}

Report extension_verify_report(const json& in) {
  Report r = start("extension verify", json::object());
  const auto spec = io::extension_from_json(in);
  const auto v = verify_symmetric_extension(spec);
  r.check("extension", v.is_extension, join(v.counterexamples));
  r.check("projection is equivariant", v.is_symmetric, join(v.counterexamples));
  if (spec.section) {
    const auto sc = check_section(spec, *spec.section);
    r.check("section", sc.is_section, join(sc.failures));
    r.check("section is invariant", sc.is_invariant, join(sc.failures));
  }
  return r;
}

Report extension_project_check_report(const json& in) {
  Report r = start("extension project-check", json::object());
  const auto spec = io::extension_from_json(in);
  const auto pe = certify_projection_equality(spec);
  r.check("p(Q) inside P", pe.contained, join(pe.failures));
  r.check("P inside p(Q)", pe.covers, join(pe.failures));
  return r;
}

Report theorem1_report(const json& in) {
  Report r = start("certify theorem1", json::object());
  const auto v = verify_theorem1(io::theorem1_from_json(in));
  r.check("system ok", v.system_ok, join(v.failures));
  r.check("coefficient sum = 1", v.coefficient_sum == 1, to_string(v.coefficient_sum));
  r.check("point outside P", !v.membership.inside, to_string(v.point));
  r.check("refutation", v.refutation, v.membership.separator ? "separator " + io::to_json(*v.membership.separator).dump() : "");
  return r;
}

Report sdp_report(const json& in) {
  Report r = start("certify sdp", json::object());
  const auto v = verify_theorem1_sdp(io::sdp_from_json(in));
  r.check("system ok", v.system_ok, join(v.failures));
  r.check("point outside P", !v.membership.inside, to_string(v.point));
  r.check("refutation", v.refutation);
  return r;
}

Report superlinear_check_report(const json& in) {
  const auto cert = io::superlinear_from_json(in);
  Report r = start("superlinear check", {{"name", cert.name}});
  const auto v = check_superlinear(cert);
  r.check("conditions met", v.conditions_met, join(v.failures));
  if (!v.parity_warnings.empty()) r.inputs["parity_warnings"] = v.parity_warnings;
  if (v.conditions_met) r.certified_bounds.push_back({"xcs(" + cert.name + ") >=", to_string(v.bound), kSuperlinearProvenance});
  return r;
}

}  // namespace symext
