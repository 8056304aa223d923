#include "symext/io.hpp"

#include <fstream>
#include <sstream>

namespace symext::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::parse, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object with \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing \"") + key + "\"");
  return *it;
}

const json* optional_field(const json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

template <class F>
auto guarded(const char* what, F f) {
  try {
    return f();
  } catch (const json::exception& e) {
    bad(std::string(what) + ": " + e.what());
  }
}

std::vector<Inequality> rows_from_json(const json& j, std::size_t dim) {
  if (!j.is_array()) bad("expected an array of rows");
  std::vector<Inequality> out;
  for (const auto& r : j) out.push_back(ineq_from_json(r, dim));
  return out;
}

json rows_to_json(const std::vector<Inequality>& rows) {
  json out = json::array();
  for (const auto& r : rows) out.push_back(to_json(r));
  return out;
}

std::vector<std::size_t> indices_from_json(const json& j, std::size_t limit) {
  if (!j.is_array()) bad("expected an index array");
  std::vector<std::size_t> out;
  for (const auto& x : j) {
    const auto i = x.get<long>();
    if (i < 0 || static_cast<std::size_t>(i) >= limit) bad("vertex index " + std::to_string(i) + " out of range");
    out.push_back(static_cast<std::size_t>(i));
  }
  return out;
}

json projection_to_json(const Projection& p) { return json{{"M", to_json(p.m)}, {"t", to_json(p.t)}}; }

Projection projection_from_json(const json& j) { return {mat_from_json(field(j, "M")), vec_from_json(field(j, "t"))}; }

std::shared_ptr<const Polytope> shared_polytope(const json& j) {
  return std::make_shared<const Polytope>(polytope_from_json(j));
}

}  // namespace

json to_json(const Rat& r) { return to_string(r); }

json to_json(const RatVec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

json to_json(const RatMat& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(RatVec(m.row(i).begin(), m.row(i).end())));
  return out;
}

json to_json(const Permutation& g) { return g.one_based(); }

json to_json(const PermGroup& g) {
  json gens = json::array();
  for (const auto& x : g.generators()) gens.push_back(to_json(x));
  return json{{"degree", g.degree()}, {"generators", gens}};
}

json to_json(const Inequality& q) {
  json out = to_json(q.a);
  out.push_back(to_string(q.b));
  return out;
}

json to_json(const Polytope& p) {
  json out{{"dim", p.dim()}};
  if (p.h) {
    out["ineqs"] = rows_to_json(p.h->ineqs);
    out["eqs"] = rows_to_json(p.h->eqs);
  }
  if (p.v) {
    json vs = json::array();
    for (const auto& v : p.v->vertices) vs.push_back(to_json(v));
    out["vertices"] = vs;
  }
  out["consistency"] = to_string(p.consistency);
  return out;
}

json to_json(const AffineAction& a) {
  json out{{"group", to_json(a.group())}};
  if (a.is_coordinate()) {
    json labels = json::array();
    for (const auto& l : a.labels()) {
      std::vector<int> pts;
      for (int p : l.points) pts.push_back(p + 1);
      labels.push_back(json{{"tag", l.tag}, {"points", pts}, {"unordered", l.unordered}});
    }
    out["labels"] = labels;
  } else {
    json maps = json::array();
    for (const auto& g : a.group().generators()) {
      const auto m = a.map(g);
      maps.push_back(json{{"M", to_json(m.linear_matrix())}, {"t", to_json(m.offset())}});
    }
    out["dim"] = a.dim();
    out["maps"] = maps;
  }
  return out;
}

json to_json(const ExtensionSpec& s) {
  json out{{"P", to_json(*s.p)},
           {"Q", to_json(*s.q)},
           {"proj", projection_to_json(s.proj)},
           {"group", to_json(s.action_q.group())},
           {"actionQ", to_json(s.action_q)},
           {"actionP", to_json(s.action_p)}};
  if (s.section) {
    json sec = json::object();
    const auto& pv = s.p->vertices();
    for (std::size_t i = 0; i < pv.size(); ++i) sec[vertex_key(pv[i])] = to_json((*s.section)[i]);
    out["section"] = sec;
  }
  return out;
}

json to_json(const Theorem1Certificate& c) {
  json classes = json::array();
  for (const auto& fc : c.classes)
    classes.push_back(json{{"label", fc.label}, {"subgroup", to_json(fc.subgroup)}, {"blocks", fc.blocks}});
  return json{{"P", to_json(*c.p)},
              {"action", to_json(c.action)},
              {"classes", classes},
              {"c", to_json(c.c)},
              {"face", rows_to_json(c.face)},
              {"target", c.target ? to_json(*c.target) : json(nullptr)}};
}

json to_json(const SdpCertificate& c) {
  json section = json::array(), a = json::array();
  for (const auto& m : c.section) section.push_back(to_json(m));
  for (const auto& m : c.a) a.push_back(to_json(m));
  return json{{"P", to_json(*c.p)},
              {"section", section},
              {"A", a},
              {"b", to_json(c.b)},
              {"families", c.families},
              {"c", to_json(c.c)},
              {"proj", c.proj ? projection_to_json(*c.proj) : json(nullptr)},
              {"face", rows_to_json(c.face)},
              {"target", c.target ? to_json(*c.target) : json(nullptr)}};
}

json to_json(const SuperlinearCertificate& c) {
  json conds = json::array();
  for (const auto& fc : c.conditions)
    conds.push_back(json{{"j", fc.j},
                         {"face", rows_to_json(fc.face)},
                         {"H", to_json(fc.h)},
                         {"zeta", to_json(fc.zeta)},
                         {"witness", to_json(fc.witness)}});
  return json{{"name", c.name}, {"P", to_json(*c.p)}, {"action", to_json(c.action)}, {"conditions", conds}};
}

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rat(j.get<std::string>());
    } catch (const Error& e) {
      bad(e.what());
    }
  }
  bad("expected a rational string or an integer, got " + j.dump());
}

RatVec vec_from_json(const json& j) {
  if (!j.is_array()) bad("expected an array of rationals");
  RatVec v;
  for (const auto& x : j) v.push_back(rat_from_json(x));
  return v;
}

RatMat mat_from_json(const json& j) {
  if (!j.is_array()) bad("expected a matrix (array of rows)");
  std::vector<RatVec> rows;
  for (const auto& r : j) rows.push_back(vec_from_json(r));
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows)
    if (r.size() != cols) bad("ragged matrix");
  return RatMat::from_rows(rows, cols);
}

Permutation perm_from_json(const json& j) {
  return guarded("permutation", [&] {
    const auto images = j.get<std::vector<int>>();
    try {
      return Permutation::from_one_based(images);
    } catch (const Error& e) {
      bad(e.what());
    }
  });
}

PermGroup group_from_json(const json& j) {
  return guarded("group", [&] {
    if (const json* named = optional_field(j, "named")) {
      const int n = field(j, "degree").get<int>();
      const auto name = named->get<std::string>();
      if (name == "symmetric") return symmetric(n);
      if (name == "alternating") return alternating(n);
      bad("unknown named group " + name);
    }
    const int degree = field(j, "degree").get<int>();
    std::vector<Permutation> gens;
    for (const auto& g : field(j, "generators")) {
      gens.push_back(perm_from_json(g));
      if (gens.back().degree() != degree) bad("generator degree differs from the group degree");
    }
    return PermGroup(degree, std::move(gens));
  });
}

Inequality ineq_from_json(const json& j, std::size_t dim) {
  RatVec row = vec_from_json(j);
  if (row.size() != dim + 1) bad("row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(dim + 1));
  Rat b = row.back();
  row.pop_back();
  return {std::move(row), std::move(b)};
}

Polytope polytope_from_json(const json& j) {
  return guarded("polytope", [&] {
    const auto dim = field(j, "dim").get<std::size_t>();
    Polytope p;
    const json* ineqs = optional_field(j, "ineqs");
    const json* eqs = optional_field(j, "eqs");
    if (ineqs || eqs) {
      HRep h{dim, {}, {}};
      if (ineqs) h.ineqs = rows_from_json(*ineqs, dim);
      if (eqs) h.eqs = rows_from_json(*eqs, dim);
      p.h = std::move(h);
    }
    if (const json* vs = optional_field(j, "vertices")) {
      VRep v{dim, {}};
      for (const auto& x : *vs) {
        v.vertices.push_back(vec_from_json(x));
        if (v.vertices.back().size() != dim) bad("vertex of wrong length");
      }
      p.v = std::move(v);
    }
    if (!p.h && !p.v) bad("polytope needs ineqs/eqs or vertices");
    return p;
  });
}

AffineAction action_from_json(const json& j, const PermGroup* group) {
  return guarded("action", [&] {
    const PermGroup g = optional_field(j, "group") ? group_from_json(j["group"]) : group ? *group : PermGroup();
    if (!optional_field(j, "group") && !group) bad("action has no group");
    try {
      if (const json* labels = optional_field(j, "labels")) {
        std::vector<CoordinateLabel> ls;
        for (const auto& l : *labels) {
          CoordinateLabel c;
          c.tag = l.value("tag", 0);
          for (int p : l.value("points", std::vector<int>{})) {
            if (p < 1 || p > g.degree()) bad("label point out of range");
            c.points.push_back(p - 1);
          }
          c.unordered = l.value("unordered", false);
          ls.push_back(std::move(c));
        }
        return AffineAction::coordinate(g, std::move(ls));
      }
      const auto dim = field(j, "dim").get<std::size_t>();
      std::vector<AffineMap> maps;
      for (const auto& m : field(j, "maps")) {
        const auto lin = mat_from_json(field(m, "M"));
        const auto t = vec_from_json(field(m, "t"));
        if (lin.rows() != dim || lin.cols() != dim || t.size() != dim) bad("action map of wrong shape");
        maps.emplace_back(lin, t);
      }
      return AffineAction::from_generators(g, dim, std::move(maps));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::parse) throw;
      bad(e.what());
    }
  });
}

ExtensionSpec extension_from_json(const json& j) {
  return guarded("extension", [&] {
    ExtensionSpec s;
    s.p = shared_polytope(field(j, "P"));
    s.q = shared_polytope(field(j, "Q"));
    s.proj = projection_from_json(field(j, "proj"));
    const json* g = optional_field(j, "group");
    const PermGroup group = g ? group_from_json(*g) : PermGroup();
    s.action_q = action_from_json(field(j, "actionQ"), g ? &group : nullptr);
    s.action_p = action_from_json(field(j, "actionP"), g ? &group : nullptr);
    if (const json* sec = optional_field(j, "section")) {
      SectionTable t;
      for (const auto& v : s.p->vertices()) {
        auto it = sec->find(vertex_key(v));
        if (it == sec->end()) bad("section misses vertex " + vertex_key(v));
        t.push_back(vec_from_json(*it));
      }
      s.section = std::move(t);
    }
    return s;
  });
}

Theorem1Certificate theorem1_from_json(const json& j) {
  return guarded("theorem1 certificate", [&] {
    Theorem1Certificate c;
    c.p = shared_polytope(field(j, "P"));
    c.action = action_from_json(field(j, "action"));
    const std::size_t nv = c.p->vertices().size();
    for (const auto& fc : field(j, "classes")) {
      FacetClass k{fc.value("label", std::string()), group_from_json(field(fc, "subgroup")), {}};
      for (const auto& b : field(fc, "blocks")) k.blocks.push_back(indices_from_json(b, nv));
      c.classes.push_back(std::move(k));
    }
    c.c = vec_from_json(field(j, "c"));
    if (c.c.size() != nv) bad("c has " + std::to_string(c.c.size()) + " entries for " + std::to_string(nv) + " vertices");
    if (const json* f = optional_field(j, "face")) c.face = rows_from_json(*f, c.p->dim());
    if (const json* t = optional_field(j, "target")) c.target = ineq_from_json(*t, c.p->dim());
    return c;
  });
}

SdpCertificate sdp_from_json(const json& j) {
  return guarded("sdp certificate", [&] {
    SdpCertificate c;
    c.p = shared_polytope(field(j, "P"));
    const std::size_t nv = c.p->vertices().size();
    for (const auto& m : field(j, "section")) c.section.push_back(mat_from_json(m));
    for (const auto& m : field(j, "A")) c.a.push_back(mat_from_json(m));
    c.b = vec_from_json(field(j, "b"));
    for (const auto& fam : field(j, "families")) {
      std::vector<Block> f;
      for (const auto& b : fam) f.push_back(indices_from_json(b, nv));
      c.families.push_back(std::move(f));
    }
    c.c = vec_from_json(field(j, "c"));
    if (c.section.size() != nv || c.c.size() != nv) bad("section and c must have one entry per vertex");
    if (const json* p = optional_field(j, "proj")) c.proj = projection_from_json(*p);
    if (const json* f = optional_field(j, "face")) c.face = rows_from_json(*f, c.p->dim());
    if (const json* t = optional_field(j, "target")) c.target = ineq_from_json(*t, c.p->dim());
    return c;
  });
}

SuperlinearCertificate superlinear_from_json(const json& j) {
  return guarded("superlinear certificate", [&] {
    SuperlinearCertificate c;
    c.name = j.value("name", std::string());
    c.p = shared_polytope(field(j, "P"));
    c.action = action_from_json(field(j, "action"));
    for (const auto& fc : field(j, "conditions")) {
      FaceCondition k;
      k.j = field(fc, "j").get<int>();
      k.face = rows_from_json(field(fc, "face"), c.p->dim());
      k.h = group_from_json(field(fc, "H"));
      k.zeta = perm_from_json(field(fc, "zeta"));
      k.witness = vec_from_json(field(fc, "witness"));
      c.conditions.push_back(std::move(k));
    }
    return c;
  });
}

std::string vertex_key(const RatVec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
  return out;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

}  // namespace symext::io
