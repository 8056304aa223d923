#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symext/certificates.hpp"
#include "symext/scenarios.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

// Big integers and rationals cross the boundary as decimal strings.
py::object py_int(const mpz_class& z) { return py::int_(py::str(z.get_str())); }

py::object py_fraction(const symext::Rat& q) {
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::str(q.get_str()));
}

py::object loads(const json& j) {
  py::object json_loads = py::module_::import("json").attr("loads");
  return json_loads(py::str(j.dump()));
}

json dumps(const py::object& o) {
  py::object json_dumps = py::module_::import("json").attr("dumps");
  return json::parse(py::cast<std::string>(json_dumps(o)));
}

symext::Report verify(const std::string& kind, const json& in) {
  if (kind == "extension") return symext::extension_verify_report(in);
  if (kind == "project-check") return symext::extension_project_check_report(in);
  if (kind == "theorem1") return symext::theorem1_report(in);
  if (kind == "sdp") return symext::sdp_report(in);
  if (kind == "superlinear") return symext::superlinear_check_report(in);
  if (kind == "certify" || kind == "facets" || kind == "vertices") return symext::polytope_report(kind, in);
  throw symext::Error(symext::ErrorKind::invalid_argument, "unknown verification kind " + kind);
}

}  // namespace

PYBIND11_MODULE(_symext, m) {
  m.doc() = "Exact symmetric extension constructions and lower-bound certificates";

  static py::handle error = py::exception<symext::Error>(m, "SymextError").release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const symext::Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error)(e.what());
      exc.attr("kind") = symext::to_string(e.kind());
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  m.def("scenarios", [] {
    py::list out;
    for (const auto& s : symext::scenario_registry()) {
      py::dict d;
      d["name"] = s.name;
      d["params"] = s.params;
      d["summary"] = s.summary;
      d["provenance"] = s.provenance;
      out.append(d);
    }
    return out;
  });

  m.def(
      "run_scenario",
      [](const std::string& name, const py::dict& params) { return loads(symext::to_json(symext::run_scenario(name, dumps(params)))); },
      py::arg("name"), py::arg("params") = py::dict());

  m.def(
      "emit",
      [](const std::string& name, const py::dict& params, const std::string& format) {
        return symext::emit(symext::run_scenario(name, dumps(params)),
                            format == "text" ? symext::Format::text : symext::Format::json);
      },
      py::arg("name"), py::arg("params") = py::dict(), py::arg("format") = "json");

  m.def(
      "zoo_build",
      [](const std::string& id, int n, int l) {
        const auto z = symext::parse_zoo_id(id);
        if (!z) throw symext::Error(symext::ErrorKind::invalid_argument, "unknown polytope family " + id);
        return loads(symext::to_json(symext::zoo_build_report(*z, n, l)));
      },
      py::arg("id"), py::arg("n"), py::arg("l") = 0);

  m.def(
      "verify", [](const std::string& kind, const py::object& doc) { return loads(symext::to_json(verify(kind, dumps(doc)))); },
      py::arg("kind"), py::arg("document"));

  m.def("matching_counts", [](int ls, int lu, int i) { return py_int(symext::matching_counts(ls, lu, i)); });
  m.def("matching_counts_restricted", [](int ls, int lu, int as, int au, int a, int i) {
    return py_int(symext::matching_counts_restricted(ls, lu, as, au, a, i));
  });
  m.def("solve_interpolation", [](int k, const std::vector<int>& nodes) {
    py::list out;
    for (const auto& b : symext::solve_interpolation(k, nodes)) out.append(py_fraction(b));
    return out;
  });
}
