// symext <noun> <verb> [flags]
//
// Exit codes: 0 every check passed, 1 a check failed, 2 usage or malformed input.

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "symext/scenarios.hpp"

namespace {

using symext::Error;
using symext::ErrorKind;
using symext::Report;
using nlohmann::json;

struct Globals {
  std::string out;
  std::string format = "json";
  bool single_thread = false;
  std::optional<int> cap_override;
};

int usage_error(const std::string& msg) {
  std::cerr << "symext: " << msg << "\n";
  return 2;
}

symext::ZooId zoo_id(const std::string& name) {
  const auto id = symext::parse_zoo_id(name);
  if (!id) throw Error(ErrorKind::invalid_argument, "unknown polytope family " + name);
  return *id;
}

int finish(const Report& r, const Globals& g) {
  const std::string bytes = symext::emit(r, g.format == "text" ? symext::Format::text : symext::Format::json);
  if (g.out.empty()) {
    std::cout << bytes;
  } else {
    std::ofstream f(g.out, std::ios::binary);
    if (!f) return usage_error("cannot write " + g.out);
    f << bytes;
  }
  return r.passed() ? 0 : 1;
}

bool is_input_error(ErrorKind k) {
  return k == ErrorKind::parse || k == ErrorKind::invalid_argument || k == ErrorKind::dimension_mismatch ||
         k == ErrorKind::too_large;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric extended formulations: exact constructions and certificate checks"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--out", g.out, "Write the report to FILE instead of stdout");
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--single-thread", g.single_thread, "Sequential execution (always the case here)");
  app.add_option("--cap-override", g.cap_override, "Raise the family and enumeration caps to N");

  std::function<Report()> action;
  std::string in_file, polytope_name, scenario_name;
  int n = 0, l = 0;

  auto in_json = [&] { return symext::io::read_file(in_file); };

  // zoo
  auto* zoo = app.add_subcommand("zoo", "Polytope families")->require_subcommand(1)->fallthrough();
  auto* zoo_build = zoo->add_subcommand("build", "Build a family member");
  zoo_build->add_option("id", polytope_name, "Family id")->required();
  zoo_build->add_option("--n", n)->required();
  zoo_build->add_option("--l", l);
  zoo_build->callback([&] { action = [&] { return symext::zoo_build_report(zoo_id(polytope_name), n, l); }; });

  // polytope
  auto* poly = app.add_subcommand("polytope", "Polytope in JSON form")->require_subcommand(1)->fallthrough();
  for (const char* verb : {"certify", "facets", "vertices"}) {
    auto* sub = poly->add_subcommand(verb);
    sub->add_option("--in", in_file)->required();
    const std::string v = verb;
    sub->callback([&, v] { action = [&, v] { return symext::polytope_report(v, in_json()); }; });
  }

  // extension
  auto* ext = app.add_subcommand("extension", "Symmetric extensions")->require_subcommand(1)->fallthrough();
  auto* ext_verify = ext->add_subcommand("verify");
  ext_verify->add_option("--in", in_file)->required();
  ext_verify->callback([&] { action = [&] { return symext::extension_verify_report(in_json()); }; });
  auto* ext_an = ext->add_subcommand("an", "The L_n extension of A_n");
  ext_an->add_option("--n", n)->required();
  ext_an->callback([&] { action = [&] { return symext::run_scenario("an-extension", {{"n", n}}); }; });
  auto* ext_proj = ext->add_subcommand("project-check");
  ext_proj->add_option("--in", in_file)->required();
  ext_proj->callback([&] { action = [&] { return symext::extension_project_check_report(in_json()); }; });

  // certify
  auto* cert = app.add_subcommand("certify", "Lower-bound certificates")->require_subcommand(1)->fallthrough();
  auto* cert_t1 = cert->add_subcommand("theorem1");
  cert_t1->add_option("--in", in_file)->required();
  cert_t1->callback([&] { action = [&] { return symext::theorem1_report(in_json()); }; });
  auto* cert_match = cert->add_subcommand("matching");
  cert_match->add_option("--n", n)->required();
  cert_match->add_option("--l", l)->required();
  cert_match->callback([&] { action = [&] { return symext::run_scenario("matching-lb", {{"n", n}, {"l", l}}); }; });
  auto* cert_sdp = cert->add_subcommand("sdp");
  cert_sdp->add_option("--in", in_file)->required();
  cert_sdp->callback([&] { action = [&] { return symext::sdp_report(in_json()); }; });

  // superlinear
  auto* sl = app.add_subcommand("superlinear", "Quadratic face-family bounds")->require_subcommand(1)->fallthrough();
  auto* sl_check = sl->add_subcommand("check");
  sl_check->add_option("--in", in_file)->required();
  sl_check->callback([&] { action = [&] { return symext::superlinear_check_report(in_json()); }; });
  auto* sl_demo = sl->add_subcommand("demo");
  sl_demo->add_option("--polytope", polytope_name)->required()->check(CLI::IsMember({"perm", "card", "stp", "birkhoff"}));
  sl_demo->add_option("--n", n)->required();
  sl_demo->callback([&] {
    action = [&] { return symext::run_scenario(polytope_name + "-lb", {{"n", n}}); };
  });
  auto* sl_cube = sl->add_subcommand("cube-search");
  sl_cube->add_option("--n", n)->required();
  sl_cube->callback([&] { action = [&] { return symext::run_scenario("cube-obstruction", {{"n", n}}); }; });

  // scenario
  auto* sc = app.add_subcommand("scenario", "Named reproduction pipelines")->fallthrough();
  sc->add_option("name", scenario_name, "Scenario name, or 'list'")->required();
  std::map<std::string, std::string> params;
  for (const char* p : {"n", "l", "k", "seed", "samples", "polytope"}) {
    const std::string key = p;
    sc->add_option_function<std::string>("--" + key, [&params, key](const std::string& v) { params[key] = v; });
  }
  bool listing = false;
  sc->callback([&] {
    if (scenario_name == "list") {
      listing = true;
      return;
    }
    action = [&] {
      json p = json::object();
      for (const auto& [k, v] : params) p[k] = v;
      return symext::run_scenario(scenario_name, p);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (listing) {
    for (const auto& s : symext::scenario_registry()) {
      std::cout << s.name;
      for (const auto& p : s.params) std::cout << " --" << p;
      std::cout << "  " << s.summary << "\n";
    }
    return 0;
  }
  if (g.cap_override) {
    if (*g.cap_override < 1) return usage_error("--cap-override must be positive");
    symext::set_zoo_cap_override(*g.cap_override);
  }

  try {
    return finish(action(), g);
  } catch (const Error& e) {
    std::cerr << "symext: " << e.what() << "\n";
    return is_input_error(e.kind()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "symext: " << e.what() << "\n";
    return 1;
  }
}
