// spectrum: command-line front end for finite poset/lattice duality checks.
//
// Subcommands:
//   validate    check a poset, lattice, hom, ultrafilter or ultraposet file
//   spectrum    print Mod(D) with its prime table as JSON
//   reconstruct print counit and ideal-lattice reconstruction witnesses
//   verify      run a theorem suite over the generated corpus
//   export-dot  print a Hasse diagram in DOT form
//
// Exit codes: 0 success, 1 validation/theorem failure, 2 I/O or parse error,
// 3 enumeration budget exceeded.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ultraposet/json_io.hpp"

namespace {

using nlohmann::json;

int exit_code_for(const upo::Error& e) {
  switch (e.code()) {
    case upo::errc::parse:
    case upo::errc::io:
      return 2;
    case upo::errc::budget_exceeded:
      return 3;
    default:
      return 1;
  }
}

struct GlobalFlags {
  int max_size = 5;
  int max_s = 3;
  int max_t = 2;
  int max_w = 3;
  long long map_cap = 10'000'000;
  std::string format = "json";
  bool timings = false;
  int seed = 0;  // reserved; all algorithms are deterministic
};

upo::VerifyOptions verify_options(const GlobalFlags& flags) {
  upo::VerifyOptions opts;
  opts.max_poset_size = flags.max_size;
  opts.probe = upo::ProbeBudget{flags.max_s, flags.max_t, flags.max_w};
  opts.map_budget = flags.map_cap;
  return opts;
}

json error_json(const upo::Error& e) {
  json j;
  j["ok"] = false;
  j["error"] = e.what();
  return j;
}

int run_validate(const std::string& path, bool as_lattice, const GlobalFlags& flags) {
  json input = json::parse(upo::read_text_file(path), nullptr, false);
  if (input.is_discarded()) upo::fail(upo::errc::parse, "malformed JSON in " + path);
  json report;
  report["file"] = path;
  if (input.contains("construction")) {
    upo::Ultraposet u = upo::load_ultraposet(path, flags.map_cap);
    upo::AxiomReport axioms = upo::check_axioms(
        u, upo::CheckOptions{upo::ProbeBudget{flags.max_s, flags.max_t, flags.max_w}});
    report["kind"] = "ultraposet";
    report["carrier"] = u.size();
    report["axioms"] = json::parse(upo::axiom_report_to_json(axioms));
    report["ok"] = axioms.pass();
    std::cout << report.dump(2) << "\n";
    return axioms.pass() ? 0 : 1;
  }
  if (input.contains("values")) {
    upo::MonotoneMap map = upo::load_monotone_map(path);
    report["kind"] = "hom";
    report["dom"] = map.dom.size();
    report["cod"] = map.cod.size();
    report["ok"] = true;
    std::cout << report.dump(2) << "\n";
    return 0;
  }
  if (input.contains("m")) {
    upo::Ultrafilter mu = upo::parse_ultrafilter_json(input.dump());
    report["kind"] = "ultrafilter";
    report["principal"] = mu.witness();
    report["ok"] = true;
    std::cout << report.dump(2) << "\n";
    return 0;
  }
  upo::Poset poset = upo::load_poset(path);
  report["kind"] = as_lattice ? "lattice" : "poset";
  report["n"] = poset.size();
  if (as_lattice) {
    upo::DistLattice d = upo::validate_dist_lattice(poset);
    report["bot"] = d.bot;
    report["top"] = d.top;
  }
  report["ok"] = true;
  std::cout << report.dump(2) << "\n";
  return 0;
}

int run_spectrum(const std::string& path, const GlobalFlags& flags) {
  upo::DistLattice d = upo::load_lattice(path);
  upo::SpectrumResult sp = upo::mod_spectrum(d);
  if (flags.format == "dot") {
    std::cout << upo::spectrum_to_dot(sp);
  } else if (flags.format == "json") {
    std::cout << upo::spectrum_to_json(sp) << "\n";
  } else {
    upo::fail(upo::errc::parse, "unknown format '" + flags.format + "'");
  }
  return 0;
}

int run_reconstruct(const std::string& path) {
  upo::DistLattice d = upo::load_lattice(path);
  upo::CounitResult c = upo::counit(d);
  upo::ReconstructIdlResult rec = upo::reconstruct_idl(d);
  std::cout << upo::reconstruction_to_json(c, rec) << "\n";
  return 0;
}

int run_verify(const std::string& suite_name, const GlobalFlags& flags) {
  upo::Suite suite = upo::suite_from_name(suite_name);
  upo::DualityReport report = upo::run_suite(suite, verify_options(flags));
  std::cout << upo::report_to_json(report, suite_name, flags.timings) << "\n";
  if (report.all_pass()) return 0;
  // budget refusals exit 3, but only when no genuine theorem failure exists
  bool any_theorem_failure = false;
  for (const upo::ReportEntry& e : report.entries) {
    if (!e.pass && e.witness.rfind("BudgetExceeded", 0) != 0) any_theorem_failure = true;
  }
  return any_theorem_failure ? 1 : 3;
}

int run_export_dot(const std::string& path, const std::string& what) {
  if (what == "lattice") {
    upo::DistLattice d = upo::load_lattice(path);
    std::cout << upo::poset_to_dot(d.poset, "lattice");
    return 0;
  }
  if (what == "spectrum") {
    upo::DistLattice d = upo::load_lattice(path);
    std::cout << upo::spectrum_to_dot(upo::mod_spectrum(d));
    return 0;
  }
  if (what == "clc") {
    upo::DistLattice d = upo::load_lattice(path);
    std::cout << upo::clc_to_dot(upo::mod_spectrum(d).spectrum);
    return 0;
  }
  upo::fail(upo::errc::parse, "unknown export target '" + what + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite duality toolkit: posets, distributive lattices, spectra"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalFlags flags;
  app.add_option("--max-size", flags.max_size, "corpus poset size bound (0..6)")
      ->check(CLI::Range(0, 6));
  app.add_option("--maxS", flags.max_s, "probe family size")->check(CLI::PositiveNumber);
  app.add_option("--maxT", flags.max_t, "probe index-family size")->check(CLI::PositiveNumber);
  app.add_option("--maxW", flags.max_w, "probe injection size")->check(CLI::PositiveNumber);
  app.add_option("--map-cap", flags.map_cap, "map enumeration candidate cap")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", flags.format, "output format (json|dot, where applicable)");
  app.add_flag("--timings", flags.timings, "include wall-clock fields in reports");
  app.add_option("--seed", flags.seed, "reserved; all algorithms are deterministic");

  std::string path;
  bool as_lattice = false;
  CLI::App* validate = app.add_subcommand("validate", "validate an input file");
  validate->add_option("file", path)->required();
  validate->add_flag("--as-lattice", as_lattice, "also validate lattice structure");

  std::string spectrum_path;
  CLI::App* spectrum = app.add_subcommand("spectrum", "print Mod(D) and its prime table");
  spectrum->add_option("file", spectrum_path)->required();

  std::string reconstruct_path;
  CLI::App* reconstruct =
      app.add_subcommand("reconstruct", "print counit and ideal-lattice witnesses");
  reconstruct->add_option("file", reconstruct_path)->required();

  std::string suite = "all";
  CLI::App* verify = app.add_subcommand(
      "verify", "run a theorem suite (axioms also covers the ultrafilter monad laws; "
                "galois also covers the separation lemmas)");
  verify->add_option("--suite", suite, "axioms|los|galois|duality|zero-dim|all");

  std::string dot_path;
  std::string what = "lattice";
  CLI::App* export_dot = app.add_subcommand("export-dot", "print a Hasse diagram in DOT form");
  export_dot->add_option("file", dot_path)->required();
  export_dot->add_option("--what", what, "lattice|spectrum|clc");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return run_validate(path, as_lattice, flags);
    if (spectrum->parsed()) return run_spectrum(spectrum_path, flags);
    if (reconstruct->parsed()) return run_reconstruct(reconstruct_path);
    if (verify->parsed()) return run_verify(suite, flags);
    if (export_dot->parsed()) return run_export_dot(dot_path, what);
  } catch (const upo::Error& e) {
    std::cout << error_json(e).dump(2) << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    json j;
    j["ok"] = false;
    j["error"] = e.what();
    std::cout << j.dump(2) << "\n";
    return 2;
  }
  return 0;
}
