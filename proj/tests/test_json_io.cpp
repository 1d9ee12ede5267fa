#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "ultraposet/json_io.hpp"

using namespace upo;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  std::filesystem::path dir = std::filesystem::temp_directory_path() / "ultraposet-tests";
  std::filesystem::create_directories(dir);
  std::filesystem::path file = dir / name;
  std::ofstream out(file);
  out << text;
  return file;
}

}  // namespace

TEST_CASE("poset json round trip") {
  Poset p = parse_poset_json(R"({"n": 3, "leq": [[0,1],[1,2]]})");
  CHECK(p.size() == 3);
  CHECK(p.leq(0, 2));

  Poset again = parse_poset_json(poset_to_json(p));
  CHECK(again == p);

  CHECK_THROWS_AS(parse_poset_json("{"), Error);
  try {
    parse_poset_json("{\"n\": 2, \"leq\": [[0]]}");
  } catch (const Error& e) {
    CHECK(e.code() == errc::parse);
  }
}

TEST_CASE("lattice and hom files load") {
  auto chain = write_temp("chain3.json", R"({"n": 3, "leq": [[0,1],[1,2]]})");
  DistLattice d = load_lattice(chain);
  CHECK(d.size() == 3);

  write_temp("two.json", R"({"n": 2, "leq": [[0,1]]})");
  auto hom = write_temp("hom.json",
                        R"({"dom": "chain3.json", "cod": "two.json", "values": [0, 0, 1]})");
  MonotoneMap map = load_monotone_map(hom);
  CHECK(map.values == std::vector<int>{0, 0, 1});

  auto bad = write_temp("bad_hom.json",
                        R"({"dom": "chain3.json", "cod": "two.json", "values": [1, 0, 1]})");
  CHECK_THROWS_AS(load_monotone_map(bad), Error);
}

TEST_CASE("ultrafilter json both spellings") {
  Ultrafilter principal_form = parse_ultrafilter_json(R"({"m": 3, "principal": 1})");
  CHECK(principal_form.witness() == 1);

  Ultrafilter sets_form =
      parse_ultrafilter_json(R"({"m": 2, "sets": [[0], [0, 1]]})");
  CHECK(sets_form.witness() == 0);

  CHECK_THROWS_AS(parse_ultrafilter_json(R"({"m": 2, "sets": [[0]]})"), Error);

  Ultrafilter reparsed = parse_ultrafilter_json(ultrafilter_to_json(sets_form));
  CHECK(reparsed == sets_form);
}

TEST_CASE("ultraposet json round trips every construction") {
  std::vector<std::string> texts = {
      R"({"construction": "discrete", "data": {"n": 2}})",
      R"({"construction": "canonical", "data": {"lattice": {"n": 3, "leq": [[0,1],[1,2]]}}})",
      R"({"construction": "mod", "data": {"lattice": {"n": 3, "leq": [[0,1],[1,2]]}}})",
      R"({"construction": "presheaf", "data": {"base": {"n": 2, "leq": [[0,1]]},
          "target": {"construction": "canonical",
                     "data": {"lattice": {"n": 2, "leq": [[0,1]]}}}}})",
      R"({"construction": "product", "data": {"factors": [
          {"construction": "discrete", "data": {"n": 2}},
          {"construction": "canonical", "data": {"lattice": {"n": 2, "leq": [[0,1]]}}}]}})",
      R"({"construction": "coproduct", "data": {
          "left": {"construction": "discrete", "data": {"n": 1}},
          "right": {"construction": "discrete", "data": {"n": 1}}}})",
  };
  for (const std::string& text : texts) {
    Ultraposet u = parse_ultraposet_json(text);
    Ultraposet again = parse_ultraposet_json(ultraposet_to_json(u));
    CHECK(again.carrier == u.carrier);
    CHECK(again.structure->kind() == u.structure->kind());
    CHECK(check_axioms(u, CheckOptions{ProbeBudget{2, 2, 2}}).pass());
  }
}

TEST_CASE("report serialization is deterministic and can include timing") {
  DualityReport report;
  report.entries.push_back(ReportEntry{"demo/pass", true, "ok", 12, 34});
  report.entries.push_back(ReportEntry{"demo/fail", false, "bad", 1, 2});
  std::string a = report_to_json(report, "axioms");
  std::string b = report_to_json(report, "axioms");
  CHECK(a == b);
  CHECK(a.find("millis") == std::string::npos);
  CHECK(a.find("first_failure") != std::string::npos);
  CHECK(a.find("demo/fail") != std::string::npos);
  std::string timed = report_to_json(report, "axioms", true);
  CHECK(timed.find("millis") != std::string::npos);
}

TEST_CASE("dot export renders cover relations with stable labels") {
  Poset chain3 = make_chain(3);
  std::string dot = poset_to_dot(chain3, "lattice");
  CHECK(dot.find("e0 -> e1") != std::string::npos);
  CHECK(dot.find("e1 -> e2") != std::string::npos);
  CHECK(dot.find("e0 -> e2") == std::string::npos);  // transitive edge omitted

  SpectrumResult sp = mod_spectrum(validate_dist_lattice(make_chain(3)));
  std::string spectrum_dot = spectrum_to_dot(sp);
  CHECK(spectrum_dot.find("{0}") != std::string::npos);
  CHECK(spectrum_dot.find("{0,1}") != std::string::npos);
  CHECK(spectrum_dot.find("e1 -> e0") != std::string::npos);  // {0,a} below {0}

  std::string clc_dot = clc_to_dot(sp.spectrum);
  CHECK(clc_dot.find("digraph clc") != std::string::npos);
}

TEST_CASE("spectrum and reconstruction json") {
  DistLattice chain3 = validate_dist_lattice(make_chain(3));
  SpectrumResult sp = mod_spectrum(chain3);
  std::string sp_json = spectrum_to_json(sp);
  CHECK(sp_json.find("\"primes\"") != std::string::npos);

  CounitResult c = counit(chain3);
  ReconstructIdlResult rec = reconstruct_idl(chain3);
  std::string rec_json = reconstruction_to_json(c, rec);
  CHECK(rec_json.find("\"counit\"") != std::string::npos);
  CHECK(rec_json.find("\"idl\"") != std::string::npos);
}
