#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace std::string_literals;

namespace {

struct ToolRun {
  int exit_code = -1;
  std::string output;
};

ToolRun run_tool(const std::string& args) {
  std::filesystem::path dir = std::filesystem::temp_directory_path() / "ultraposet-cli";
  std::filesystem::create_directories(dir);
  std::filesystem::path out = dir / "out.txt";
  std::string command = std::string(SPECTRUM_BIN_PATH) + " " + args + " > " + out.string() +
                        " 2>&1";
  int status = std::system(command.c_str());
  ToolRun result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  result.output = buffer.str();
  return result;
}

std::filesystem::path data_file(const std::string& name) {
  return std::filesystem::path(PROJECT_DATA_DIR) / name;
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  std::filesystem::path dir = std::filesystem::temp_directory_path() / "ultraposet-cli";
  std::filesystem::create_directories(dir);
  std::filesystem::path file = dir / name;
  std::ofstream out(file);
  out << text;
  return file;
}

}  // namespace

TEST_CASE("validate: exit 0 on a valid lattice file") {
  ToolRun r = run_tool("validate " + data_file("chain3.json").string() + " --as-lattice");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"ok\": true") != std::string::npos);
}

TEST_CASE("validate: exit 1 with a witness on M3 as a lattice") {
  ToolRun r = run_tool("validate " + data_file("m3.json").string() + " --as-lattice");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("NotDistributive") != std::string::npos);
  CHECK(r.output.find("witness") != std::string::npos);
}

TEST_CASE("validate: exit 2 on malformed JSON") {
  auto bad = write_temp("broken.json", "{ not json");
  ToolRun r = run_tool("validate " + bad.string());
  CHECK(r.exit_code == 2);
}

TEST_CASE("validate: exit 2 on a missing file") {
  ToolRun r = run_tool("validate /nonexistent/nope.json");
  CHECK(r.exit_code == 2);
}

TEST_CASE("validate: exit 2 on type-mangled JSON fields") {
  auto fractional = write_temp("fractional.json", R"({"n": 2.5, "leq": []})");
  CHECK(run_tool("validate " + fractional.string()).exit_code == 2);
  auto stringy = write_temp("stringy.json",
                            R"({"dom": "chain3.json", "cod": "two.json", "values": ["x"]})");
  CHECK(run_tool("validate " + stringy.string()).exit_code == 2);
}

TEST_CASE("validate: hom, ultrafilter and ultraposet files are recognized") {
  CHECK(run_tool("validate " + data_file("hom_chain3_to_two.json").string()).exit_code == 0);
  CHECK(run_tool("validate " + data_file("ultrafilter_principal.json").string()).exit_code == 0);
  ToolRun u = run_tool("validate " + data_file("ultraposet_mod_chain3.json").string());
  CHECK(u.exit_code == 0);
  CHECK(u.output.find("\"ultraposet\"") != std::string::npos);
}

TEST_CASE("validate: exit 3 when the construction exceeds the map budget") {
  auto big = write_temp("big_presheaf.json",
                        R"({"construction": "presheaf", "data": {
                              "base": {"n": 6, "leq": []},
                              "target": {"construction": "discrete", "data": {"n": 30}}}})");
  ToolRun r = run_tool("validate " + big.string() + " --map-cap 1000");
  CHECK(r.exit_code == 3);
  CHECK(r.output.find("BudgetExceeded") != std::string::npos);
}

TEST_CASE("spectrum: the 3-chain yields a two-element spectrum") {
  ToolRun r = run_tool("spectrum " + data_file("chain3.json").string());
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"n\": 2") != std::string::npos);
  CHECK(r.output.find("\"primes\"") != std::string::npos);
}

TEST_CASE("reconstruct: counit and idl witnesses appear") {
  ToolRun r = run_tool("reconstruct " + data_file("square.json").string());
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"counit\"") != std::string::npos);
  CHECK(r.output.find("\"idl\"") != std::string::npos);
}

TEST_CASE("export-dot: spectrum of the 3-chain has two nodes and one edge") {
  ToolRun r = run_tool("export-dot " + data_file("chain3.json").string() + " --what spectrum");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("e0") != std::string::npos);
  CHECK(r.output.find("e1") != std::string::npos);
  CHECK(r.output.find("e1 -> e0") != std::string::npos);
  CHECK(r.output.find("e2") == std::string::npos);
}

TEST_CASE("export-dot: lattice and clc targets work, unknown target is exit 2") {
  CHECK(run_tool("export-dot " + data_file("square.json").string() + " --what lattice")
            .exit_code == 0);
  CHECK(run_tool("export-dot " + data_file("square.json").string() + " --what clc").exit_code ==
        0);
  CHECK(run_tool("export-dot " + data_file("square.json").string() + " --what nope").exit_code ==
        2);
}

TEST_CASE("verify: a tiny corpus passes and is byte-identical across runs") {
  ToolRun a = run_tool("verify --suite axioms --max-size 2");
  ToolRun b = run_tool("verify --suite axioms --max-size 2");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("\"all_pass\": true") != std::string::npos);

  ToolRun bad_suite = run_tool("verify --suite nope");
  CHECK(bad_suite.exit_code == 2);
}
