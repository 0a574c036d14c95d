// Runs the absurf binary and compares stdout with tests/golden/<name>.out.
// Set ABSURF_UPDATE_GOLDEN=1 to rewrite the golden files.

#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / ("absurf-cli-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

Run run(const std::string& args, const std::string& env = "") {
  const fs::path dir = scratch();
  const std::string cmd = env + " " + ABSURF_BINARY + " " + args + " > " + (dir / "out").string() + " 2> " +
                          (dir / "err").string();
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(dir / "out"), slurp(dir / "err")};
}

void check_golden(const std::string& name, const std::string& actual) {
  const fs::path path = fs::path(ABSURF_GOLDEN_DIR) / (name + ".out");
  const char* update = std::getenv("ABSURF_UPDATE_GOLDEN");
  if (update && std::string(update) == "1") {
    std::ofstream(path, std::ios::binary) << actual;
    return;
  }
  REQUIRE_MESSAGE(fs::exists(path), "missing golden file " << path);
  CHECK(slurp(path) == actual);
}

void check_success(const std::string& name, const std::string& args, const std::string& env = "") {
  CAPTURE(args);
  const Run r = run(args, env);
  CHECK(r.exit_code == 0);
  CHECK(r.err.empty());
  check_golden(name, r.out);
}

void check_error(const std::string& args, int exit_code, const std::string& kind) {
  CAPTURE(args);
  const Run r = run(args);
  CHECK(r.exit_code == exit_code);
  CHECK(r.out.empty());
  REQUIRE(!r.err.empty());
  CHECK(r.err.back() == '\n');
  CHECK(r.err.find('\n') == r.err.size() - 1);
  const auto j = nlohmann::json::parse(r.err);
  CHECK(j["error"] == kind);
  CHECK(j["message"].is_string());
}

}  // namespace

TEST_CASE("single-shot queries") {
  check_success("pell_61", "pell 61");
  check_success("seshadri_picard1_6", "seshadri picard1 --d 6");
  check_success("seshadri_exe_6_6_-1", "seshadri exe --b 6,6,-1");
  check_success("seshadri_vg_1_21", "seshadri vg --d1 1 --d2 21");
  check_success("np_picard1_8", "np --spec picard1:d=8 --p 0");
  check_success("np_vg_1_21", "np --spec vg:d1=1,d2=21 --p 0");
  check_success("np_explicit_fails", "np --spec explicit:l2=100,eps=2 --p 0");
  check_success("np_max_explicit", "np --spec explicit:l2=10000,eps=100 --max-p");
  check_success("np_max_picard1_1", "np --spec picard1:d=1 --max-p");
  check_success("np_nonintegral", "np --spec explicit:l2=20,eps=7/2 --p 0 --assert-eps-nonintegral");
  check_success("kva_explicit", "kva --spec explicit:l2=100,eps=2 --k 1");
  check_success("koszul_vg_1_46", "koszul --spec vg:d1=1,d2=46");
  check_success("multiple_vg_1_1", "multiple --spec vg:d1=1,d2=1 --p 0");
}

TEST_CASE("sweeps") {
  check_success("sweep_picard1_1_10", "sweep --template 'picard1:d={}' --from 1 --to 10");
  check_success("sweep_vg_1_30", "sweep --template 'vg:d1=1,d2={}' --from 1 --to 30");
  check_success("sweep_picard1_json", "sweep --template 'picard1:d={}' --from 7 --to 9 --p-to 1 --format json");

  const std::string args = "sweep --template 'picard1:d={}' --from 1 --to 50 --p-to 3";
  const Run one = run(args, "ABSURF_THREADS=1");
  const Run many = run(args, "ABSURF_THREADS=8");
  CHECK(one.exit_code == 0);
  CHECK(one.out == many.out);
  CHECK(run(args + " --threads 5").out == one.out);

  const fs::path file = scratch() / "sweep.csv";
  const Run to_file = run(args + " --out " + file.string());
  CHECK(to_file.exit_code == 0);
  CHECK(slurp(file) == one.out);
}

TEST_CASE("region plot") {
  const fs::path svg = scratch() / "region.svg";
  const Run r = run("region --eps 6/5 --alpha 9/5 --svg " + svg.string());
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["delta"]["area"] == "18/5");
  CHECK(j["delta_alpha"]["area"] == "54/25");
  CHECK(j["delta_alpha"]["slice_at_2"] == "1");
  check_golden("region_6_5_9_5.svg", slurp(svg));
}

TEST_CASE("errors map to exit codes") {
  check_error("pell 16", 2, "PerfectSquare");
  check_error("pell x", 2, "ParseError");
  check_error("np --spec picard1:d=0 --p 0", 2, "InvalidSpec");
  check_error("np --spec torus:d=1 --p 0", 2, "ParseError");
  check_error("np --spec picard1:d=1", 2, "ParseError");
  check_error("seshadri exe --b 1,-1,0", 2, "NotAmple");
  check_error("multiple --spec picard1:d=3 --p 0", 2, "UnsupportedSpec");
  check_error("region --eps 5/2 --svg /tmp/never.svg", 2, "EpsOutOfRange");
  check_error("region --eps 6/5 --alpha 1 --svg /tmp/never.svg", 2, "ParameterOrderViolation");
  check_error("sweep --template 'picard1:d={}' --from 3 --to 1", 2, "ParseError");
  check_error("sweep --template 'picard1:d={}' --from 1 --to 3 --out /nonexistent-dir/x.csv", 3, "IoError");
  check_error("frobnicate", 2, "ParseError");
}
