#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(THERMOWIRE_CLI_PATH) + " " + args +
                          " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    r.out.append(buf.data(), n);
  }
  const int status = pclose(pipe);
  r.exit_code = WEXITSTATUS(status);
  return r;
}

}  // namespace

TEST_CASE("point: classical H") {
  const RunResult r = run_cli("point --m 0.8 --omega-r 1 --t 1e6 --quantity H");
  CHECK(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["value"].get<double>() == doctest::Approx(1.38889).epsilon(1e-3));
}

TEST_CASE("point: trivial zeros") {
  const json f =
      json::parse(run_cli("point --m 0 --t 1 --omega-r 1 --quantity F").out);
  CHECK(f["value"].get<double>() == 0.0);
  const json h =
      json::parse(run_cli("point --m 0.8 --omega-r 0 --t 1 --quantity H").out);
  CHECK(h["value"].get<double>() == 0.0);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("point --m 2.0 --omega-r 1 --t 1 --quantity H").exit_code == 2);
  CHECK(run_cli("bogus-subcommand").exit_code == 2);
  CHECK(run_cli("point --quantity nonsense --t 1").exit_code == 2);
}

TEST_CASE("sweep: degenerate two-point run") {
  const RunResult r = run_cli(
      "sweep --variable m --from 0 --to 0.5 --points 2 --t 1 --omega-r 1 "
      "--quantity H");
  CHECK(r.exit_code == 0);
  // header + 2 rows + trailing newline
  int lines = 0;
  for (char ch : r.out) {
    if (ch == '\n') ++lines;
  }
  CHECK(lines == 3);
}

TEST_CASE("sweep output is bit-stable across runs") {
  const std::string args =
      "sweep --variable t --from 0.1 --to 1 --points 4 --m 0.5 --omega-r 1 "
      "--quantity H --quantity F";
  CHECK(run_cli(args).out == run_cli(args).out);
}

TEST_CASE("fig1: pinned header on a coarse grid") {
  const RunResult r = run_cli("fig1 --points 12 --t-min 0.05 --t-max 1.0");
  CHECK(r.exit_code == 0);
  CHECK(r.out.substr(0, r.out.find('\n')) == "t,F_int,F_self,S_int,S_total");
}

TEST_CASE("oracle: determinism and equipartition sanity") {
  const std::string args =
      "oracle --l 1 --m-henry 0.8 --r 0.5 --kt 1 --dt 0.005 --steps 200000 "
      "--replicas 4 --seed 42";
  const RunResult a = run_cli(args);
  const RunResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);  // identical bytes for identical seed
  const json doc = json::parse(a.out);
  const double corr = doc["corr_12"].get<double>();
  const double se = doc["stderr_corr"].get<double>();
  CHECK(std::abs(corr - (-0.8 / 0.36)) < 4.0 * se);
  CHECK(doc["rng_algorithm"].is_string());
  CHECK(doc["config"]["seed"].get<int>() == 42);

  const json z = json::parse(
      run_cli("oracle --l 1 --m-henry 0 --r 0.5 --kt 1 --dt 0.005 "
              "--steps 200000 --replicas 4 --seed 3")
          .out);
  CHECK(std::abs(z["corr_12"].get<double>()) <
        3.0 * z["stderr_corr"].get<double>());
}

TEST_CASE("mutual: curve JSON round trip") {
  const std::string dir = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp");
  const std::string c1 = dir + "/tw_c1.json";
  const std::string c2 = dir + "/tw_c2.json";
  {
    std::ofstream f(c1);
    f << R"({"schema_version":1,"closed":false,"points":[[-0.5,0,0],[0.5,0,0]]})";
  }
  {
    std::ofstream f(c2);
    f << R"({"schema_version":1,"closed":false,"points":[[0,-0.5,0],[0,0.5,0]]})";
  }
  const RunResult r =
      run_cli("mutual --c1 " + c1 + " --c2 " + c2 + " --a 0 0 0.4");
  CHECK(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(std::abs(doc["mutual_henry"].get<double>()) < 1e-18);  // perpendicular
}

TEST_CASE("validate --filter runs a subset") {
  const RunResult r = run_cli("validate --filter geometry");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("geometry-neumann-oracle") != std::string::npos);
  CHECK(r.out.find("classical-h-closed-form") == std::string::npos);
}

TEST_CASE("validate --tighten makes selected criteria fail, not abort") {
  const RunResult r = run_cli("validate --filter geometry --tighten 1e9 --json");
  CHECK(r.exit_code == 1);
  const json doc = json::parse(r.out);
  CHECK(doc["all_passed"].get<bool>() == false);
  CHECK(doc["criteria"].size() >= 1);
}
