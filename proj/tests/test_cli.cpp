#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef SINGLET6_CLI_BIN
#define SINGLET6_CLI_BIN "singlet6"
#endif

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path dir = fs::temp_directory_path() / "singlet6_cli_tests";
  fs::create_directories(dir);
  const fs::path out = dir / ("out" + std::to_string(counter) + ".txt");
  const fs::path err = dir / ("err" + std::to_string(counter) + ".txt");
  ++counter;

  const std::string command = std::string(SINGLET6_CLI_BIN) + " " + args + " > " +
                              out.string() + " 2> " + err.string();
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out);
  result.err = slurp(err);
  return result;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("pipeline runs are byte-reproducible") {
  const RunResult a = run_cli("pipeline --seed 3");
  const RunResult b = run_cli("pipeline --seed 3");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);

  const auto parsed = nlohmann::json::parse(a.out);
  CHECK(std::abs(parsed["fidelity"].get<double>() - 1.0) < 1e-10);
  CHECK(std::abs(parsed["success_probability"].get<double>() - 9.0 / 256.0) < 1e-12);
}

TEST_CASE("histogram emits the theory bins in CSV") {
  const RunResult r = run_cli("histogram --setting zzzzzz --shots 0");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("# setting=zzzzzz") != std::string::npos);
  CHECK(r.out.find("HHHVVV,0.25,0,0") != std::string::npos);
  CHECK(r.out.find("# correlation=-1") != std::string::npos);
}

TEST_CASE("histogram rejects malformed settings") {
  const RunResult r = run_cli("histogram --setting zzzzzq");
  CHECK(r.exit_code != 0);
  CHECK(r.err.find("error") != std::string::npos);
}

TEST_CASE("project reports the conditional state") {
  const RunResult r = run_cli("project --mode f --bra V --basis HV");
  REQUIRE(r.exit_code == 0);
  const auto parsed = nlohmann::json::parse(r.out);
  CHECK(std::abs(parsed["probability"].get<double>() - 0.5) < 1e-12);
  CHECK(std::abs(parsed["fidelity"].get<double>() - 1.0) < 1e-10);

  const RunResult da = run_cli("project --mode b --bra H --basis DA");
  REQUIRE(da.exit_code == 0);
  const auto parsed_da = nlohmann::json::parse(da.out);
  CHECK(std::abs(parsed_da["fidelity"].get<double>() - 1.0) < 1e-10);
}

TEST_CASE("witness command fails cleanly on missing counts") {
  const RunResult r = run_cli("witness --counts nope1.csv nope2.csv nope3.csv --shots 0");
  CHECK(r.exit_code != 0);
  CHECK(r.err.find("error") != std::string::npos);
}

TEST_CASE("sampled commands are deterministic for a fixed seed") {
  const std::string hist_args = "histogram --setting xxxxxx --noise 0.126 --shots 113 --seed 7";
  const RunResult h1 = run_cli(hist_args);
  const RunResult h2 = run_cli(hist_args);
  REQUIRE(h1.exit_code == 0);
  CHECK(h1.out == h2.out);

  const std::string wit_args = "witness --noise 0.126 --shots 113 --seed 7 --resamples 100";
  const RunResult w1 = run_cli(wit_args);
  const RunResult w2 = run_cli(wit_args);
  REQUIRE(w1.exit_code == 0);
  CHECK(w1.out == w2.out);
  const auto parsed = nlohmann::json::parse(w1.out);
  CHECK(std::abs(parsed["reduced"]["expectation_on_state"].get<double>() - (-0.0090)) < 5e-4);
  CHECK(!parsed["estimate"].is_null());
}

TEST_CASE("projection on a detuned pipeline reports a diagnostic fidelity") {
  const RunResult r = run_cli("project --mode f --bra V --basis HV --phi 0");
  REQUIRE(r.exit_code == 0);
  const auto parsed = nlohmann::json::parse(r.out);
  CHECK(parsed["fidelity"].get<double>() < 0.999);
}

TEST_CASE("invariance summary passes on the ideal pipeline") {
  const RunResult r = run_cli("invariance --trials 5 --seed 2");
  REQUIRE(r.exit_code == 0);
  const auto parsed = nlohmann::json::parse(r.out);
  CHECK(parsed["pass"].get<bool>());
  CHECK(parsed["max_bin_deviation"].get<double>() < 1e-10);
}

TEST_CASE("config files feed defaults and flags override them") {
  const fs::path dir = fs::temp_directory_path() / "singlet6_cli_tests";
  fs::create_directories(dir);
  const fs::path cfg = dir / "run.cfg";
  {
    std::ofstream out(cfg);
    out << "phi=0.0\n";
    out << "seed=5\n";
  }
  const RunResult from_config = run_cli("pipeline --config " + cfg.string());
  REQUIRE(from_config.exit_code == 0);
  CHECK(nlohmann::json::parse(from_config.out)["fidelity"].get<double>() < 0.999);

  const RunResult overridden =
      run_cli("pipeline --config " + cfg.string() + " --phi 3.14159265358979");
  REQUIRE(overridden.exit_code == 0);
  CHECK(nlohmann::json::parse(overridden.out)["fidelity"].get<double>() ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("outputs can be redirected to files") {
  const fs::path dir = fs::temp_directory_path() / "singlet6_cli_tests";
  fs::create_directories(dir);
  const fs::path target = dir / "hist.csv";
  const RunResult r =
      run_cli("histogram --setting xxxxxx --shots 113 --seed 4 --out " + target.string());
  REQUIRE(r.exit_code == 0);
  const std::string text = slurp(target);
  CHECK(text.find("# setting=xxxxxx") != std::string::npos);
  CHECK(text.find("DDDDDD") != std::string::npos);
}

}  // TEST_SUITE
