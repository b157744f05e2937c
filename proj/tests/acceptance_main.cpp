// Acceptance suite: one test case per criterion, each printing a PASS/FAIL
// line with the measured values. Criteria 1-9 run the library's validation
// checks on the reference parameter set; criterion 10 exercises the CLI for
// exit-code and byte-level determinism.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "eit2des/params.hpp"
#include "eit2des/validation.hpp"

using namespace eit2des;

namespace {

SystemParams reference() { return SystemParams{}; }

void report(const std::vector<validation::CheckResult>& results, double elapsed_s,
            double budget_s) {
  bool all = true;
  for (const auto& r : results) {
    std::printf("  %s %s: %s\n", r.pass ? "pass" : "FAIL", r.name.c_str(),
                r.detail.c_str());
    all = all && r.pass;
  }
  std::printf("%s criterion %d (%.2f s, budget %.0f s)\n", all ? "PASS" : "FAIL",
              results.front().criterion, elapsed_s, budget_s);
}

struct Timed {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

void run_criterion(const std::vector<validation::CheckResult>& results,
                   const Timed& timer, double budget_s) {
  const double elapsed = timer.seconds();
  report(results, elapsed, budget_s);
  for (const auto& r : results) {
    INFO(r.name, ": ", r.detail);
    CHECK(r.pass);
  }
  CHECK(elapsed < budget_s);
}

#ifdef EIT2DES_CLI_PATH
int run_cli(const std::string& args, const std::string& log_path) {
  const std::string cmd =
      std::string("\"") + EIT2DES_CLI_PATH + "\" " + args + " > " + log_path + " 2>&1";
  const int status = std::system(cmd.c_str());
  if (status == -1) return -1;
#if defined(_WIN32)
  return status;
#else
  return WEXITSTATUS(status);
#endif
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::map<std::string, std::string> dir_contents(const std::filesystem::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file()) {
      out[entry.path().filename().string()] = slurp(entry.path());
    }
  }
  return out;
}
#endif

}  // namespace

TEST_CASE("criterion 01: EIT dip suppression at line center") {
  const Timed timer;
  run_criterion(validation::check_eit_dip(reference()), timer, 1.0);
}

TEST_CASE("criterion 02: analytic trough splitting vs dense-grid minimization") {
  const Timed timer;
  run_criterion(validation::check_trough_splitting(reference()), timer, 1.0);
}

TEST_CASE("criterion 03: coherence oracle matches the detection propagator") {
  const Timed timer;
  run_criterion(validation::check_coherence_oracle(reference()), timer, 10.0);
}

TEST_CASE("criterion 04: population kernels vs direct propagation") {
  const Timed timer;
  run_criterion(validation::check_population_oracle(reference()), timer, 30.0);
}

TEST_CASE("criterion 05: conservation laws and sum rules") {
  const Timed timer;
  run_criterion(validation::check_conservation(reference()), timer, 60.0);
}

TEST_CASE("criterion 06: steady states vs 300 ps propagation") {
  const Timed timer;
  run_criterion(validation::check_steady_states(reference()), timer, 60.0);
}

TEST_CASE("criterion 07: peak counting on the reference grids") {
  const Timed timer;
  run_criterion(validation::check_peak_counting(reference()), timer, 240.0);
}

TEST_CASE("criterion 08: waiting-time behavior") {
  const Timed timer;
  run_criterion(validation::check_t2_behavior(reference()), timer, 120.0);
}

TEST_CASE("criterion 09: absorptive spectrum structure") {
  const Timed timer;
  run_criterion(validation::check_absorptive_structure(reference()), timer, 120.0);
}

#ifdef EIT2DES_CLI_PATH
TEST_CASE("cli spectrum places the control-off maximum at line center") {
  namespace fs = std::filesystem;
  const fs::path base = fs::current_path() / "acceptance_cli_content";
  fs::remove_all(base);
  fs::create_directories(base);
  const int rc = run_cli("spectrum --kind rp --control off --t2 0 --out \"" +
                             base.string() + "\"",
                         (base / "run.log").string());
  REQUIRE(rc == 0);
  std::ifstream csv(base / "spectrum_rp_off_t2_0.csv");
  REQUIRE(csv.good());
  std::string line;
  std::getline(csv, line);
  CHECK(line == "omega1,omega3,value");
  double best = -1e300, best_w1 = 0.0, best_w3 = 0.0;
  std::size_t rows = 0;
  while (std::getline(csv, line)) {
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    const double w1 = std::stod(line.substr(0, c1));
    const double w3 = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
    const double v = std::stod(line.substr(c2 + 1));
    ++rows;
    if (v > best) {
      best = v;
      best_w1 = w1;
      best_w3 = w3;
    }
  }
  CHECK(rows == 601u * 601u);
  CHECK(best_w1 == 12579.0);
  CHECK(best_w3 == 12579.0);
  CHECK(best == doctest::Approx(1.1897651e-3).epsilon(1e-6));
}

TEST_CASE("criterion 10: validate exit code and byte-identical reruns") {
  const Timed timer;
  namespace fs = std::filesystem;
  const fs::path base = fs::current_path() / "acceptance_cli";
  fs::remove_all(base);
  fs::create_directories(base);

  // small deterministic spectrum configuration
  const fs::path cfg_path = base / "run.cfg";
  {
    std::ofstream cfg(cfg_path);
    cfg << "omega1_step = 5\nomega3_step = 5\nt2 = 0 2\nkind = abs\n";
  }
  const std::string cfg_arg = " --config \"" + cfg_path.string() + "\"";

  std::vector<validation::CheckResult> results;

  // identical configuration twice into the same directory
  const std::string run_dir = (base / "run").string();
  const int s1 = run_cli("spectrum" + cfg_arg + " --out \"" + run_dir + "\"",
                         (base / "spectrum1.log").string());
  const auto first = dir_contents(base / "run");
  const int s2 = run_cli("spectrum" + cfg_arg + " --out \"" + run_dir + "\"",
                         (base / "spectrum2.log").string());
  const auto second = dir_contents(base / "run");
  results.push_back({10, "spectrum-exit-codes",
                     "spectrum runs exited " + std::to_string(s1) + " and " +
                         std::to_string(s2) + " (expect 0)",
                     s1 == 0 && s2 == 0});

  const bool identical = !first.empty() && first == second;
  results.push_back({10, "byte-identical-reruns",
                     "identical config rerun produced " + std::to_string(first.size()) +
                         " files; byte-identical: " + (identical ? "yes" : "no"),
                     identical});

  const std::string val_dir = (base / "val").string();
  const int v1 = run_cli("validate --out \"" + val_dir + "\"",
                         (base / "validate1.log").string());
  const int v2 = run_cli("validate --out \"" + val_dir + "\"",
                         (base / "validate2.log").string());
  const bool validate_deterministic =
      slurp(base / "validate1.log") == slurp(base / "validate2.log");
  results.push_back({10, "validate-deterministic",
                     std::string("two validate runs printed identical reports: ") +
                         (validate_deterministic ? "yes" : "no"),
                     validate_deterministic});
  results.push_back({10, "validate-exit-zero",
                     "validate exited " + std::to_string(v1) + " then " +
                         std::to_string(v2) + " (criterion expects 0)",
                     v1 == 0 && v2 == 0});

  run_criterion(results, timer, 600.0);
}
#endif
