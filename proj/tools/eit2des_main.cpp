// Command-line front end: spectra, population kernels, frequency propagators,
// trough positions and the oracle-vs-analytic validation suite, with CSV
// output. Exit codes: 0 success, 1 configuration error, 2 numerical failure,
// 3 validation-suite failure.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eit2des/analysis.hpp"
#include "eit2des/config.hpp"
#include "eit2des/csv.hpp"
#include "eit2des/errors.hpp"
#include "eit2des/greens.hpp"
#include "eit2des/kernels.hpp"
#include "eit2des/lindblad.hpp"
#include "eit2des/response.hpp"
#include "eit2des/validation.hpp"

namespace {

using namespace eit2des;

struct CliOptions {
  std::string config_path;
  std::string out_dir;
  std::string kind;
  std::string control;
  std::string simd;
  std::vector<double> t2;
};

RunConfig resolve_config(const CliOptions& opt) {
  RunConfig cfg = opt.config_path.empty() ? RunConfig{} : load_config(opt.config_path);
  if (!opt.out_dir.empty()) cfg.output_path = opt.out_dir;
  if (!opt.kind.empty()) cfg.signal_kind = parse_signal_kind(opt.kind);
  if (!opt.control.empty()) {
    if (opt.control != "on" && opt.control != "off") {
      throw ConfigError("--control must be 'on' or 'off'");
    }
    cfg.control_on = opt.control == "on";
  }
  if (!opt.t2.empty()) cfg.t2_list = opt.t2;
  if (!opt.simd.empty()) {
    if (opt.simd == "auto") {
      kernels::force_simd_level(std::nullopt);
    } else if (opt.simd == "scalar") {
      kernels::force_simd_level(kernels::SimdLevel::scalar);
    } else if (opt.simd == "avx2") {
      kernels::force_simd_level(kernels::SimdLevel::avx2);
    } else {
      throw ConfigError("--simd must be auto|scalar|avx2");
    }
  }
  cfg.validate();
  return cfg;
}

std::string out_path(const RunConfig& cfg, const std::string& name) {
  return (std::filesystem::path(cfg.output_path) / name).string();
}

void emit_summary(const RunConfig& cfg, const std::string& command) {
  std::string text = "command = " + command + "\n";
  {
    std::ostringstream ss;
    cfg.write_summary(ss);
    text += ss.str();
  }
  std::cout << text;
  csv::write_file(out_path(cfg, "run_summary.txt"), text);
}

int run_spectrum(const RunConfig& cfg) {
  emit_summary(cfg, "spectrum");
  for (double t2 : cfg.t2_list) {
    SpectralGrid grid = cfg.grid;
    grid.t2 = t2;
    const Spectrum2D spec =
        compute_spectrum(grid, cfg.signal_kind, cfg.params, cfg.control_on);
    const std::string name = std::string("spectrum_") +
                             signal_kind_name(cfg.signal_kind) + "_" +
                             (cfg.control_on ? "on" : "off") + "_t2_" +
                             csv::format_number(t2) + ".csv";
    csv::write_file(out_path(cfg, name), csv::spectrum_csv(spec));

    const auto [mn, mx] = std::minmax_element(spec.values.begin(), spec.values.end());
    const std::size_t imax = static_cast<std::size_t>(mx - spec.values.begin());
    const std::size_t imin = static_cast<std::size_t>(mn - spec.values.begin());
    const std::size_t n1 = grid.n1();
    std::cout << name << ": max " << csv::format_number(*mx) << " at ("
              << csv::format_number(grid.omega1(imax % n1)) << ", "
              << csv::format_number(grid.omega3(imax / n1)) << "), min "
              << csv::format_number(*mn) << " at ("
              << csv::format_number(grid.omega1(imin % n1)) << ", "
              << csv::format_number(grid.omega3(imin / n1)) << ")\n";
  }
  return 0;
}

int run_population(const RunConfig& cfg) {
  emit_summary(cfg, "population");
  const SystemParams p = cfg.control_on ? cfg.params : cfg.params.without_control();
  const auto oracle_aa =
      oracle_green_population(Level::a, Level::a, p, cfg.t2_list);
  const auto oracle_bb =
      oracle_green_population(Level::b, Level::b, p, cfg.t2_list);
  std::vector<csv::PopulationRow> rows;
  rows.reserve(cfg.t2_list.size());
  for (std::size_t i = 0; i < cfg.t2_list.size(); ++i) {
    const double t2 = cfg.t2_list[i];
    rows.push_back(csv::PopulationRow{t2, g_pop(Level::a, Level::a, t2, p),
                                      g_pop(Level::a, Level::b, t2, p),
                                      g_pop(Level::b, Level::a, t2, p),
                                      g_pop(Level::b, Level::b, t2, p),
                                      oracle_aa[i], oracle_bb[i]});
  }
  csv::write_file(out_path(cfg, "population.csv"),
                  csv::population_csv(rows));
  std::cout << "population.csv: " << rows.size() << " waiting times\n";
  return 0;
}

int run_greens(const RunConfig& cfg) {
  emit_summary(cfg, "greens");
  const std::size_t n = cfg.grid.n3();
  std::vector<double> omega(n), re(n), im(n);
  for (std::size_t i = 0; i < n; ++i) omega[i] = cfg.grid.omega3(i);

  const struct {
    const char* file;
    double sign;
    bool control;
  } rows[] = {{"greens_ab_on.csv", +1.0, true},
              {"greens_ab_off.csv", +1.0, false},
              {"greens_ba_on.csv", -1.0, true},
              {"greens_ba_off.csv", -1.0, false}};
  for (const auto& r : rows) {
    const SystemParams p = r.control ? cfg.params : cfg.params.without_control();
    const DerivedRates g = derive_rates(p);
    const kernels::CoherenceGreenCoeffs coeffs{p.omega_ab, g.gamma1, g.gamma2,
                                               p.Omega, r.sign};
    kernels::coherence_green_row(omega, coeffs, re, im);
    csv::write_file(out_path(cfg, r.file), csv::greens_csv(omega, re, im));
    std::cout << r.file << " written\n";
  }
  return 0;
}

int run_troughs(const RunConfig& cfg) {
  emit_summary(cfg, "troughs");
  const SystemParams p = cfg.control_on ? cfg.params : cfg.params.without_control();
  const auto analytic = trough_positions(p);
  const auto scanned = trough_positions_scan(p);
  if (!analytic) {
    std::cout << "analytic: no splitting (single trough at "
              << csv::format_number(p.omega_ab) << ")\n";
  } else {
    std::cout << "analytic: " << csv::format_number(analytic->omega_minus) << " "
              << csv::format_number(analytic->omega_plus) << " (half-splitting "
              << csv::format_number(analytic->split()) << ")\n";
  }
  if (!scanned) {
    std::cout << "grid scan: no resolved double trough\n";
  } else {
    std::cout << "grid scan: " << csv::format_number(scanned->omega_minus) << " "
              << csv::format_number(scanned->omega_plus) << "\n";
  }
  if (analytic && scanned) {
    std::cout << "difference: "
              << csv::format_number(scanned->omega_minus - analytic->omega_minus)
              << " "
              << csv::format_number(scanned->omega_plus - analytic->omega_plus)
              << "\n";
  }
  return 0;
}

int run_validate(const RunConfig& cfg) {
  emit_summary(cfg, "validate");
  const auto results = validation::run_all(cfg.params);
  bool all_pass = true;
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS" : "FAIL") << " [" << r.criterion << "] " << r.name
              << ": " << r.detail << "\n";
    all_pass = all_pass && r.pass;
  }
  std::cout << (all_pass ? "validation suite: all checks passed\n"
                         : "validation suite: some checks failed\n");
  return all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-dimensional electronic spectra of a Lambda-type three-level "
               "atom with a control field"};
  app.require_subcommand(1);

  CliOptions opt;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", opt.config_path, "key=value parameter file");
    sub->add_option("--out", opt.out_dir, "output directory (overrides 'out')");
    sub->add_option("--kind", opt.kind, "signal kind: rp|nr|abs");
    sub->add_option("--control", opt.control, "control field: on|off");
    sub->add_option("--t2", opt.t2, "waiting time(s), ps (repeatable)");
    sub->add_option("--simd", opt.simd, "kernel dispatch: auto|scalar|avx2");
  };

  CLI::App* spectrum = app.add_subcommand("spectrum", "2D spectra as CSV, one file per t2");
  CLI::App* population = app.add_subcommand(
      "population", "closed-form population kernels vs propagation");
  CLI::App* greens = app.add_subcommand(
      "greens", "frequency-domain propagators, control on and off");
  CLI::App* troughs = app.add_subcommand(
      "troughs", "analytic vs grid-refined absorption trough positions");
  CLI::App* validate = app.add_subcommand(
      "validate", "full oracle-vs-analytic suite; exit 0 iff all tolerances met");
  for (CLI::App* sub : {spectrum, population, greens, troughs, validate}) {
    add_common(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    const RunConfig cfg = resolve_config(opt);
    if (spectrum->parsed()) return run_spectrum(cfg);
    if (population->parsed()) return run_population(cfg);
    if (greens->parsed()) return run_greens(cfg);
    if (troughs->parsed()) return run_troughs(cfg);
    if (validate->parsed()) return run_validate(cfg);
    return 1;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 1;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
