#include <doctest.h>

#include <cmath>
#include <utility>
#include <vector>

#include "eit2des/analysis.hpp"
#include "eit2des/errors.hpp"
#include "eit2des/units.hpp"

using namespace eit2des;

namespace {

SystemParams reference() { return SystemParams{}; }

Spectrum2D synthetic(double (*f)(double, double), double half, double step) {
  SpectralGrid grid{-half, half, step, -half, half, step, 0.0};
  Spectrum2D s{grid, {}, SignalKind::rephasing, false};
  s.values.resize(grid.n1() * grid.n3());
  for (std::size_t i3 = 0; i3 < grid.n3(); ++i3) {
    for (std::size_t i1 = 0; i1 < grid.n1(); ++i1) {
      s.values[i3 * grid.n1() + i1] = f(grid.omega1(i1), grid.omega3(i3));
    }
  }
  return s;
}

}  // namespace

TEST_CASE("single Gaussian bump is found and refined") {
  const auto s = synthetic(
      [](double x, double y) {
        return std::exp(-((x - 0.37) * (x - 0.37) + (y + 1.21) * (y + 1.21)) / 8.0);
      },
      10.0, 0.5);
  const auto found = find_extrema(s, 0.1);
  REQUIRE(found.size() == 1);
  CHECK(found[0].kind == ExtremumKind::maximum);
  CHECK(found[0].refined);
  CHECK(std::fabs(found[0].omega1 - 0.37) < 0.05);
  CHECK(std::fabs(found[0].omega3 + 1.21) < 0.05);
  CHECK(found[0].prominence > 0.9);
}

TEST_CASE("ripples below the prominence threshold are dropped") {
  const auto s = synthetic(
      [](double x, double y) {
        const double big = std::exp(-(x * x + y * y) / 4.0);
        const double small =
            0.04 * std::exp(-((x - 6.0) * (x - 6.0) + y * y) / 1.0);
        const double dip = -std::exp(-((x + 6.0) * (x + 6.0) + y * y) / 2.0);
        return big + small + dip;
      },
      10.0, 0.25);
  const auto strict = find_extrema(s, 0.1);
  REQUIRE(strict.size() == 2);  // the 4% ripple is filtered at 0.1
  CHECK(strict[0].kind == ExtremumKind::maximum);
  CHECK(strict[1].kind == ExtremumKind::minimum);
  const auto loose = find_extrema(s, 0.01);
  CHECK(loose.size() == 3);  // and kept at 0.01
}

TEST_CASE("constant spectrum yields no extrema") {
  const auto s = synthetic([](double, double) { return 0.7; }, 5.0, 0.5);
  CHECK(find_extrema(s, 0.05).empty());
}

TEST_CASE("extremum positions are invariant under positive scaling") {
  const auto s = synthetic(
      [](double x, double y) {
        return std::sin(x / 3.0) * std::exp(-(x * x + y * y) / 30.0);
      },
      10.0, 0.5);
  Spectrum2D scaled = s;
  for (double& v : scaled.values) v *= 37.5;
  const auto a = find_extrema(s, 0.05);
  const auto b = find_extrema(scaled, 0.05);
  REQUIRE(a.size() == b.size());
  REQUIRE(!a.empty());
  for (std::size_t i = 0; i < a.size(); ++i) {
    // node choice is exactly invariant; sub-step refinement only to roundoff
    CHECK(a[i].omega1 == doctest::Approx(b[i].omega1).epsilon(1e-12));
    CHECK(a[i].omega3 == doctest::Approx(b[i].omega3).epsilon(1e-12));
    CHECK(a[i].kind == b[i].kind);
    CHECK(b[i].value == doctest::Approx(37.5 * a[i].value).epsilon(1e-12));
  }
}

TEST_CASE("prominence bounds are validated") {
  const auto s = synthetic([](double, double) { return 0.0; }, 2.0, 1.0);
  CHECK_THROWS_AS(find_extrema(s, 0.0), ConfigError);
  CHECK_THROWS_AS(find_extrema(s, 1.0), ConfigError);
}

TEST_CASE("synthetic damped cosine round-trips through the fit") {
  // omega = 45.604 cm^-1, kappa = 20.5 cm^-1, >= 3 periods in 3 ps
  const double w = to_angular_rate(45.604);
  const double k = to_angular_rate(20.5);
  std::vector<std::pair<double, double>> trace;
  for (int i = 0; i <= 300; ++i) {
    const double t = 0.01 * static_cast<double>(i);
    trace.emplace_back(t, 1.5 + 0.5 * std::exp(-k * t) * std::cos(w * t + 0.3));
  }
  const OscillationFit fit = fit_damped_oscillation(trace);
  CHECK(fit.oscillatory);
  CHECK(std::fabs(fit.frequency - 45.604) / 45.604 < 1e-3);
  CHECK(std::fabs(fit.decay_rate - 20.5) / 20.5 < 1e-3);
  CHECK(std::fabs(fit.offset - 1.5) < 1e-3);
  CHECK(std::fabs(fit.amplitude - 0.5) < 1e-3);
  CHECK(std::fabs(fit.phase - 0.3) < 1e-2);
  CHECK(fit.residual < 1e-9);
}

TEST_CASE("fit recovers a slow heavily damped oscillation") {
  const double w = to_angular_rate(5.0);
  const double k = to_angular_rate(1.0);
  std::vector<std::pair<double, double>> trace;
  for (int i = 0; i <= 400; ++i) {
    const double t = 0.05 * static_cast<double>(i);  // ~3 periods over 20 ps
    trace.emplace_back(t, -0.2 + 2.0 * std::exp(-k * t) * std::cos(w * t - 1.1));
  }
  const OscillationFit fit = fit_damped_oscillation(trace);
  CHECK(fit.oscillatory);
  CHECK(std::fabs(fit.frequency - 5.0) / 5.0 < 1e-3);
  CHECK(std::fabs(fit.decay_rate - 1.0) / 1.0 < 1e-3);
}

TEST_CASE("constant trace is flagged non-oscillatory") {
  std::vector<std::pair<double, double>> trace;
  for (int i = 0; i <= 50; ++i) {
    trace.emplace_back(0.01 * static_cast<double>(i), 2.0);
  }
  const OscillationFit fit = fit_damped_oscillation(trace);
  CHECK_FALSE(fit.oscillatory);
  CHECK(fit.amplitude == 0.0);
  CHECK(fit.offset == doctest::Approx(2.0));
}

TEST_CASE("fit preconditions") {
  std::vector<std::pair<double, double>> tiny(5, {0.0, 1.0});
  CHECK_THROWS_AS(fit_damped_oscillation(tiny), ConfigError);
}

TEST_CASE("steady-state populations, reference set") {
  const SteadyStatePopulations s = steady_state_populations(reference());
  CHECK(s.p_a_start_a == doctest::Approx(4.99950005e-5).epsilon(1e-9));
  CHECK(s.p_b_start_a == doctest::Approx(0.499950005).epsilon(1e-9));
  CHECK(s.p_a_start_b == doctest::Approx(9.999000100e-5).epsilon(1e-9));
  CHECK(s.p_b_start_b == doctest::Approx(0.999900010).epsilon(1e-9));
}

TEST_CASE("steady-state populations, symmetric and one-way rates") {
  SystemParams p = reference();
  p.Gamma1 = 2.0;
  p.Gamma2 = 2.0;
  const SteadyStatePopulations sym = steady_state_populations(p);
  CHECK(sym.p_a_start_a == 0.25);
  CHECK(sym.p_b_start_a == 0.25);
  CHECK(sym.p_a_start_b == 0.5);
  CHECK(sym.p_b_start_b == 0.5);

  p = reference();
  p.Gamma2 = 0.0;
  const SteadyStatePopulations oneway = steady_state_populations(p);
  CHECK(oneway.p_a_start_a == 0.0);
  CHECK(oneway.p_b_start_a == 0.5);
  CHECK(oneway.p_a_start_b == 0.0);
  CHECK(oneway.p_b_start_b == 1.0);

  p.Gamma1 = 0.0;
  CHECK_THROWS_AS(steady_state_populations(p), NumericalError);
}
