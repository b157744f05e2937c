#include "eit2des/response.hpp"

#include <cmath>
#include <string>

#include "eit2des/errors.hpp"
#include "eit2des/greens.hpp"
#include "eit2des/kernels.hpp"

namespace eit2des {

namespace {

constexpr std::size_t kMaxGridNodes = 100'000'000;

std::size_t axis_count(double lo, double hi, double step, const char* name) {
  if (!(step > 0.0)) throw ConfigError(std::string(name) + "_step must be > 0");
  if (!(lo < hi)) throw ConfigError(std::string(name) + "_min must be < max");
  const double span = (hi - lo) / step;
  const double rounded = std::round(span);
  if (std::fabs(span - rounded) > 1e-6 * std::max(1.0, std::fabs(span))) {
    throw ConfigError(std::string(name) + "_step must divide the axis span");
  }
  return static_cast<std::size_t>(rounded) + 1;
}

std::vector<double> axis_nodes(double lo, double step, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = lo + static_cast<double>(i) * step;
  return v;
}

}  // namespace

void SpectralGrid::validate() const {
  axis_count(omega1_min, omega1_max, omega1_step, "omega1");
  axis_count(omega3_min, omega3_max, omega3_step, "omega3");
  if (!(t2 >= 0.0)) throw ConfigError("t2 must be >= 0");
}

std::size_t SpectralGrid::n1() const {
  return axis_count(omega1_min, omega1_max, omega1_step, "omega1");
}

std::size_t SpectralGrid::n3() const {
  return axis_count(omega3_min, omega3_max, omega3_step, "omega3");
}

SpectralGrid SpectralGrid::centered_default(double omega_ab) {
  return SpectralGrid{omega_ab - 150.0, omega_ab + 150.0, 0.5,
                      omega_ab - 150.0, omega_ab + 150.0, 0.5, 0.0};
}

const char* signal_kind_name(SignalKind kind) {
  switch (kind) {
    case SignalKind::rephasing:
      return "rp";
    case SignalKind::nonrephasing:
      return "nr";
    case SignalKind::absorptive:
      return "abs";
  }
  return "?";
}

std::array<PathwayTerm, 4> pathway_terms(double omega3, double t2, double omega1,
                                         const SystemParams& params, SignalKind kind) {
  if (kind == SignalKind::absorptive) {
    throw ConfigError("pathway decomposition applies to rp and nr signals only");
  }
  const std::complex<double> det = g_ab_ab(omega3, params);
  const CoherenceSlot slot =
      (kind == SignalKind::rephasing) ? CoherenceSlot::ba_ba : CoherenceSlot::ab_ab;
  const std::complex<double> exc = (slot == CoherenceSlot::ba_ba)
                                       ? g_ba_ba(omega1, params)
                                       : g_ab_ab(omega1, params);
  const double k_aa_aa = g_pop(Level::a, Level::a, t2, params);
  const double k_bb_aa = g_pop(Level::a, Level::b, t2, params);
  const double k_aa_bb = g_pop(Level::b, Level::a, t2, params);
  const double k_bb_bb = g_pop(Level::b, Level::b, t2, params);
  return {PathwayTerm{PopulationKernel::aa_aa, slot, det * k_aa_aa * exc},
          PathwayTerm{PopulationKernel::bb_aa, slot, det * k_bb_aa * exc},
          PathwayTerm{PopulationKernel::aa_bb, slot, det * k_aa_bb * exc},
          PathwayTerm{PopulationKernel::bb_bb, slot, det * k_bb_bb * exc}};
}

double rephasing_point(double omega3, double t2, double omega1,
                       const SystemParams& params) {
  const double kernel = population_kernel_sum(t2, params);
  return (g_ab_ab(omega3, params) * kernel * g_ba_ba(omega1, params)).real();
}

double nonrephasing_point(double omega3, double t2, double omega1,
                          const SystemParams& params) {
  const double kernel = population_kernel_sum(t2, params);
  return (g_ab_ab(omega3, params) * kernel * g_ab_ab(omega1, params)).real();
}

double absorptive_point(double omega3, double t2, double omega1,
                        const SystemParams& params) {
  return rephasing_point(omega3, t2, omega1, params) +
         nonrephasing_point(omega3, t2, omega1, params);
}

namespace {

// Shared grid sweep: the t2 kernel is a scalar computed once; each signal is
// an outer product of the detection row over omega3 with an excitation row
// over omega1.
void fill_signal(const SpectralGrid& grid, SignalKind kind, const SystemParams& p,
                 std::vector<double>& dst) {
  const DerivedRates rates = derive_rates(p);
  const std::size_t n1 = grid.n1();
  const std::size_t n3 = grid.n3();
  const std::vector<double> w1 = axis_nodes(grid.omega1_min, grid.omega1_step, n1);
  const std::vector<double> w3 = axis_nodes(grid.omega3_min, grid.omega3_step, n3);

  const kernels::CoherenceGreenCoeffs det{p.omega_ab, rates.gamma1, rates.gamma2,
                                          p.Omega, +1.0};
  const double slot_sign = (kind == SignalKind::rephasing) ? -1.0 : +1.0;
  const kernels::CoherenceGreenCoeffs exc{p.omega_ab, rates.gamma1, rates.gamma2,
                                          p.Omega, slot_sign};

  std::vector<double> re3(n3), im3(n3), re1(n1), im1(n1);
  kernels::coherence_green_row(w3, det, re3, im3);
  kernels::coherence_green_row(w1, exc, re1, im1);
  const double kernel = population_kernel_sum(grid.t2, p);
  kernels::real_outer_product(re3, im3, re1, im1, kernel, dst);
}

}  // namespace

Spectrum2D compute_spectrum(const SpectralGrid& grid, SignalKind kind,
                            const SystemParams& params, bool control_on) {
  params.validate();
  grid.validate();
  const std::size_t n1 = grid.n1();
  const std::size_t n3 = grid.n3();
  if (n1 > kMaxGridNodes / n3) {
    throw ConfigError("grid exceeds the 1e8-node limit");
  }
  const SystemParams p = control_on ? params : params.without_control();

  Spectrum2D spec{grid, std::vector<double>(n1 * n3), kind, control_on};
  if (kind == SignalKind::absorptive) {
    // By construction the sum of the two constituent signals.
    std::vector<double> nr(n1 * n3);
    fill_signal(grid, SignalKind::rephasing, p, spec.values);
    fill_signal(grid, SignalKind::nonrephasing, p, nr);
    for (std::size_t i = 0; i < spec.values.size(); ++i) spec.values[i] += nr[i];
  } else {
    fill_signal(grid, kind, p, spec.values);
  }
  for (double v : spec.values) {
    if (!std::isfinite(v)) throw NumericalError("spectrum contains non-finite values");
  }
  return spec;
}

}  // namespace eit2des
