#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "eit2des/density_matrix.hpp"
#include "eit2des/params.hpp"

namespace eit2des {

/// Fixed-step settings for the classical 4th-order integrator.
struct PropagationSettings {
  double dt = 0.001;  ///< step size, ps
  double t_max = 0.0;  ///< final time, ps

  /// Throws ConfigError unless dt > 0, t_max >= 0 and
  /// dt * (largest rate, rad/ps) < 0.1.
  void validate(const SystemParams& params) const;
};

/// Right-hand side of the interaction-picture master equation, evaluated with
/// every rate in cm^-1 (multiply by to_angular_rate(1.0) to step in ps).
/// The nine coupled element equations are applied verbatim; the output has an
/// exactly vanishing trace derivative.
DensityMatrix master_equation_rhs(const DensityMatrix& rho,
                                  const SystemParams& params);

struct PropagationResult {
  std::vector<double> times;           ///< ps, one entry per stored state
  std::vector<DensityMatrix> states;
};

/// Propagates rho0 with fixed-step RK4, storing the state at every step
/// (including t = 0). Throws NumericalError on NaN/overflow.
PropagationResult propagate(const DensityMatrix& rho0, const SystemParams& params,
                            const PropagationSettings& settings);

/// Streaming variant: calls observer(t, rho) at t = 0 and after every step.
void propagate_observe(const DensityMatrix& rho0, const SystemParams& params,
                       const PropagationSettings& settings,
                       const std::function<void(double, const DensityMatrix&)>& observer);

/// Population Green's-function oracle: propagates from |start><start| and
/// returns the end-level population at each requested waiting time (ascending,
/// non-negative). This is the numerical counterpart of the closed-form
/// population kernels.
std::vector<double> oracle_green_population(Level start, Level end,
                                            const SystemParams& params,
                                            std::span<const double> t2_list,
                                            double dt = 0.001);

enum class CoherencePair { ab, ba };

/// Coherence Green's-function oracle. Integrates the closed two-variable
/// subsystem {rho_ab, rho_cb} (or its conjugate {rho_ba, rho_bc}) from a unit
/// initial coherence and returns the first component at every step; the
/// Hermiticity constraint is deliberately relaxed for this linear run.
std::vector<std::complex<double>> oracle_green_coherence(
    CoherencePair pair, const SystemParams& params,
    const PropagationSettings& settings);

/// Rectangular-window quadrature of the coherence series against
/// e^{+/- i (omega - omega_ab) t}: the sign is + for the ab pair and - for ba,
/// so that -i * transform(ab) reproduces the closed-form detection propagator
/// and +i * transform(ba) the excitation one. Series samples are spaced dt
/// apart starting at t = 0; the time measure is converted to 1/cm^-1.
std::complex<double> coherence_transform(std::span<const std::complex<double>> series,
                                         double dt, CoherencePair pair,
                                         double omega, const SystemParams& params);

}  // namespace eit2des
