#pragma once

#include <complex>
#include <optional>

#include "eit2des/density_matrix.hpp"
#include "eit2des/params.hpp"

namespace eit2des {

/// Excitation-interval coherence propagator G_ba,ba(omega1): the closed-form
/// rational function with -i gamma offsets. Dimensionless; omega1 in cm^-1.
std::complex<double> g_ba_ba(double omega1, const SystemParams& params);

/// Detection-interval coherence propagator G_ab,ab(omega3), +i gamma offsets.
/// Its imaginary part is strictly negative on the real axis for positive
/// rates; with the control field on it dips to -4 g2 / (4 g1 g2 + Om^2) at
/// line center instead of -1/g1.
std::complex<double> g_ab_ab(double omega3, const SystemParams& params);

/// Closed-form population kernel G_{end end, start start}(t2): probability of
/// finding the system in `end` at waiting time t2 (ps) having started in
/// `start`. start/end are restricted to {a, b}.
///
/// The damped-oscillation sin term is evaluated with a real coefficient
/// sin(Om~ t)/Om~, which keeps the kernels real and reduces exactly to the
/// control-off expressions as Omega -> 0. In the overdamped regime
/// (4 Om^2 < g3^2) the standard sinh/cosh continuation is used, computed in a
/// form that cannot overflow. Throws NumericalError if Gamma1 + Gamma2 = 0 or
/// the closed form is degenerate (A1 = 0).
double g_pop(Level start, Level end, double t2, const SystemParams& params);

/// Sum of the four population kernels at t2; the scalar t2-dependence shared
/// by every point of a spectrum.
double population_kernel_sum(double t2, const SystemParams& params);

struct TroughPair {
  double omega_minus;  ///< cm^-1
  double omega_plus;   ///< cm^-1
  double split() const { return 0.5 * (omega_plus - omega_minus); }
};

/// Analytic positions of the two absorption troughs of Im G_ab,ab,
///   omega_ab +/- (1/2) sqrt[(Om (g1+g2) sqrt(4 g1 g2 + Om^2)
///                            - g2 (4 g1 g2 + Om^2)) / g1].
/// Returns nullopt when the radicand is negative (troughs unresolved; this
/// covers Omega = 0 automatically).
std::optional<TroughPair> trough_positions(const SystemParams& params);

/// Independent locator: dense scan of Im G_ab,ab on a `step`-spaced grid over
/// omega_ab +/- 3 Omega, one minimum per side of omega_ab, refined by
/// parabolic interpolation. Does not use the analytic formula; serves as its
/// oracle. Returns nullopt when either side has no interior minimum.
std::optional<TroughPair> trough_positions_scan(const SystemParams& params,
                                                double step = 0.01);

}  // namespace eit2des
