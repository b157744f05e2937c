#include "eit2des/greens.hpp"

#include <cmath>
#include <vector>

#include "eit2des/errors.hpp"
#include "eit2des/kernels.hpp"
#include "eit2des/units.hpp"
#include "kernels/kernels_impl.hpp"

namespace eit2des {

namespace {

std::complex<double> coherence_green(double omega, const SystemParams& p, double sign) {
  const DerivedRates g = derive_rates(p);
  const kernels::CoherenceGreenCoeffs c{p.omega_ab, g.gamma1, g.gamma2, p.Omega, sign};
  const kernels::detail::GreenLane lane = kernels::detail::coherence_green_lane(omega, c);
  return {lane.re, lane.im};
}

// e^{-g3 t/2} cos(Om~ t) and e^{-g3 t/2} sin(Om~ t)/Om~ with rates in cm^-1
// and t in ps, continued to cosh/sinh below critical damping. The overdamped
// branch is assembled from e^{(om - g3/2) t} and e^{-(om + g3/2) t}, both
// non-increasing, so nothing overflows at large t.
struct DampedOscillation {
  double envelope_cos;
  double envelope_sin_over_omega;
};

DampedOscillation damped_oscillation(double t2, const DerivedRates& g) {
  const double t_ang = to_angular_rate(1.0) * t2;
  const double om = g.omega_tilde;  // cm^-1, real magnitude
  if (g.oscillatory) {
    const double decay = std::exp(-0.5 * g.gamma3 * t_ang);
    const double c = std::cos(om * t_ang);
    const double s = (om > 0.0) ? std::sin(om * t_ang) / om : t_ang;
    return {decay * c, decay * s};
  }
  const double ep = std::exp((om - 0.5 * g.gamma3) * t_ang);  // om <= g3/2 here
  const double em = std::exp(-(om + 0.5 * g.gamma3) * t_ang);
  const double cosh_part = 0.5 * (ep + em);
  const double sinh_part =
      (om > 0.0) ? 0.5 * (ep - em) / om
                 : t_ang * std::exp(-0.5 * g.gamma3 * t_ang);
  return {cosh_part, sinh_part};
}

}  // namespace

std::complex<double> g_ba_ba(double omega1, const SystemParams& params) {
  return coherence_green(omega1, params, -1.0);
}

std::complex<double> g_ab_ab(double omega3, const SystemParams& params) {
  return coherence_green(omega3, params, +1.0);
}

double g_pop(Level start, Level end, double t2, const SystemParams& params) {
  if (start == Level::c || end == Level::c) {
    throw ConfigError("population kernels are defined for levels a and b only");
  }
  const double G1 = params.Gamma1;
  const double G2 = params.Gamma2;
  const double sum = G1 + G2;
  if (sum <= 0.0) {
    throw NumericalError("steady state undefined: Gamma1 + Gamma2 = 0");
  }
  const double t_ang = to_angular_rate(1.0) * t2;
  const double slow = std::exp(-sum * t_ang);

  if (start == Level::b) {
    // Control-independent closed forms.
    return (end == Level::a) ? G2 * (1.0 - slow) / sum : (G1 + G2 * slow) / sum;
  }

  if (params.Omega == 0.0) {
    return (end == Level::a) ? G2 / sum + G1 / sum * slow
                             : G1 / sum * (1.0 - slow);
  }

  const DerivedRates g = derive_rates(params);
  const double om2 = params.Omega * params.Omega;
  const double a1 = sum * (sum - g.gamma3) + om2;
  const double a2 = sum - g.gamma3;
  const double scale = std::max({sum * sum, g.gamma3 * g.gamma3, om2});
  if (std::fabs(a1) < 1e-12 * scale) {
    throw NumericalError("population kernel degenerate: A1 ~ 0 for these rates");
  }
  const DampedOscillation osc = damped_oscillation(t2, g);

  if (end == Level::a) {
    const double fast = 0.5 * osc.envelope_cos * (a2 * G2 + om2) / a1 +
                        0.25 * osc.envelope_sin_over_omega *
                            (a2 * G2 * g.gamma3 + (g.gamma3 - 2.0 * G1) * om2) / a1;
    return fast + G2 / (2.0 * sum) + G1 * (2.0 * a1 - om2) * slow / (2.0 * sum * a1);
  }
  const double fast = 0.5 * osc.envelope_cos * (a2 * G1) / a1 +
                      0.25 * osc.envelope_sin_over_omega *
                          (a2 * G1 * g.gamma3 + 2.0 * om2) / a1;
  return fast + G1 / (2.0 * sum) + G1 * (om2 - 2.0 * a1) * slow / (2.0 * sum * a1);
}

double population_kernel_sum(double t2, const SystemParams& params) {
  return g_pop(Level::a, Level::a, t2, params) +
         g_pop(Level::a, Level::b, t2, params) +
         g_pop(Level::b, Level::a, t2, params) +
         g_pop(Level::b, Level::b, t2, params);
}

std::optional<TroughPair> trough_positions(const SystemParams& params) {
  params.validate();
  if (params.Omega <= 0.0) return std::nullopt;
  const DerivedRates g = derive_rates(params);
  if (g.gamma1 <= 0.0) return std::nullopt;
  const double q = 4.0 * g.gamma1 * g.gamma2 + params.Omega * params.Omega;
  const double radicand =
      (params.Omega * (g.gamma1 + g.gamma2) * std::sqrt(q) - g.gamma2 * q) / g.gamma1;
  if (radicand <= 0.0) return std::nullopt;
  const double half_split = 0.5 * std::sqrt(radicand);
  return TroughPair{params.omega_ab - half_split, params.omega_ab + half_split};
}

std::optional<TroughPair> trough_positions_scan(const SystemParams& params,
                                                double step) {
  params.validate();
  if (!(step > 0.0)) throw ConfigError("scan step must be > 0");
  const double half_range = 3.0 * std::max(params.Omega, 10.0 * step);
  const auto n = static_cast<std::size_t>(std::floor(half_range / step));
  std::vector<double> omega(2 * n + 1);
  for (std::size_t i = 0; i < omega.size(); ++i) {
    omega[i] = params.omega_ab + (static_cast<double>(i) - static_cast<double>(n)) * step;
  }
  const DerivedRates g = derive_rates(params);
  const kernels::CoherenceGreenCoeffs coeffs{params.omega_ab, g.gamma1, g.gamma2,
                                             params.Omega, +1.0};
  std::vector<double> re(omega.size()), im(omega.size());
  kernels::coherence_green_row(omega, coeffs, re, im);

  // One minimum of Im on each side of line center, parabolic sub-grid
  // refinement on the winner. A winner adjacent to the center node means the
  // double-trough structure is unresolved at this step size.
  auto refine = [&](std::size_t lo, std::size_t hi) -> std::optional<double> {
    std::size_t best = lo;
    for (std::size_t i = lo; i < hi; ++i) {
      if (im[i] < im[best]) best = i;
    }
    if (best == 0 || best + 1 >= omega.size()) return std::nullopt;
    if (best + 2 > n && best < n + 2) return std::nullopt;  // touches center
    const double y0 = im[best - 1], y1 = im[best], y2 = im[best + 1];
    const double denom = y0 - 2.0 * y1 + y2;
    double offset = 0.0;
    if (denom != 0.0) offset = 0.5 * (y0 - y2) / denom;
    return omega[best] + offset * step;
  };
  const auto lo_min = refine(0, n);                  // strictly below center
  const auto hi_min = refine(n + 1, omega.size());   // strictly above center
  if (!lo_min || !hi_min) return std::nullopt;
  if (*lo_min >= params.omega_ab || *hi_min <= params.omega_ab) return std::nullopt;
  return TroughPair{*lo_min, *hi_min};
}

}  // namespace eit2des
