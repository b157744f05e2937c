#include "eit2des/lindblad.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "eit2des/errors.hpp"
#include "eit2des/units.hpp"

namespace eit2des {

namespace {

using Complex = std::complex<double>;
using State = std::array<Complex, 9>;

// Flat indices into the row-major 3x3 layout over {a, b, c}.
enum : int { AA = 0, AB = 1, AC = 2, BA = 3, BB = 4, BC = 5, CA = 6, CB = 7, CC = 8 };

// The nine element equations with rates in cm^-1.
State rhs_flat(const State& r, const SystemParams& p, const DerivedRates& g) {
  const Complex ihalf_om(0.0, 0.5 * p.Omega);
  State d;
  d[BB] = p.Gamma1 * r[AA] - p.Gamma2 * r[BB];
  d[BA] = -ihalf_om * r[BC] - g.gamma1 * r[BA];
  d[BC] = -ihalf_om * r[BA] - g.gamma2 * r[BC];
  d[AB] = ihalf_om * r[CB] - g.gamma1 * r[AB];
  d[AA] = ihalf_om * (r[CA] - r[AC]) - p.Gamma1 * r[AA] + p.Gamma2 * r[BB];
  d[AC] = ihalf_om * (r[CC] - r[AA]) - g.gamma3 * r[AC];
  d[CB] = ihalf_om * r[AB] - g.gamma2 * r[CB];
  d[CA] = ihalf_om * (r[AA] - r[CC]) - g.gamma3 * r[CA];
  d[CC] = ihalf_om * (r[AC] - r[CA]);
  return d;
}

bool finite(const State& s) {
  for (const auto& e : s) {
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
  }
  return true;
}

// One classical RK4 step of size h (ps) on the angular-rate-scaled equations.
template <typename Rhs>
void rk4_step(State& y, double h, const Rhs& f) {
  State k1 = f(y);
  State t;
  for (int i = 0; i < 9; ++i) t[i] = y[i] + 0.5 * h * k1[i];
  State k2 = f(t);
  for (int i = 0; i < 9; ++i) t[i] = y[i] + 0.5 * h * k2[i];
  State k3 = f(t);
  for (int i = 0; i < 9; ++i) t[i] = y[i] + h * k3[i];
  State k4 = f(t);
  for (int i = 0; i < 9; ++i) {
    y[i] += (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
}

double max_rate_angular(const SystemParams& p) {
  const DerivedRates g = derive_rates(p);
  const double m = std::max({p.Gamma1, p.Gamma2, g.gamma1, g.gamma2, g.gamma3,
                             p.Omega, p.Gamma1 + p.Gamma2});
  return to_angular_rate(m);
}

}  // namespace

void PropagationSettings::validate(const SystemParams& params) const {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw ConfigError("dt must be finite and > 0");
  }
  if (!(t_max >= 0.0) || !std::isfinite(t_max)) {
    throw ConfigError("t_max must be finite and >= 0");
  }
  const double stiffness = dt * max_rate_angular(params);
  if (stiffness >= 0.1) {
    throw ConfigError("dt too large for the given rates: dt * max_rate = " +
                      std::to_string(stiffness) + " (must be < 0.1)");
  }
}

DensityMatrix master_equation_rhs(const DensityMatrix& rho, const SystemParams& params) {
  const DerivedRates g = derive_rates(params);
  const State d = rhs_flat(rho.raw(), params, g);
  DensityMatrix out;
  out.raw() = d;
  return out;
}

void propagate_observe(const DensityMatrix& rho0, const SystemParams& params,
                       const PropagationSettings& settings,
                       const std::function<void(double, const DensityMatrix&)>& observer) {
  params.validate();
  settings.validate(params);
  const DerivedRates g = derive_rates(params);
  const double scale = to_angular_rate(1.0);
  auto f = [&](const State& y) {
    State d = rhs_flat(y, params, g);
    for (auto& e : d) e *= scale;
    return d;
  };

  DensityMatrix rho = rho0;
  observer(0.0, rho);
  const long nsteps = std::lround(settings.t_max / settings.dt);
  State y = rho.raw();
  for (long n = 1; n <= nsteps; ++n) {
    rk4_step(y, settings.dt, f);
    if (!finite(y)) {
      throw NumericalError("propagation produced a non-finite state at t = " +
                           std::to_string(n * settings.dt) + " ps");
    }
    rho.raw() = y;
    observer(n * settings.dt, rho);
  }
}

PropagationResult propagate(const DensityMatrix& rho0, const SystemParams& params,
                            const PropagationSettings& settings) {
  PropagationResult result;
  const long nsteps = std::lround(settings.t_max / settings.dt);
  result.times.reserve(nsteps + 1);
  result.states.reserve(nsteps + 1);
  propagate_observe(rho0, params, settings,
                    [&](double t, const DensityMatrix& rho) {
                      result.times.push_back(t);
                      result.states.push_back(rho);
                    });
  return result;
}

std::vector<double> oracle_green_population(Level start, Level end,
                                            const SystemParams& params,
                                            std::span<const double> t2_list,
                                            double dt) {
  if (start == Level::c || end == Level::c) {
    throw ConfigError("population oracle is defined for levels a and b only");
  }
  for (std::size_t i = 0; i < t2_list.size(); ++i) {
    if (!(t2_list[i] >= 0.0)) throw ConfigError("t2 values must be >= 0");
    if (i > 0 && t2_list[i] < t2_list[i - 1]) {
      throw ConfigError("t2 values must be ascending");
    }
  }
  params.validate();
  PropagationSettings probe{dt, 0.0};
  probe.validate(params);

  const DerivedRates g = derive_rates(params);
  const double scale = to_angular_rate(1.0);
  auto f = [&](const State& y) {
    State d = rhs_flat(y, params, g);
    for (auto& e : d) e *= scale;
    return d;
  };

  State y = DensityMatrix::pure(start).raw();
  const int end_idx = (end == Level::a) ? AA : BB;
  std::vector<double> out;
  out.reserve(t2_list.size());
  double t = 0.0;
  for (double t2 : t2_list) {
    while (t2 - t > dt * (1.0 + 1e-12)) {
      rk4_step(y, dt, f);
      t += dt;
    }
    // Sample with one partial step; the main trajectory stays on the uniform
    // grid so later t2 values reuse it.
    State ys = y;
    if (t2 > t) rk4_step(ys, t2 - t, f);
    if (!finite(ys)) {
      throw NumericalError("population oracle produced a non-finite state");
    }
    out.push_back(ys[end_idx].real());
  }
  return out;
}

std::vector<Complex> oracle_green_coherence(CoherencePair pair,
                                            const SystemParams& params,
                                            const PropagationSettings& settings) {
  params.validate();
  settings.validate(params);
  const DerivedRates g = derive_rates(params);
  const double scale = to_angular_rate(1.0);
  // Closed subsystem: d/dt (ab, cb) = ((i/2)Om cb - g1 ab, (i/2)Om ab - g2 cb);
  // the (ba, bc) pair obeys the complex conjugate equations.
  const Complex coupling = (pair == CoherencePair::ab) ? Complex(0.0, 0.5 * params.Omega)
                                                       : Complex(0.0, -0.5 * params.Omega);
  auto f = [&](const std::array<Complex, 2>& y) {
    return std::array<Complex, 2>{scale * (coupling * y[1] - g.gamma1 * y[0]),
                                  scale * (coupling * y[0] - g.gamma2 * y[1])};
  };

  std::array<Complex, 2> y{1.0, 0.0};
  const long nsteps = std::lround(settings.t_max / settings.dt);
  std::vector<Complex> out;
  out.reserve(nsteps + 1);
  out.push_back(y[0]);
  for (long n = 1; n <= nsteps; ++n) {
    std::array<Complex, 2> k1 = f(y);
    std::array<Complex, 2> t{y[0] + 0.5 * settings.dt * k1[0], y[1] + 0.5 * settings.dt * k1[1]};
    std::array<Complex, 2> k2 = f(t);
    t = {y[0] + 0.5 * settings.dt * k2[0], y[1] + 0.5 * settings.dt * k2[1]};
    std::array<Complex, 2> k3 = f(t);
    t = {y[0] + settings.dt * k3[0], y[1] + settings.dt * k3[1]};
    std::array<Complex, 2> k4 = f(t);
    y[0] += (settings.dt / 6.0) * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
    y[1] += (settings.dt / 6.0) * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);
    if (!std::isfinite(y[0].real()) || !std::isfinite(y[0].imag())) {
      throw NumericalError("coherence oracle produced a non-finite state");
    }
    out.push_back(y[0]);
  }
  return out;
}

std::complex<double> coherence_transform(std::span<const Complex> series, double dt,
                                         CoherencePair pair, double omega,
                                         const SystemParams& params) {
  // Trapezoid quadrature; the series has decayed to negligible amplitude by
  // the end of the window, so a rectangular window adds no leakage.
  const double sign = (pair == CoherencePair::ab) ? 1.0 : -1.0;
  const double dphi = sign * to_angular_rate(omega - params.omega_ab) * dt;
  const Complex rot(std::cos(dphi), std::sin(dphi));
  Complex phase(1.0, 0.0);
  Complex acc(0.0, 0.0);
  for (std::size_t n = 0; n < series.size(); ++n) {
    const double w = (n == 0 || n + 1 == series.size()) ? 0.5 : 1.0;
    acc += w * series[n] * phase;
    phase *= rot;
  }
  // dt in ps -> per-cm^-1 measure
  return acc * (dt * to_angular_rate(1.0));
}

}  // namespace eit2des
