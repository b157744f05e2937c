#include "eit2des/params.hpp"

#include <cmath>
#include <string>

#include "eit2des/errors.hpp"

namespace eit2des {

namespace {

void require_rate(double value, const char* name) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw ConfigError(std::string(name) + " must be a finite rate >= 0, got " +
                      std::to_string(value));
  }
}

}  // namespace

void SystemParams::validate() const {
  require_rate(Gamma1, "Gamma1");
  require_rate(Gamma2, "Gamma2");
  require_rate(gamma0_a, "gamma0_a");
  require_rate(gamma0_b, "gamma0_b");
  require_rate(gamma0_c, "gamma0_c");
  require_rate(Omega, "Omega");
  if (!(omega_ab > 0.0) || !std::isfinite(omega_ab)) {
    throw ConfigError("omega_ab must be finite and > 0, got " +
                      std::to_string(omega_ab));
  }
  // Steady-state expressions divide by Gamma1 + Gamma2.
  if (Gamma1 + Gamma2 <= 0.0) {
    throw ConfigError("Gamma1 + Gamma2 must be > 0");
  }
}

DerivedRates derive_rates(const SystemParams& p) {
  DerivedRates r{};
  r.gamma1 = 0.5 * (p.Gamma1 + p.gamma0_a + p.Gamma2 + p.gamma0_b);
  r.gamma2 = 0.5 * (p.Gamma2 + p.gamma0_b + p.gamma0_c);
  r.gamma3 = 0.5 * (p.Gamma1 + p.gamma0_a + p.gamma0_c);
  const double disc = 4.0 * p.Omega * p.Omega - r.gamma3 * r.gamma3;
  r.oscillatory = disc > 0.0;
  r.omega_tilde = 0.5 * std::sqrt(std::fabs(disc));
  return r;
}

}  // namespace eit2des
