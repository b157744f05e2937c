#pragma once

namespace eit2des {

/// Physical parameters of the Lambda-type three-level system. All rates and
/// the a<->b transition frequency are wavenumbers (cm^-1); this struct is the
/// single source of truth for a run.
///
/// The control field is hard-wired to exact resonance with the a<->c
/// transition and all transition dipole moments are 1, so neither a control
/// detuning nor dipole matrix elements appear here.
struct SystemParams {
  double omega_ab = 12579.0;  ///< a<->b transition frequency
  double Gamma1 = 1.0;        ///< downhill relaxation rate a->b
  double Gamma2 = 0.0001;     ///< uphill relaxation rate b->a
  double gamma0_a = 80.0;     ///< pure dephasing of state a
  double gamma0_b = 1.0;      ///< pure dephasing of state b
  double gamma0_c = 1.0;      ///< pure dephasing of state c
  double Omega = 50.0;        ///< control-field Rabi frequency

  /// Throws ConfigError naming the offending field unless all rates are
  /// non-negative, omega_ab > 0 and Gamma1 + Gamma2 > 0.
  void validate() const;

  /// Copy with the control field switched off.
  SystemParams without_control() const {
    SystemParams p = *this;
    p.Omega = 0.0;
    return p;
  }
};

/// Composite decoherence rates and the generalized Rabi frequency, cm^-1.
///
/// omega_tilde is reported as the real magnitude (1/2)*sqrt(|4 Omega^2 -
/// gamma3^2|); `oscillatory` tells which side of critical damping it sits on.
struct DerivedRates {
  double gamma1;       ///< a<->b coherence decay, (Gamma1+ga0+Gamma2+gb0)/2
  double gamma2;       ///< b<->c coherence decay, (Gamma2+gb0+gc0)/2
  double gamma3;       ///< a<->c coherence decay, (Gamma1+ga0+gc0)/2
  double omega_tilde;  ///< (1/2)*sqrt(|4 Omega^2 - gamma3^2|)
  bool oscillatory;    ///< true iff 4 Omega^2 > gamma3^2
};

DerivedRates derive_rates(const SystemParams& params);

}  // namespace eit2des
