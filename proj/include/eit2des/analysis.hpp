#pragma once

#include <span>
#include <utility>
#include <vector>

#include "eit2des/params.hpp"
#include "eit2des/response.hpp"

namespace eit2des {

enum class ExtremumKind { maximum, minimum };

struct ExtremumReport {
  double omega1;  ///< cm^-1, refined position
  double omega3;  ///< cm^-1, refined position
  double value;   ///< signal amplitude at the grid node
  ExtremumKind kind;
  bool refined;        ///< parabolic sub-grid refinement applied
  double prominence;   ///< fraction of the spectrum's global range
};

/// Locates interior local extrema of a 2D spectrum whose topographic
/// prominence exceeds min_prominence (as a fraction of the global value
/// range). An extremum is the highest (lowest) node of a connected
/// superlevel (sublevel) region, found by a union-find sweep in value order;
/// its prominence is the height above the saddle where the region merges into
/// one containing a stronger extremum. Positions are refined by per-axis
/// parabolic interpolation. A constant spectrum yields an empty list.
/// Results are ordered maxima first, then by descending prominence.
std::vector<ExtremumReport> find_extrema(const Spectrum2D& spectrum,
                                         double min_prominence);

struct OscillationFit {
  double frequency;   ///< cm^-1
  double decay_rate;  ///< cm^-1
  double offset;      ///< trace units
  double amplitude;   ///< trace units
  double phase;       ///< rad
  double residual;    ///< RMS of the fit residual, never discarded
  bool oscillatory;   ///< false when the trace carries no significant cosine
};

/// Least-squares fit of offset + A e^{-kappa t} cos(omega t + phi) to a
/// (t2 [ps], value) trace. The frequency seed comes from a periodogram scan,
/// the decay seed from a coarse grid, both polished by Levenberg-Marquardt on
/// the two nonlinear parameters with the linear ones solved exactly. Requires
/// at least 20 samples. Throws FitError (with residual history) on
/// non-convergence.
OscillationFit fit_damped_oscillation(std::span<const std::pair<double, double>> trace);

struct SteadyStatePopulations {
  double p_a_start_a;
  double p_b_start_a;
  double p_a_start_b;
  double p_b_start_b;
};

/// Long-time limits of the four closed-form population kernels: the
/// control-on values for a start in |a> (half-weighted by the a<->c
/// manifold), the control-independent detailed-balance values for a start in
/// |b>. Throws NumericalError when Gamma1 + Gamma2 = 0.
SteadyStatePopulations steady_state_populations(const SystemParams& params);

}  // namespace eit2des
