#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "eit2des/params.hpp"

namespace eit2des {

/// Rectangular (omega1, omega3) grid at fixed waiting time t2.
struct SpectralGrid {
  double omega1_min, omega1_max, omega1_step;  ///< cm^-1
  double omega3_min, omega3_max, omega3_step;  ///< cm^-1
  double t2 = 0.0;                             ///< ps

  void validate() const;  ///< throws ConfigError on bad axes or t2 < 0

  std::size_t n1() const;
  std::size_t n3() const;
  double omega1(std::size_t i) const { return omega1_min + static_cast<double>(i) * omega1_step; }
  double omega3(std::size_t i) const { return omega3_min + static_cast<double>(i) * omega3_step; }

  /// Default axes used for the reference figures: omega_ab +/- 150 cm^-1 at
  /// 0.5 cm^-1 steps on both sides.
  static SpectralGrid centered_default(double omega_ab);
};

enum class SignalKind { rephasing, nonrephasing, absorptive };

const char* signal_kind_name(SignalKind kind);

struct Spectrum2D {
  SpectralGrid grid;
  std::vector<double> values;  ///< row-major, rows = omega3, cols = omega1
  SignalKind kind;
  bool control_on;

  double at(std::size_t i3, std::size_t i1) const {
    return values[i3 * grid.n1() + i1];
  }
};

enum class PopulationKernel { aa_aa, bb_aa, aa_bb, bb_bb };
enum class CoherenceSlot { ba_ba, ab_ab };

/// One Liouville-pathway contribution before the real part is taken: a t2
/// population kernel times the two coherence propagators. The four kernels
/// against the fixed detection propagator exhaust each signal's sum.
struct PathwayTerm {
  PopulationKernel t2_kernel;
  CoherenceSlot omega1_propagator;
  std::complex<double> value;
};

/// The four pathway products making up the rephasing (omega1 slot: ba,ba) or
/// non-rephasing (omega1 slot: ab,ab) signal at one grid point. `absorptive`
/// is not a pathway decomposition and is rejected.
std::array<PathwayTerm, 4> pathway_terms(double omega3, double t2, double omega1,
                                         const SystemParams& params, SignalKind kind);

double rephasing_point(double omega3, double t2, double omega1,
                       const SystemParams& params);
double nonrephasing_point(double omega3, double t2, double omega1,
                          const SystemParams& params);
double absorptive_point(double omega3, double t2, double omega1,
                        const SystemParams& params);

/// Evaluates the chosen signal on every grid node; control_on = false forces
/// Omega = 0. Grids above 1e8 nodes are rejected with ConfigError.
Spectrum2D compute_spectrum(const SpectralGrid& grid, SignalKind kind,
                            const SystemParams& params, bool control_on);

}  // namespace eit2des
