#pragma once

#include <optional>
#include <span>

namespace eit2des::kernels {

/// Coefficients of the two-coherence frequency propagator
///   4 (w + i s g2 - w0) / (4 (w + i s g1 - w0)(w + i s g2 - w0) - Om^2)
/// with s = +1 for the detection (ab) propagator and s = -1 for the
/// excitation (ba) one.
struct CoherenceGreenCoeffs {
  double omega_ab;
  double gamma1;
  double gamma2;
  double omega_rabi;
  double sign;  ///< +1.0 or -1.0
};

/// Evaluates the propagator over an array of frequencies into split
/// real/imaginary outputs. re/im must match omega in length.
void coherence_green_row(std::span<const double> omega,
                         const CoherenceGreenCoeffs& c, std::span<double> re,
                         std::span<double> im);

/// dst[r * cols + c] = scale * (re_row[r]*re_col[c] - im_row[r]*im_col[c]),
/// i.e. scale * Re(row_r * col_c) for complex rows/cols in split layout.
/// dst must have rows*cols elements.
void real_outer_product(std::span<const double> re_row, std::span<const double> im_row,
                        std::span<const double> re_col, std::span<const double> im_col,
                        double scale, std::span<double> dst);

enum class SimdLevel { scalar, avx2 };

/// Level the dispatcher currently routes to.
SimdLevel active_simd_level();

const char* simd_level_name(SimdLevel level);

/// Overrides runtime dispatch (testing / reproducibility across machines);
/// nullopt restores CPU detection. Requesting an unsupported level throws
/// ConfigError. All levels produce bit-identical results by construction;
/// equivalence is enforced by the test suite.
void force_simd_level(std::optional<SimdLevel> level);

/// True when the CPU (and build) support the given level.
bool simd_level_available(SimdLevel level);

}  // namespace eit2des::kernels
