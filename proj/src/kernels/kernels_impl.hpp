#pragma once

// Shared per-lane arithmetic for the scalar reference kernels. The SIMD
// variants must mirror these operations one-for-one (plain mul/add/sub/div,
// no fused contractions; the build sets -ffp-contract=off) so that every
// lane is bit-identical to the scalar path.

#include "eit2des/kernels.hpp"

namespace eit2des::kernels::detail {

struct GreenLane {
  double re;
  double im;
};

inline GreenLane coherence_green_lane(double omega, const CoherenceGreenCoeffs& c) {
  const double d = omega - c.omega_ab;
  const double g1s = c.gamma1 * c.sign;
  const double g2s = c.gamma2 * c.sign;
  // 4 (d + i g1s)(d + i g2s) - Om^2 = 4 (d^2 - g1 g2) - Om^2 + i 4 d (g1s + g2s)
  const double den_re = 4.0 * (d * d - g1s * g2s) - c.omega_rabi * c.omega_rabi;
  const double den_im = 4.0 * d * (g1s + g2s);
  const double num_re = 4.0 * d;
  const double num_im = 4.0 * g2s;
  const double den_sq = den_re * den_re + den_im * den_im;
  return GreenLane{(num_re * den_re + num_im * den_im) / den_sq,
                   (num_im * den_re - num_re * den_im) / den_sq};
}

void coherence_green_row_scalar(std::span<const double> omega,
                                const CoherenceGreenCoeffs& c, std::span<double> re,
                                std::span<double> im);

void real_outer_product_scalar(std::span<const double> re_row,
                               std::span<const double> im_row,
                               std::span<const double> re_col,
                               std::span<const double> im_col, double scale,
                               std::span<double> dst);

#if defined(__x86_64__) || defined(_M_X64)
#define EIT2DES_HAVE_AVX2_KERNELS 1
void coherence_green_row_avx2(std::span<const double> omega,
                              const CoherenceGreenCoeffs& c, std::span<double> re,
                              std::span<double> im);

void real_outer_product_avx2(std::span<const double> re_row,
                             std::span<const double> im_row,
                             std::span<const double> re_col,
                             std::span<const double> im_col, double scale,
                             std::span<double> dst);
#else
#define EIT2DES_HAVE_AVX2_KERNELS 0
#endif

}  // namespace eit2des::kernels::detail
