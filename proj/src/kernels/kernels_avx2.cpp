// AVX2 variants of the grid kernels, 4 lanes per iteration with a scalar
// tail. Operation order matches the scalar reference exactly (mul/add/sub/div
// only, no FMA) so results are bit-identical to it.

#include "kernels_impl.hpp"

#if EIT2DES_HAVE_AVX2_KERNELS

#include <immintrin.h>

namespace eit2des::kernels::detail {

void coherence_green_row_avx2(std::span<const double> omega,
                              const CoherenceGreenCoeffs& c, std::span<double> re,
                              std::span<double> im) {
  const std::size_t n = omega.size();
  const double g1s_s = c.gamma1 * c.sign;
  const double g2s_s = c.gamma2 * c.sign;
  const __m256d w0 = _mm256_set1_pd(c.omega_ab);
  const __m256d g12 = _mm256_set1_pd(g1s_s * g2s_s);
  const __m256d gsum = _mm256_set1_pd(g1s_s + g2s_s);
  const __m256d om2 = _mm256_set1_pd(c.omega_rabi * c.omega_rabi);
  const __m256d four = _mm256_set1_pd(4.0);

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d w = _mm256_loadu_pd(omega.data() + i);
    const __m256d d = _mm256_sub_pd(w, w0);
    const __m256d d2 = _mm256_mul_pd(d, d);
    const __m256d den_re =
        _mm256_sub_pd(_mm256_mul_pd(four, _mm256_sub_pd(d2, g12)), om2);
    const __m256d den_im = _mm256_mul_pd(_mm256_mul_pd(four, d), gsum);
    const __m256d num_re = _mm256_mul_pd(four, d);
    const __m256d num_im = _mm256_set1_pd(4.0 * g2s_s);
    const __m256d den_sq = _mm256_add_pd(_mm256_mul_pd(den_re, den_re),
                                         _mm256_mul_pd(den_im, den_im));
    const __m256d out_re = _mm256_div_pd(
        _mm256_add_pd(_mm256_mul_pd(num_re, den_re), _mm256_mul_pd(num_im, den_im)),
        den_sq);
    const __m256d out_im = _mm256_div_pd(
        _mm256_sub_pd(_mm256_mul_pd(num_im, den_re), _mm256_mul_pd(num_re, den_im)),
        den_sq);
    _mm256_storeu_pd(re.data() + i, out_re);
    _mm256_storeu_pd(im.data() + i, out_im);
  }
  for (; i < n; ++i) {
    const GreenLane lane = coherence_green_lane(omega[i], c);
    re[i] = lane.re;
    im[i] = lane.im;
  }
}

void real_outer_product_avx2(std::span<const double> re_row,
                             std::span<const double> im_row,
                             std::span<const double> re_col,
                             std::span<const double> im_col, double scale,
                             std::span<double> dst) {
  const std::size_t cols = re_col.size();
  const __m256d s = _mm256_set1_pd(scale);
  for (std::size_t r = 0; r < re_row.size(); ++r) {
    const __m256d rr = _mm256_set1_pd(re_row[r]);
    const __m256d ri = _mm256_set1_pd(im_row[r]);
    double* out = dst.data() + r * cols;
    std::size_t c = 0;
    for (; c + 4 <= cols; c += 4) {
      const __m256d cr = _mm256_loadu_pd(re_col.data() + c);
      const __m256d ci = _mm256_loadu_pd(im_col.data() + c);
      const __m256d v =
          _mm256_mul_pd(s, _mm256_sub_pd(_mm256_mul_pd(rr, cr), _mm256_mul_pd(ri, ci)));
      _mm256_storeu_pd(out + c, v);
    }
    const double rr_s = re_row[r];
    const double ri_s = im_row[r];
    for (; c < cols; ++c) {
      out[c] = scale * (rr_s * re_col[c] - ri_s * im_col[c]);
    }
  }
}

}  // namespace eit2des::kernels::detail

#endif  // EIT2DES_HAVE_AVX2_KERNELS
