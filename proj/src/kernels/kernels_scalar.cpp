#include "kernels_impl.hpp"

namespace eit2des::kernels::detail {

void coherence_green_row_scalar(std::span<const double> omega,
                                const CoherenceGreenCoeffs& c, std::span<double> re,
                                std::span<double> im) {
  for (std::size_t i = 0; i < omega.size(); ++i) {
    const GreenLane lane = coherence_green_lane(omega[i], c);
    re[i] = lane.re;
    im[i] = lane.im;
  }
}

void real_outer_product_scalar(std::span<const double> re_row,
                               std::span<const double> im_row,
                               std::span<const double> re_col,
                               std::span<const double> im_col, double scale,
                               std::span<double> dst) {
  const std::size_t cols = re_col.size();
  for (std::size_t r = 0; r < re_row.size(); ++r) {
    const double rr = re_row[r];
    const double ri = im_row[r];
    double* out = dst.data() + r * cols;
    for (std::size_t c = 0; c < cols; ++c) {
      out[c] = scale * (rr * re_col[c] - ri * im_col[c]);
    }
  }
}

}  // namespace eit2des::kernels::detail
