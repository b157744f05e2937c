#include "eit2des/kernels.hpp"

#include "eit2des/errors.hpp"
#include "kernels_impl.hpp"

namespace eit2des::kernels {

namespace {

bool cpu_has_avx2() {
#if EIT2DES_HAVE_AVX2_KERNELS
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

SimdLevel detect_level() {
  return cpu_has_avx2() ? SimdLevel::avx2 : SimdLevel::scalar;
}

SimdLevel& current_level() {
  static SimdLevel level = detect_level();
  return level;
}

}  // namespace

bool simd_level_available(SimdLevel level) {
  switch (level) {
    case SimdLevel::scalar:
      return true;
    case SimdLevel::avx2:
      return cpu_has_avx2();
  }
  return false;
}

SimdLevel active_simd_level() { return current_level(); }

const char* simd_level_name(SimdLevel level) {
  switch (level) {
    case SimdLevel::scalar:
      return "scalar";
    case SimdLevel::avx2:
      return "avx2";
  }
  return "unknown";
}

void force_simd_level(std::optional<SimdLevel> level) {
  if (!level) {
    current_level() = detect_level();
    return;
  }
  if (!simd_level_available(*level)) {
    throw ConfigError(std::string("SIMD level not available on this CPU: ") +
                      simd_level_name(*level));
  }
  current_level() = *level;
}

void coherence_green_row(std::span<const double> omega, const CoherenceGreenCoeffs& c,
                         std::span<double> re, std::span<double> im) {
#if EIT2DES_HAVE_AVX2_KERNELS
  if (current_level() == SimdLevel::avx2) {
    detail::coherence_green_row_avx2(omega, c, re, im);
    return;
  }
#endif
  detail::coherence_green_row_scalar(omega, c, re, im);
}

void real_outer_product(std::span<const double> re_row, std::span<const double> im_row,
                        std::span<const double> re_col, std::span<const double> im_col,
                        double scale, std::span<double> dst) {
#if EIT2DES_HAVE_AVX2_KERNELS
  if (current_level() == SimdLevel::avx2) {
    detail::real_outer_product_avx2(re_row, im_row, re_col, im_col, scale, dst);
    return;
  }
#endif
  detail::real_outer_product_scalar(re_row, im_row, re_col, im_col, scale, dst);
}

}  // namespace eit2des::kernels
