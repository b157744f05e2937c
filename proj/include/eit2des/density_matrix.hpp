#pragma once

#include <array>
#include <complex>

namespace eit2des {

enum class Level : int { a = 0, b = 1, c = 2 };

/// 3x3 complex density matrix of the three-level system, row-major over
/// {a, b, c}. Hermiticity is enforced at construction and preserved by
/// propagation up to integrator roundoff.
class DensityMatrix {
 public:
  using Complex = std::complex<double>;

  DensityMatrix() : m_{} {}

  /// Pure state |level><level|.
  static DensityMatrix pure(Level level);

  /// Builds from a full set of elements, symmetrizing r <- (r + r^dagger)/2.
  /// Throws ConfigError if the Hermiticity defect of the input exceeds `tol`
  /// or the trace deviates from 1 by more than `tol`.
  static DensityMatrix from_elements(const std::array<Complex, 9>& elements,
                                     double tol = 1e-9);

  Complex operator()(Level row, Level col) const {
    return m_[3 * static_cast<int>(row) + static_cast<int>(col)];
  }
  Complex& operator()(Level row, Level col) {
    return m_[3 * static_cast<int>(row) + static_cast<int>(col)];
  }

  double population(Level level) const {
    return (*this)(level, level).real();
  }

  double trace_real() const;

  /// max_jk |rho_jk - conj(rho_kj)|
  double hermiticity_defect() const;

  /// Smallest eigenvalue of the (symmetrized) matrix; closed-form solution of
  /// the characteristic cubic. Used for numerical-positivity checks.
  double min_eigenvalue() const;

  const std::array<Complex, 9>& raw() const { return m_; }
  std::array<Complex, 9>& raw() { return m_; }

 private:
  std::array<Complex, 9> m_;
};

}  // namespace eit2des
