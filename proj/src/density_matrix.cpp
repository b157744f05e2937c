#include "eit2des/density_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "eit2des/errors.hpp"

namespace eit2des {

DensityMatrix DensityMatrix::pure(Level level) {
  DensityMatrix rho;
  rho(level, level) = 1.0;
  return rho;
}

DensityMatrix DensityMatrix::from_elements(const std::array<Complex, 9>& elements,
                                           double tol) {
  DensityMatrix rho;
  rho.m_ = elements;
  const double defect = rho.hermiticity_defect();
  if (defect > tol) {
    throw ConfigError("density matrix is not Hermitian (defect " +
                      std::to_string(defect) + ")");
  }
  const double trace_err = std::fabs(rho.trace_real() - 1.0);
  if (trace_err > tol) {
    throw ConfigError("density matrix trace deviates from 1 by " +
                      std::to_string(trace_err));
  }
  for (int j = 0; j < 3; ++j) {
    for (int k = j + 1; k < 3; ++k) {
      const Complex avg = 0.5 * (rho.m_[3 * j + k] + std::conj(rho.m_[3 * k + j]));
      rho.m_[3 * j + k] = avg;
      rho.m_[3 * k + j] = std::conj(avg);
    }
    rho.m_[3 * j + j] = Complex(rho.m_[3 * j + j].real(), 0.0);
  }
  return rho;
}

double DensityMatrix::trace_real() const {
  return m_[0].real() + m_[4].real() + m_[8].real();
}

double DensityMatrix::hermiticity_defect() const {
  double defect = 0.0;
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      defect = std::max(defect, std::abs(m_[3 * j + k] - std::conj(m_[3 * k + j])));
    }
  }
  return defect;
}

double DensityMatrix::min_eigenvalue() const {
  // Symmetrize, then solve the real characteristic cubic of the Hermitian
  // matrix trigonometrically (all roots real).
  std::array<Complex, 9> h;
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      h[3 * j + k] = 0.5 * (m_[3 * j + k] + std::conj(m_[3 * k + j]));
    }
  }
  const double tr = h[0].real() + h[4].real() + h[8].real();
  double tr2 = 0.0;  // trace of H^2 = sum |h_jk|^2 for Hermitian H
  for (const auto& e : h) tr2 += std::norm(e);

  // Shift to the traceless part: eigenvalues = tr/3 + mu_i.
  const double q = tr / 3.0;
  const double p2 = tr2 - 3.0 * q * q;  // trace of (H - qI)^2
  if (p2 <= 0.0) return q;              // H proportional to identity
  const double p = std::sqrt(p2 / 6.0);
  std::array<Complex, 9> b = h;
  b[0] -= q;
  b[4] -= q;
  b[8] -= q;
  const Complex detm = b[0] * (b[4] * b[8] - b[5] * b[7]) -
                       b[1] * (b[3] * b[8] - b[5] * b[6]) +
                       b[2] * (b[3] * b[7] - b[4] * b[6]);
  double r = detm.real() / (2.0 * p * p * p);
  r = std::clamp(r, -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;
  // Smallest root of the trigonometric form.
  const double mu_min = 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
  return q + mu_min;
}

}  // namespace eit2des
