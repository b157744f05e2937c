#pragma once

#include <numbers>

namespace eit2des {

// Speed of light in cm/ps. All spectral quantities in this library are
// wavenumbers (cm^-1); time enters only through rate*time products, converted
// once with 2*pi*c.
inline constexpr double kSpeedOfLightCmPerPs = 0.0299792458;

// 1 cm^-1 expressed as an angular rate, rad/ps.
inline constexpr double kAngularRatePerWavenumber =
    2.0 * std::numbers::pi * kSpeedOfLightCmPerPs;

/// Wavenumber (cm^-1) -> angular rate (rad/ps).
constexpr double to_angular_rate(double wavenumber) {
  return kAngularRatePerWavenumber * wavenumber;
}

/// Angular rate (rad/ps) -> wavenumber (cm^-1).
constexpr double from_angular_rate(double angular_rate) {
  return angular_rate / kAngularRatePerWavenumber;
}

}  // namespace eit2des
