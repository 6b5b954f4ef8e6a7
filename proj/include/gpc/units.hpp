#pragma once

// Natural-unit conversion table (hbar = c = 1, Heaviside-Lorentz).
// Every conversion in the library and the CLI goes through these constants.

#include <numbers>

namespace gpc::units {

/// 1 tesla expressed in eV^2.
inline constexpr double kEv2PerTesla = 195.35;

/// 1 meter expressed in eV^-1.
inline constexpr double kInvEvPerMeter = 5.0677e6;

/// hbar in eV s: an angular frequency of 1 rad/s is this many eV.
inline constexpr double kEvPerRadPerSecond = 6.582119569e-16;

/// Reduced Planck mass 1/sqrt(8 pi G) in eV.
inline constexpr double kReducedPlanckMassEv = 2.435e27;

inline constexpr double tesla_to_ev2(double tesla) { return tesla * kEv2PerTesla; }
inline constexpr double meter_to_inv_ev(double meter) { return meter * kInvEvPerMeter; }

/// Ordinary frequency f in Hz to the photon energy omega = 2 pi f in eV.
inline constexpr double hertz_to_ev(double hertz) {
  return 2.0 * std::numbers::pi * hertz * kEvPerRadPerSecond;
}

}  // namespace gpc::units
