#include "gpc/cosmology.hpp"

#include <cmath>
#include <string>

#include "gpc/errors.hpp"

namespace gpc {

namespace {

double quartic_ratio(const PrimordialSpectrum& spectrum, double frequency_hz) {
  if (!(spectrum.cutoff_hz > 0.0) || !std::isfinite(spectrum.cutoff_hz)) {
    throw RangeError("cutoff frequency must be positive");
  }
  if (!(frequency_hz > 0.0) || frequency_hz > spectrum.cutoff_hz) {
    throw RangeError("frequency " + std::to_string(frequency_hz) +
                     " Hz outside (0, f_c = " + std::to_string(spectrum.cutoff_hz) + "]");
  }
  const double ratio = spectrum.cutoff_hz / frequency_hz;
  const double r2 = ratio * ratio;
  return r2 * r2;
}

}  // namespace

TwoModeSqueezeParams squeeze_amplitude(const PrimordialSpectrum& spectrum, double frequency_hz,
                                       double chi) {
  return {0.5 * std::acosh(quartic_ratio(spectrum, frequency_hz)), chi};
}

double enhancement_factor(const PrimordialSpectrum& spectrum, double frequency_hz) {
  return 0.5 * (quartic_ratio(spectrum, frequency_hz) + 1.0);
}

double sinh_branch_discrepancy(const PrimordialSpectrum& spectrum, double frequency_hz) {
  const double q = quartic_ratio(spectrum, frequency_hz);
  return 0.5 * std::asinh(q) - 0.5 * std::acosh(q);
}

}  // namespace gpc
