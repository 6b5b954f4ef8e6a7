#pragma once

// Squeezing of the primordial gravitational-wave background.
//
// Modes below the comoving cutoff k_c = 2 pi f_c are in a two-mode squeezed
// vacuum with cosh 2z ~ sinh 2z ~ (k_c/k)^4 = (f_c/f)^4. The amplitude is
// extracted from the cosh branch, which is exact at f = f_c (z = 0).

#include "gpc/gaussian.hpp"

namespace gpc {

struct PrimordialSpectrum {
  double cutoff_hz = 1e9;
};

/// z = arccosh((f_c/f)^4) / 2 and chi. RangeError unless 0 < f <= f_c.
TwoModeSqueezeParams squeeze_amplitude(const PrimordialSpectrum& spectrum, double frequency_hz,
                                       double chi = 0.0);

/// cosh^2 z = ((f_c/f)^4 + 1) / 2.
double enhancement_factor(const PrimordialSpectrum& spectrum, double frequency_hz);

/// z extracted from the sinh branch, arcsinh((f_c/f)^4)/2, minus the cosh
/// branch. Large at f ~ f_c, vanishing deep in the squeezed regime.
double sinh_branch_discrepancy(const PrimordialSpectrum& spectrum, double frequency_hz);

}  // namespace gpc
