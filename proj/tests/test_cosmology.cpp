#include <cmath>

#include "doctest.h"
#include "gpc/cosmology.hpp"
#include "gpc/errors.hpp"

using namespace gpc;

TEST_CASE("squeeze amplitude") {
  const PrimordialSpectrum spec{1e9};
  CHECK(squeeze_amplitude(spec, 1e9).z == 0.0);
  const auto z100 = squeeze_amplitude(spec, 1e8);
  CHECK(std::abs(std::cosh(2 * z100.z) - 1e4) < 1e-8);
  CHECK(std::abs(z100.z - 4.951744) < 1e-6);
  const auto z500 = squeeze_amplitude(spec, 5e8, 0.25);
  CHECK(std::abs(std::cosh(2 * z500.z) - 16.0) < 1e-12);
  CHECK(std::abs(z500.z - 1.732378) < 1e-6);
  CHECK(z500.chi == 0.25);
}

TEST_CASE("enhancement factor") {
  const PrimordialSpectrum spec{1e9};
  CHECK(enhancement_factor(spec, 1e9) == 1.0);
  CHECK(enhancement_factor(spec, 1e8) == (1e4 + 1.0) / 2.0);
  const double z = squeeze_amplitude(spec, 1e8).z;
  CHECK(std::abs(enhancement_factor(spec, 1e8) - std::cosh(z) * std::cosh(z)) < 1e-8);
  // doubling f divides cosh 2z by 16
  for (double f : {1e7, 3e7, 2e8}) {
    const double a = std::cosh(2 * squeeze_amplitude(spec, f).z);
    const double b = std::cosh(2 * squeeze_amplitude(spec, 2 * f).z);
    CHECK(std::abs(a / b - 16.0) < 1e-9);
  }
}

TEST_CASE("range errors") {
  const PrimordialSpectrum spec{1e9};
  CHECK_THROWS_AS(squeeze_amplitude(spec, 2e9), RangeError);
  CHECK_THROWS_AS(squeeze_amplitude(spec, 0.0), RangeError);
  CHECK_THROWS_AS(enhancement_factor(PrimordialSpectrum{-1.0}, 1.0), RangeError);
}

TEST_CASE("sinh branch discrepancy shrinks deep in the squeezed regime") {
  const PrimordialSpectrum spec{1e9};
  CHECK(sinh_branch_discrepancy(spec, 1e9) > 0.4);
  CHECK(std::abs(sinh_branch_discrepancy(spec, 1e8)) < 1e-8);
}
