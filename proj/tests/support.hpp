#pragma once

#include <cmath>
#include <random>

#include "gpc/fock.hpp"

namespace gpc::test {

inline bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

inline bool rel_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::abs(b);
}

// Normalized state with Gaussian random amplitudes.
inline StateVector random_state(const FockSpace& space, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  StateVector psi(space);
  for (Index i = 0; i < space.dim(); ++i) psi.amplitudes()[i] = Complex{normal(rng), normal(rng)};
  return normalize(psi);
}

}  // namespace gpc::test
