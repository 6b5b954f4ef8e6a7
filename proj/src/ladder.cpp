#include "gpc/ladder.hpp"

#include <algorithm>
#include <cmath>

#include "gpc/errors.hpp"

namespace gpc {

namespace {

struct ResolvedTerm {
  Complex coefficient;
  // (slot, dagger) in application order: first entry acts first.
  std::vector<std::pair<std::size_t, bool>> steps;
};

std::vector<ResolvedTerm> resolve(const FockSpace& space, const LadderPolynomial& poly) {
  std::vector<ResolvedTerm> out;
  out.reserve(poly.terms().size());
  for (const auto& term : poly.terms()) {
    ResolvedTerm r{term.coefficient, {}};
    for (auto it = term.factors.rbegin(); it != term.factors.rend(); ++it) {
      r.steps.emplace_back(space.slot(it->mode), it->dagger);
    }
    out.push_back(std::move(r));
  }
  return out;
}

// Image of basis state `col` under one monomial: target index and weight.
// Returns false when the monomial annihilates the state (including pushes
// past n_max).
bool act(const FockSpace& space, const ResolvedTerm& term, Index col, Index& row,
         double& weight) {
  row = col;
  weight = 1.0;
  const int n_max = space.n_max();
  for (const auto& [slot, dagger] : term.steps) {
    const int n = space.occupation(row, slot);
    if (dagger) {
      if (n == n_max) return false;
      weight *= std::sqrt(static_cast<double>(n + 1));
      row += space.stride(slot);
    } else {
      if (n == 0) return false;
      weight *= std::sqrt(static_cast<double>(n));
      row -= space.stride(slot);
    }
  }
  return true;
}

}  // namespace

LadderPolynomial& LadderPolynomial::add(Complex coefficient, std::vector<LadderFactor> factors) {
  terms_.push_back({coefficient, std::move(factors)});
  return *this;
}

LadderPolynomial& LadderPolynomial::operator+=(const LadderPolynomial& other) {
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

double LadderPolynomial::norm_bound(int n_max) const {
  double bound = 0.0;
  for (const auto& term : terms_) {
    bound += std::abs(term.coefficient) *
             std::pow(static_cast<double>(n_max), 0.5 * static_cast<double>(term.factors.size()));
  }
  return bound;
}

LadderPolynomial operator*(Complex scale, LadderPolynomial poly) {
  LadderPolynomial out;
  for (const auto& term : poly.terms()) out.add(scale * term.coefficient, term.factors);
  return out;
}

LadderPolynomial operator+(LadderPolynomial lhs, const LadderPolynomial& rhs) {
  lhs += rhs;
  return lhs;
}

LadderPolynomial adjoint(const LadderPolynomial& poly) {
  LadderPolynomial out;
  for (const auto& term : poly.terms()) {
    std::vector<LadderFactor> factors(term.factors.rbegin(), term.factors.rend());
    for (auto& f : factors) f.dagger = !f.dagger;
    out.add(std::conj(term.coefficient), std::move(factors));
  }
  return out;
}

OperatorMatrix to_matrix(const FockSpace& space, const LadderPolynomial& poly) {
  const Index dim = space.dim();
  if (dim > kDenseDimensionLimit) {
    throw ResourceError("dense operator of dimension " + std::to_string(dim) +
                        " exceeds the dense limit " + std::to_string(kDenseDimensionLimit));
  }
  const auto resolved = resolve(space, poly);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& term : resolved) {
    for (Index col = 0; col < dim; ++col) {
      Index row;
      double w;
      if (act(space, term, col, row, w)) m(row, col) += term.coefficient * w;
    }
  }
  return OperatorMatrix(space, std::move(m));
}

StateVector apply(const LadderPolynomial& poly, const StateVector& psi) {
  const FockSpace& space = psi.space();
  const auto resolved = resolve(space, poly);
  const auto& in = psi.amplitudes();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(space.dim());
  for (const auto& term : resolved) {
    for (Index col = 0; col < space.dim(); ++col) {
      if (in[col] == Complex{}) continue;
      Index row;
      double w;
      if (act(space, term, col, row, w)) out[row] += term.coefficient * w * in[col];
    }
  }
  return StateVector(space, std::move(out));
}

StateVector exp_apply(const LadderPolynomial& poly, const StateVector& psi) {
  const double bound = poly.norm_bound(psi.space().n_max());
  // Each substep has ||A/s|| <= 1/2 so the Taylor tail falls off geometrically.
  const int substeps = std::max(1, static_cast<int>(std::ceil(2.0 * bound)));
  const Complex scale{1.0 / substeps, 0.0};
  const LadderPolynomial step = scale * poly;

  StateVector v = psi;
  for (int s = 0; s < substeps; ++s) {
    StateVector term = v;
    Eigen::VectorXcd acc = v.amplitudes();
    const double ref = std::max(v.norm(), 1e-300);
    for (int order = 1; order < 200; ++order) {
      term = apply(step, term);
      term.amplitudes() /= static_cast<double>(order);
      acc += term.amplitudes();
      if (term.norm() < 1e-17 * ref) break;
    }
    v = StateVector(psi.space(), std::move(acc));
  }
  return v;
}

}  // namespace gpc
