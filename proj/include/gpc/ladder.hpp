#pragma once

// Symbolic sums of products of ladder operators.
//
// Every generator in the library (Q, W, displacement, squeezing) is a short
// polynomial in a, a^dagger over a handful of modes. Keeping it symbolic
// lets the same object be materialized as a dense matrix on small spaces or
// applied matrix-free to states on spaces far too large for dense storage.

#include <initializer_list>
#include <vector>

#include "gpc/fock.hpp"

namespace gpc {

struct LadderFactor {
  ModeId mode;
  bool dagger = false;
};

inline LadderFactor lower(const ModeId& mode) { return {mode, false}; }
inline LadderFactor raise(const ModeId& mode) { return {mode, true}; }

/// coefficient * f_0 f_1 ... f_{n-1}; f_{n-1} acts first on a ket.
struct LadderTerm {
  Complex coefficient;
  std::vector<LadderFactor> factors;
};

class LadderPolynomial {
 public:
  LadderPolynomial() = default;
  LadderPolynomial(std::initializer_list<LadderTerm> terms) : terms_(terms) {}

  LadderPolynomial& add(Complex coefficient, std::vector<LadderFactor> factors);
  LadderPolynomial& operator+=(const LadderPolynomial& other);

  const std::vector<LadderTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Upper bound on the operator 2-norm of the truncated representation.
  double norm_bound(int n_max) const;

 private:
  std::vector<LadderTerm> terms_;
};

LadderPolynomial operator*(Complex scale, LadderPolynomial poly);
LadderPolynomial operator+(LadderPolynomial lhs, const LadderPolynomial& rhs);
/// Hermitian conjugate: conjugated coefficients, reversed daggered factors.
LadderPolynomial adjoint(const LadderPolynomial& poly);

/// Dense matrix of `poly` on `space`. LookupError for foreign modes,
/// ResourceError above kDenseDimensionLimit.
OperatorMatrix to_matrix(const FockSpace& space, const LadderPolynomial& poly);

/// poly |psi> without materializing a matrix.
StateVector apply(const LadderPolynomial& poly, const StateVector& psi);

/// exp(poly) |psi> by a substepped Taylor series. Intended for
/// anti-Hermitian generators of moderate norm.
StateVector exp_apply(const LadderPolynomial& poly, const StateVector& psi);

}  // namespace gpc
