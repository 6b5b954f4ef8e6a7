#pragma once

// Displacement, single-mode squeezing and two-mode squeezing on a truncated
// Fock space, plus the normalization constants of the single-particle-added
// states built from them.
//
//   D(beta) = exp[beta b^dagger - beta^* b]
//   S(zeta) = exp[-(zeta^* b^2 - zeta b^dagger^2) / 2],         zeta = r e^{i phi}
//   S2(xi)  = exp[-xi^* a(k) a(-k) + xi a^dagger(k) a^dagger(-k)], xi = z e^{i chi}
//
// S2 carries no factor 1/2. Operators are exponentials of the truncated
// generators and therefore exactly unitary on the truncated space; their
// matrix elements converge to the untruncated ones only away from n_max,
// which is what the convergence guards protect.
//
// A squeezed coherent state is S(zeta) D(beta)|0>, in that order.

#include "gpc/fock.hpp"
#include "gpc/ladder.hpp"

namespace gpc {

struct CoherentParams {
  Complex beta{0.0, 0.0};
};

struct SqueezeParams {
  double r = 0.0;
  double phi = 0.0;

  Complex zeta() const { return std::polar(r, phi); }
};

struct TwoModeSqueezeParams {
  double z = 0.0;
  double chi = 0.0;

  Complex xi() const { return std::polar(z, chi); }
};

/// Squeezing in decibels, 10 log10 e^{2r}.
double squeeze_db_to_r(double db);
double squeeze_r_to_db(double r);

/// Smallest n_max that the guard of each parameter type accepts.
int required_n_max(const CoherentParams& c);
int required_n_max(const SqueezeParams& s);
int required_n_max(const TwoModeSqueezeParams& g);

/// Throw PreconditionError (with the required cutoff) when violated.
void check_guard(const FockSpace& space, const CoherentParams& c);
void check_guard(const FockSpace& space, const SqueezeParams& s);
void check_guard(const FockSpace& space, const TwoModeSqueezeParams& g);

LadderPolynomial displacement_generator(const ModeId& mode, const CoherentParams& c);
LadderPolynomial squeeze_generator(const ModeId& mode, const SqueezeParams& s);
LadderPolynomial two_mode_squeeze_generator(const ModeId& mode_a, const ModeId& mode_b,
                                            const TwoModeSqueezeParams& g);

OperatorMatrix displacement_op(const FockSpace& space, const ModeId& mode,
                               const CoherentParams& c);
OperatorMatrix squeeze_op(const FockSpace& space, const ModeId& mode, const SqueezeParams& s);
/// DomainError when mode_a == mode_b.
OperatorMatrix two_mode_squeeze_op(const FockSpace& space, const ModeId& mode_a,
                                   const ModeId& mode_b, const TwoModeSqueezeParams& g);

/// S(zeta) D(beta)|0> on `mode`, vacuum elsewhere. Built on the single-mode
/// space and embedded, so it works on spaces too large for dense operators.
StateVector squeezed_coherent_state(const FockSpace& space, const ModeId& mode,
                                    const SqueezeParams& s, const CoherentParams& c);
/// S2(xi)|0> on (mode_a, mode_b), vacuum elsewhere.
StateVector two_mode_squeezed_vacuum(const FockSpace& space, const ModeId& mode_a,
                                     const ModeId& mode_b, const TwoModeSqueezeParams& g);

/// max |(S^dagger b S - b cosh r - b^dagger e^{i phi} sinh r)_{mn}| over
/// m, n <= n_max/2 of `space`. The conjugation is evaluated on a single-mode
/// working space whose cutoff is raised until the block has converged, so
/// the truncation edge never reaches the block being checked.
double bogoliubov_residual(const FockSpace& space, const ModeId& mode, const SqueezeParams& s);

/// Same construction for D^dagger b D - (b + beta).
double displacement_residual(const FockSpace& space, const ModeId& mode,
                             const CoherentParams& c);

/// A_gamma: inverse norm of b^dagger S(zeta) D(beta)|0>.
double photon_norm_const(const SqueezeParams& s, const CoherentParams& c);
/// A_g = 1 / cosh z: inverse norm of a^dagger(k) S2(xi)|0>.
double graviton_norm_const(const TwoModeSqueezeParams& g);

}  // namespace gpc
