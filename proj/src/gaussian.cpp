#include "gpc/gaussian.hpp"

#include <algorithm>
#include <cmath>

#include "gpc/errors.hpp"

namespace gpc {

double squeeze_db_to_r(double db) { return 0.5 * db * std::log(10.0) / 10.0; }

double squeeze_r_to_db(double r) { return 10.0 * std::log10(std::exp(2.0 * r)); }

// ------------------------------------------------------------------ guards

int required_n_max(const CoherentParams& c) {
  return std::max(1, static_cast<int>(std::ceil(4.0 * std::norm(c.beta) - 1e-12)));
}

int required_n_max(const SqueezeParams& s) {
  const double sh = std::sinh(s.r);
  return std::max(1, static_cast<int>(std::ceil(sh * sh - 1e-12)));
}

int required_n_max(const TwoModeSqueezeParams& g) {
  const double sh = std::sinh(g.z);
  return std::max(1, static_cast<int>(std::ceil(sh * sh - 1e-12)));
}

namespace {

template <typename Params>
void guard(const FockSpace& space, const Params& p, const char* what) {
  const int need = required_n_max(p);
  if (space.n_max() < need) {
    throw PreconditionError(std::string(what) + " needs n_max >= " + std::to_string(need) +
                                " (space has " + std::to_string(space.n_max()) + ")",
                            need);
  }
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw DomainError(std::string(what) + " must be finite");
}

}  // namespace

void check_guard(const FockSpace& space, const CoherentParams& c) {
  require_finite(c.beta.real(), "beta");
  require_finite(c.beta.imag(), "beta");
  guard(space, c, "coherent amplitude |beta|^2 <= n_max/4");
}

void check_guard(const FockSpace& space, const SqueezeParams& s) {
  require_finite(s.r, "r");
  if (s.r < 0.0) throw DomainError("squeezing amplitude r must be >= 0");
  guard(space, s, "squeezing sinh^2 r <= n_max");
}

void check_guard(const FockSpace& space, const TwoModeSqueezeParams& g) {
  require_finite(g.z, "z");
  if (g.z < 0.0) throw DomainError("two-mode squeezing amplitude z must be >= 0");
  guard(space, g, "two-mode squeezing sinh^2 z <= n_max");
}

// ------------------------------------------------------------- generators

LadderPolynomial displacement_generator(const ModeId& mode, const CoherentParams& c) {
  LadderPolynomial g;
  g.add(c.beta, {raise(mode)});
  g.add(-std::conj(c.beta), {lower(mode)});
  return g;
}

LadderPolynomial squeeze_generator(const ModeId& mode, const SqueezeParams& s) {
  const Complex zeta = s.zeta();
  LadderPolynomial g;
  g.add(-0.5 * std::conj(zeta), {lower(mode), lower(mode)});
  g.add(0.5 * zeta, {raise(mode), raise(mode)});
  return g;
}

LadderPolynomial two_mode_squeeze_generator(const ModeId& mode_a, const ModeId& mode_b,
                                            const TwoModeSqueezeParams& p) {
  if (mode_a == mode_b) throw DomainError("two-mode squeezing needs two distinct modes");
  const Complex xi = p.xi();
  LadderPolynomial g;
  g.add(-std::conj(xi), {lower(mode_a), lower(mode_b)});
  g.add(xi, {raise(mode_a), raise(mode_b)});
  return g;
}

OperatorMatrix displacement_op(const FockSpace& space, const ModeId& mode,
                               const CoherentParams& c) {
  space.slot(mode);
  check_guard(space, c);
  return matrix_exponential(to_matrix(space, displacement_generator(mode, c)));
}

OperatorMatrix squeeze_op(const FockSpace& space, const ModeId& mode, const SqueezeParams& s) {
  space.slot(mode);
  check_guard(space, s);
  return matrix_exponential(to_matrix(space, squeeze_generator(mode, s)));
}

OperatorMatrix two_mode_squeeze_op(const FockSpace& space, const ModeId& mode_a,
                                   const ModeId& mode_b, const TwoModeSqueezeParams& g) {
  if (mode_a == mode_b) throw DomainError("two-mode squeezing needs two distinct modes");
  space.slot(mode_a);
  space.slot(mode_b);
  check_guard(space, g);
  return matrix_exponential(to_matrix(space, two_mode_squeeze_generator(mode_a, mode_b, g)));
}

// ------------------------------------------------------------------ states

StateVector squeezed_coherent_state(const FockSpace& space, const ModeId& mode,
                                    const SqueezeParams& s, const CoherentParams& c) {
  space.slot(mode);
  check_guard(space, s);
  check_guard(space, c);
  const FockSpace single({mode}, space.n_max());
  const OperatorMatrix op = squeeze_op(single, mode, s) * displacement_op(single, mode, c);
  const StateVector factor = apply(op, vacuum(single));
  return product_state(space, std::span(&factor, 1));
}

StateVector two_mode_squeezed_vacuum(const FockSpace& space, const ModeId& mode_a,
                                     const ModeId& mode_b, const TwoModeSqueezeParams& g) {
  if (mode_a == mode_b) throw DomainError("two-mode squeezing needs two distinct modes");
  space.slot(mode_a);
  space.slot(mode_b);
  check_guard(space, g);
  const FockSpace pair({mode_a, mode_b}, space.n_max());
  const StateVector factor = apply(two_mode_squeeze_op(pair, mode_a, mode_b, g), vacuum(pair));
  return product_state(space, std::span(&factor, 1));
}

// --------------------------------------------------------- residual checks

namespace {

constexpr int kMaxWorkingCutoff = 1024;

// Converged max-norm of `residual(W)` on the [0, block] x [0, block] corner,
// doubling the working cutoff W until two successive values agree.
template <typename ResidualAt>
double converged_block_residual(int n_max, ResidualAt residual) {
  const Index block = n_max / 2 + 1;
  int working = std::max(64, 4 * n_max);
  double previous = max_abs(residual(working).topLeftCorner(block, block));
  while (working < kMaxWorkingCutoff) {
    working *= 2;
    const double current = max_abs(residual(working).topLeftCorner(block, block));
    if (std::abs(current - previous) < 1e-13 || current < 1e-13) return current;
    previous = current;
  }
  return previous;
}

}  // namespace

double bogoliubov_residual(const FockSpace& space, const ModeId& mode, const SqueezeParams& s) {
  space.slot(mode);
  require_finite(s.r, "r");
  const double ch = std::cosh(s.r);
  const Complex sh = std::polar(std::sinh(s.r), s.phi);
  return converged_block_residual(space.n_max(), [&](int working) {
    const FockSpace w({mode}, working);
    const Eigen::MatrixXcd sq = matrix_exponential(to_matrix(w, squeeze_generator(mode, s))).entries();
    const Eigen::MatrixXcd b = annihilator(w, mode).entries();
    return Eigen::MatrixXcd(sq.adjoint() * b * sq - ch * b - sh * b.adjoint());
  });
}

double displacement_residual(const FockSpace& space, const ModeId& mode,
                             const CoherentParams& c) {
  space.slot(mode);
  return converged_block_residual(space.n_max(), [&](int working) {
    const FockSpace w({mode}, working);
    const Eigen::MatrixXcd d =
        matrix_exponential(to_matrix(w, displacement_generator(mode, c))).entries();
    const Eigen::MatrixXcd b = annihilator(w, mode).entries();
    return Eigen::MatrixXcd(d.adjoint() * b * d - b -
                            c.beta * Eigen::MatrixXcd::Identity(w.dim(), w.dim()));
  });
}

// ---------------------------------------------------------- normalizations

double photon_norm_const(const SqueezeParams& s, const CoherentParams& c) {
  const double beta2 = std::norm(c.beta);
  const double ch = std::cosh(s.r);
  const double phase = 2.0 * std::arg(c.beta) - s.phi;
  const double inv_sq =
      ch * ch + beta2 * (std::cosh(2.0 * s.r) + std::cos(phase) * std::sinh(2.0 * s.r));
  return 1.0 / std::sqrt(inv_sq);
}

double graviton_norm_const(const TwoModeSqueezeParams& g) { return 1.0 / std::cosh(g.z); }

}  // namespace gpc
