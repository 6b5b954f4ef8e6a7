#include "gpc/conversion.hpp"

#include <cmath>

#include "gpc/errors.hpp"

namespace gpc {

void validate(const CouplingConfig& config) {
  if (!std::isfinite(config.lambda) || config.lambda < 0.0) {
    throw DomainError("coupling lambda must be finite and >= 0");
  }
  if (!std::isfinite(config.t) || config.t < 0.0) {
    throw DomainError("interaction time must be finite and >= 0");
  }
  if (!std::isfinite(config.k) || config.k <= 0.0) throw DomainError("k must be positive");
  if (!std::isfinite(config.strength())) throw DomainError("lambda t is not finite");
}

Complex f_of_t(Polarization polarization, double k, double t) {
  if (!(k > 0.0)) throw DomainError("f_k(t) needs k > 0");
  const Complex plus = std::sin(k * t) / k * std::polar(1.0, -k * t);
  return polarization == Polarization::plus ? plus : -plus;
}

std::vector<ModeId> sector_modes(Polarization polarization) {
  return {graviton_mode(Momentum::plus, polarization), graviton_mode(Momentum::minus, polarization),
          photon_mode(Momentum::plus, polarization), photon_mode(Momentum::minus, polarization)};
}

LadderPolynomial q_generator(const CouplingConfig& config, const SectorSpec& sector) {
  validate(config);
  const auto p = sector.polarization;
  const ModeId a = graviton_mode(Momentum::plus, p);
  const ModeId b = photon_mode(Momentum::plus, p);
  const ModeId b_mirror = photon_mode(Momentum::minus, p);
  const Complex pref{0.0, -config.lambda};  // -i lambda

  LadderPolynomial q;
  q.add(pref * config.t, {lower(a), raise(b)});
  q.add(-pref * config.t, {raise(a), lower(b)});
  if (sector.include_counter_rotating) {
    const Complex f = f_of_t(p, config.k, config.t);
    q.add(pref * f, {lower(a), lower(b_mirror)});
    q.add(-pref * std::conj(f), {raise(a), raise(b_mirror)});
  }
  return q;
}

LadderPolynomial w_generator(const CouplingConfig& config, const SectorSpec& sector) {
  validate(config);
  const auto p = sector.polarization;
  const ModeId a = graviton_mode(Momentum::plus, p);
  const ModeId b = photon_mode(Momentum::plus, p);
  const Complex pref{0.0, config.lambda};  // i lambda

  LadderPolynomial w;
  w.add(pref * config.t, {raise(a), lower(b)});
  if (sector.include_counter_rotating) {
    const Complex f = f_of_t(p, config.k, config.t);
    w.add(pref * std::conj(f), {raise(a), raise(photon_mode(Momentum::minus, p))});
  }
  return w;
}

namespace {

void require_sector_modes(const FockSpace& space, const SectorSpec& sector) {
  const auto p = sector.polarization;
  std::vector<ModeId> needed{graviton_mode(Momentum::plus, p), photon_mode(Momentum::plus, p)};
  if (sector.include_counter_rotating) needed.push_back(photon_mode(Momentum::minus, p));
  for (const auto& m : needed) {
    if (!space.contains(m)) {
      throw ConfigError("space lacks mode " + to_string(m) + " required by the sector");
    }
  }
}

}  // namespace

OperatorMatrix build_q(const FockSpace& space, const CouplingConfig& config,
                       const SectorSpec& sector) {
  require_sector_modes(space, sector);
  return to_matrix(space, q_generator(config, sector));
}

OperatorMatrix build_w(const FockSpace& space, const CouplingConfig& config,
                       const SectorSpec& sector) {
  require_sector_modes(space, sector);
  return to_matrix(space, w_generator(config, sector));
}

OperatorMatrix evolve(const OperatorMatrix& q) {
  const double scale = std::max(1.0, max_abs(q.entries()));
  if (hermiticity_defect(q.entries()) > 1e-12 * scale) {
    throw DomainError("evolve needs a Hermitian generator");
  }
  return matrix_exponential(Complex{0.0, -1.0} * q);
}

// ------------------------------------------------------- analytic results

double photon_enhancement(const SqueezeParams& s, const CoherentParams& c) {
  const double a = photon_norm_const(s, c);
  return 1.0 / (a * a);
}

double graviton_enhancement(const TwoModeSqueezeParams& g) {
  const double ch = std::cosh(g.z);
  return ch * ch;
}

namespace {

LeadingOrderProbability leading(const CouplingConfig& config, double factor) {
  validate(config);
  const double lt = config.strength();
  return {lt * lt * factor, lt <= kPerturbativeLimit};
}

}  // namespace

LeadingOrderProbability prob_vacuum(const CouplingConfig& config) { return leading(config, 1.0); }

LeadingOrderProbability prob_squeezed_coherent(const CouplingConfig& config,
                                               const SqueezeParams& s, const CoherentParams& c) {
  return leading(config, photon_enhancement(s, c));
}

LeadingOrderProbability prob_primordial(const CouplingConfig& config, const SqueezeParams& s,
                                        const CoherentParams& c, const TwoModeSqueezeParams& g) {
  if (!std::isfinite(g.z) || g.z < 0.0) throw DomainError("z must be finite and >= 0");
  return leading(config, photon_enhancement(s, c) * graviton_enhancement(g));
}

// ------------------------------------------------------------ amplitudes

Complex first_order_amplitude(const OperatorMatrix& q, const StateVector& initial,
                              const StateVector& final_state) {
  return Complex{0.0, -1.0} * inner(final_state, apply(q, initial));
}

Complex first_order_amplitude(const LadderPolynomial& q, const StateVector& initial,
                              const StateVector& final_state) {
  return Complex{0.0, -1.0} * inner(final_state, apply(q, initial));
}

double transition_prob(const OperatorMatrix& u, const StateVector& initial,
                       const StateVector& final_state) {
  return std::norm(inner(final_state, apply(u, initial)));
}

}  // namespace gpc
