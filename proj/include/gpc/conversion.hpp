#pragma once

// Photon-graviton conversion in a static transverse magnetic field.
//
// For one polarization sector P and one wavevector pair (k, -k), the
// time-integrated interaction is
//
//   Q = -i lambda [ t (a b^dagger - a^dagger b)
//                   + f(t) a b(-k) - f^*(t) a^dagger b^dagger(-k) ]
//
// with a = a_P(k) the graviton and b = b_P(k) the photon annihilator,
// f_+(t) = sin(kt)/k e^{-ikt} and f_x = -f_+. The evolution is U = exp(-iQ).
// The first bracket is the rotating (number-conserving) part; the f-terms
// are the counter-rotating pair terms connecting k and -k.

#include "gpc/fock.hpp"
#include "gpc/gaussian.hpp"
#include "gpc/ladder.hpp"

namespace gpc {

struct CouplingConfig {
  double lambda = 0.0;  // eV
  double t = 0.0;       // eV^-1, interaction time = propagation length
  double k = 1.0;       // eV, |k| = omega

  double strength() const { return lambda * t; }
};

struct SectorSpec {
  Polarization polarization = Polarization::plus;
  bool include_counter_rotating = true;
};

/// Leading-order probability. `within_guard` is false when lambda t exceeds
/// the perturbative limit; the value is still reported, never clamped.
struct LeadingOrderProbability {
  double value = 0.0;
  bool within_guard = true;
};

inline constexpr double kPerturbativeLimit = 0.3;

void validate(const CouplingConfig& config);

Complex f_of_t(Polarization polarization, double k, double t);

/// The four modes of a sector in canonical order
/// (graviton +k, graviton -k, photon +k, photon -k).
std::vector<ModeId> sector_modes(Polarization polarization);

LadderPolynomial q_generator(const CouplingConfig& config, const SectorSpec& sector);
LadderPolynomial w_generator(const CouplingConfig& config, const SectorSpec& sector);

/// Hermitian matrix of Q on `space`; ConfigError if a required mode is
/// missing.
OperatorMatrix build_q(const FockSpace& space, const CouplingConfig& config,
                       const SectorSpec& sector);
OperatorMatrix build_w(const FockSpace& space, const CouplingConfig& config,
                       const SectorSpec& sector);

/// exp(-iQ). DomainError if Q is not Hermitian within 1e-12.
OperatorMatrix evolve(const OperatorMatrix& q);

LeadingOrderProbability prob_vacuum(const CouplingConfig& config);
LeadingOrderProbability prob_squeezed_coherent(const CouplingConfig& config,
                                               const SqueezeParams& s, const CoherentParams& c);
LeadingOrderProbability prob_primordial(const CouplingConfig& config, const SqueezeParams& s,
                                        const CoherentParams& c, const TwoModeSqueezeParams& g);

/// Enhancement of the squeezed-coherent photon state over a single photon:
/// cosh^2 r + |beta|^2 (cosh 2r + cos(2 arg beta - phi) sinh 2r).
double photon_enhancement(const SqueezeParams& s, const CoherentParams& c);
/// cosh^2 z.
double graviton_enhancement(const TwoModeSqueezeParams& g);

/// <final| (-iQ) |initial>.
Complex first_order_amplitude(const OperatorMatrix& q, const StateVector& initial,
                              const StateVector& final_state);
/// Matrix-free variant for spaces beyond the dense limit.
Complex first_order_amplitude(const LadderPolynomial& q, const StateVector& initial,
                              const StateVector& final_state);

/// |<final|U|initial>|^2.
double transition_prob(const OperatorMatrix& u, const StateVector& initial,
                       const StateVector& final_state);

}  // namespace gpc
