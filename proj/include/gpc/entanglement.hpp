#pragma once

// Entanglement diagnostics and the two three-mode conversion scenarios.
//
// Modes: photon k1, photon k2, graviton k1. The conversion acts on the
// (photon k1, graviton k1) pair only.
//
//   swap:      (|100> + |010>)/sqrt2  ->  |0> (x) (|01> + |10>)/sqrt2
//   generate:  |0> (x) (|0> + |1>)/sqrt2 (x) |1>  ->  (|100> + |011>)/sqrt2
//
// (occupations listed as photon k1, photon k2, graviton k1.)

#include <span>
#include <vector>

#include "gpc/fock.hpp"

namespace gpc {

struct BipartitionSpec {
  std::vector<ModeId> side_a;
  std::vector<ModeId> side_b;
};

struct ScenarioReport {
  StateVector initial_state;
  StateVector final_state;
  double entropy_before = 0.0;  // nats, photon k2 | rest
  double entropy_after = 0.0;
  double negativity_after = 0.0;  // photon k2 | rest
  double fidelity_to_target = 0.0;
  double entropy_photon_k1_after = 0.0;
};

ModeId scenario_photon_k1();
ModeId scenario_photon_k2();
ModeId scenario_graviton_k1();
/// Space (photon k1, photon k2, graviton k1) with the given cutoff.
FockSpace scenario_space(int n_max = 1);

/// -sum p ln p over the spectrum. DomainError when rho is not Hermitian or
/// its trace differs from 1 by more than 1e-8.
double von_neumann_entropy(const DensityMatrix& rho);
/// Entropy of the reduced state on `keep`.
double entanglement_entropy(const StateVector& psi, std::span<const ModeId> keep);

/// ln || rho^{T_B} ||_1 for rho = |psi><psi|. DomainError for partitions
/// that overlap or do not cover every mode.
double logarithmic_negativity(const StateVector& psi, const BipartitionSpec& partition);

/// exp(-i Q_rot) for Q_rot = -i s (a b^dagger - a^dagger b) with a the
/// graviton and b the photon annihilator: the rotating conversion at
/// dimensionless strength s = lambda t.
OperatorMatrix beam_splitter_unitary(const FockSpace& space, const ModeId& photon,
                                     const ModeId& graviton, double strength);

/// exp(i theta (1 - X)) with X the operator exchanging the occupations of
/// the two modes. Populations follow the beam splitter (sin^2 theta
/// transfer); at theta = pi/2 it is X itself, so both flips of the
/// scenarios come with a + sign and applying it twice is the identity.
OperatorMatrix exchange_unitary(const FockSpace& space, const ModeId& photon,
                                const ModeId& graviton, double theta);

/// exchange_unitary on the sector where `control` is empty, identity where it
/// is occupied. This is the gate that flips |0,0,1> while leaving |0,1,1>
/// alone in the generation scenario; a mode-level exchange also moves the
/// second branch and the final state stays a product.
OperatorMatrix conditional_exchange_unitary(const FockSpace& space, const ModeId& photon,
                                            const ModeId& graviton, const ModeId& control,
                                            double theta);

ScenarioReport run_swap_scenario(const OperatorMatrix& conversion_unitary);
ScenarioReport run_generation_scenario(const OperatorMatrix& conversion_unitary);

/// Initial and target states of the two scenarios on `space`.
StateVector swap_initial_state(const FockSpace& space);
StateVector swap_target_state(const FockSpace& space);
StateVector generation_initial_state(const FockSpace& space);
StateVector generation_target_state(const FockSpace& space);

}  // namespace gpc
