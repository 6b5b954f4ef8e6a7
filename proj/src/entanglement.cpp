#include "gpc/entanglement.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "gpc/errors.hpp"
#include "gpc/ladder.hpp"

namespace gpc {

ModeId scenario_photon_k1() { return photon_mode(Momentum::plus, Polarization::plus, 1); }
ModeId scenario_photon_k2() { return photon_mode(Momentum::plus, Polarization::plus, 2); }
ModeId scenario_graviton_k1() { return graviton_mode(Momentum::plus, Polarization::plus, 1); }

FockSpace scenario_space(int n_max) {
  return build_space({scenario_photon_k1(), scenario_photon_k2(), scenario_graviton_k1()}, n_max);
}

// ---------------------------------------------------------------- measures

double von_neumann_entropy(const DensityMatrix& rho) {
  const auto& m = rho.entries();
  if (hermiticity_defect(m) > 1e-8) throw DomainError("density matrix is not Hermitian");
  const Complex tr = m.trace();
  if (std::abs(tr - Complex{1.0, 0.0}) > 1e-8) {
    throw DomainError("density matrix trace " + std::to_string(tr.real()) + " != 1");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericError("eigen-decomposition failed");
  double s = 0.0;
  for (Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double p = solver.eigenvalues()[i];
    if (p > 0.0) s -= p * std::log(p);
  }
  return std::max(s, 0.0);
}

double entanglement_entropy(const StateVector& psi, std::span<const ModeId> keep) {
  return von_neumann_entropy(partial_trace(psi, keep));
}

double logarithmic_negativity(const StateVector& psi, const BipartitionSpec& partition) {
  const FockSpace& space = psi.space();
  if (partition.side_a.empty() || partition.side_b.empty()) {
    throw DomainError("bipartition sides must be non-empty");
  }
  std::vector<int> owner(space.num_modes(), -1);
  auto claim = [&](const std::vector<ModeId>& side, int id) {
    for (const auto& m : side) {
      const std::size_t s = space.slot(m);
      if (owner[s] != -1) throw DomainError("bipartition sides overlap on " + to_string(m));
      owner[s] = id;
    }
  };
  claim(partition.side_a, 0);
  claim(partition.side_b, 1);
  for (int o : owner) {
    if (o == -1) throw DomainError("bipartition does not cover every mode");
  }

  const FockSpace space_a(partition.side_a, space.n_max(), static_cast<std::size_t>(space.dim()));
  const FockSpace space_b(partition.side_b, space.n_max(), static_cast<std::size_t>(space.dim()));
  const Index da = space_a.dim();
  const Index db = space_b.dim();
  if (space.dim() > kDenseDimensionLimit) {
    throw ResourceError("partial transpose exceeds the dense limit");
  }

  // psi as a (da x db) matrix.
  Eigen::MatrixXcd m(da, db);
  for (Index i = 0; i < space.dim(); ++i) {
    Index ia = 0;
    for (std::size_t k = 0; k < partition.side_a.size(); ++k) {
      ia += space.occupation(i, space.slot(partition.side_a[k])) * space_a.stride(k);
    }
    Index ib = 0;
    for (std::size_t k = 0; k < partition.side_b.size(); ++k) {
      ib += space.occupation(i, space.slot(partition.side_b[k])) * space_b.stride(k);
    }
    m(ia, ib) = psi[i];
  }

  // (rho^{T_B})_{(a b),(a' b')} = psi_{a b'} psi^*_{a' b}.
  Eigen::MatrixXcd pt(da * db, da * db);
  for (Index a = 0; a < da; ++a) {
    for (Index b = 0; b < db; ++b) {
      for (Index a2 = 0; a2 < da; ++a2) {
        for (Index b2 = 0; b2 < db; ++b2) {
          pt(a * db + b, a2 * db + b2) = m(a, b2) * std::conj(m(a2, b));
        }
      }
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(pt, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericError("eigen-decomposition failed");
  const double trace_norm = solver.eigenvalues().cwiseAbs().sum();
  return std::max(0.0, std::log(trace_norm));
}

// ---------------------------------------------------------------- unitaries

OperatorMatrix beam_splitter_unitary(const FockSpace& space, const ModeId& photon,
                                     const ModeId& graviton, double strength) {
  if (!std::isfinite(strength)) throw DomainError("conversion strength must be finite");
  const Complex pref{0.0, -strength};
  LadderPolynomial q;
  q.add(pref, {lower(graviton), raise(photon)});
  q.add(-pref, {raise(graviton), lower(photon)});
  return matrix_exponential(Complex{0.0, -1.0} * to_matrix(space, q));
}

OperatorMatrix exchange_unitary(const FockSpace& space, const ModeId& photon,
                                const ModeId& graviton, double theta) {
  if (!std::isfinite(theta)) throw DomainError("conversion strength must be finite");
  const std::size_t sp = space.slot(photon);
  const std::size_t sg = space.slot(graviton);
  if (sp == sg) throw DomainError("exchange needs two distinct modes");
  if (space.dim() > kDenseDimensionLimit) throw ResourceError("operator exceeds dense limit");
  Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(space.dim(), space.dim());
  for (Index i = 0; i < space.dim(); ++i) {
    const int np = space.occupation(i, sp);
    const int ng = space.occupation(i, sg);
    const Index j = i + (ng - np) * space.stride(sp) + (np - ng) * space.stride(sg);
    x(j, i) = 1.0;
  }
  // X^2 = 1, so exp(i theta (1 - X)) = e^{i theta} (cos theta - i sin theta X).
  const Complex phase = std::polar(1.0, theta);
  Eigen::MatrixXcd u = phase * (std::cos(theta) * Eigen::MatrixXcd::Identity(space.dim(), space.dim()) -
                                Complex{0.0, std::sin(theta)} * x);
  return OperatorMatrix(space, std::move(u));
}

OperatorMatrix conditional_exchange_unitary(const FockSpace& space, const ModeId& photon,
                                            const ModeId& graviton, const ModeId& control,
                                            double theta) {
  const std::size_t sc = space.slot(control);
  if (control == photon || control == graviton) {
    throw DomainError("control mode must differ from the exchanged pair");
  }
  OperatorMatrix u = exchange_unitary(space, photon, graviton, theta);
  // The exchange conserves the control occupation, so zeroing the occupied
  // blocks and putting 1 on their diagonal keeps U block unitary.
  for (Index i = 0; i < space.dim(); ++i) {
    if (space.occupation(i, sc) == 0) continue;
    u.entries().col(i).setZero();
    u.entries()(i, i) = 1.0;
  }
  return u;
}

// ---------------------------------------------------------------- scenarios

namespace {

StateVector superpose(const FockSpace& space, std::initializer_list<std::array<int, 3>> terms) {
  const std::array<std::size_t, 3> slots{space.slot(scenario_photon_k1()),
                                         space.slot(scenario_photon_k2()),
                                         space.slot(scenario_graviton_k1())};
  StateVector psi(space);
  for (const auto& occ : terms) {
    std::vector<int> full(space.num_modes(), 0);
    for (int k = 0; k < 3; ++k) full[slots[k]] = occ[k];
    psi.amplitudes()[space.index_of(full)] += 1.0;
  }
  return normalize(psi);
}

ScenarioReport run(const OperatorMatrix& u, const StateVector& initial, const StateVector& target) {
  if (unitarity_defect(u.entries()) > 1e-10) {
    throw DomainError("conversion map is not unitary");
  }
  const FockSpace& space = u.space();
  const std::vector<ModeId> k2{scenario_photon_k2()};
  const std::vector<ModeId> k1{scenario_photon_k1()};
  std::vector<ModeId> rest;
  for (const auto& m : space.modes()) {
    if (m != scenario_photon_k2()) rest.push_back(m);
  }

  StateVector final_state = apply(u, initial);
  ScenarioReport report{initial, final_state};
  report.entropy_before = entanglement_entropy(initial, k2);
  report.entropy_after = entanglement_entropy(final_state, k2);
  report.entropy_photon_k1_after = entanglement_entropy(final_state, k1);
  report.negativity_after = logarithmic_negativity(final_state, {k2, rest});
  report.fidelity_to_target = std::norm(inner(target, final_state));
  return report;
}

}  // namespace

StateVector swap_initial_state(const FockSpace& space) {
  return superpose(space, {{1, 0, 0}, {0, 1, 0}});
}

StateVector swap_target_state(const FockSpace& space) {
  return superpose(space, {{0, 0, 1}, {0, 1, 0}});
}

StateVector generation_initial_state(const FockSpace& space) {
  return superpose(space, {{0, 0, 1}, {0, 1, 1}});
}

StateVector generation_target_state(const FockSpace& space) {
  return superpose(space, {{1, 0, 0}, {0, 1, 1}});
}

ScenarioReport run_swap_scenario(const OperatorMatrix& conversion_unitary) {
  const FockSpace& space = conversion_unitary.space();
  return run(conversion_unitary, swap_initial_state(space), swap_target_state(space));
}

ScenarioReport run_generation_scenario(const OperatorMatrix& conversion_unitary) {
  const FockSpace& space = conversion_unitary.space();
  return run(conversion_unitary, generation_initial_state(space), generation_target_state(space));
}

}  // namespace gpc
