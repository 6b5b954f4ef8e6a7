#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "gpc/entanglement.hpp"
#include "gpc/errors.hpp"
#include "gpc/gaussian.hpp"
#include "support.hpp"

using namespace gpc;
using gpc::test::close;

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kHalfPi = std::numbers::pi / 2;

const ModeId gk = graviton_mode(Momentum::plus);
const ModeId gm = graviton_mode(Momentum::minus);

StateVector bell(const FockSpace& space) {
  StateVector psi(space);
  const std::vector<int> a{1, 0}, b{0, 1};
  psi.amplitudes()[space.index_of(a)] = 1.0;
  psi.amplitudes()[space.index_of(b)] = 1.0;
  return normalize(psi);
}

// Random single-mode phase rotation exp(-i theta n) on `mode`.
OperatorMatrix phase_rotation(const FockSpace& space, const ModeId& mode, double theta) {
  return matrix_exponential(Complex{0.0, -theta} * number_operator(space, mode));
}

}  // namespace

TEST_CASE("von Neumann entropy") {
  const FockSpace single({gk}, 1);
  const std::vector<int> one{1};
  CHECK(close(von_neumann_entropy(pure_density(basis_state(single, one))), 0.0, 1e-12));
  Eigen::MatrixXcd half = Eigen::MatrixXcd::Identity(2, 2) * 0.5;
  CHECK(close(von_neumann_entropy(DensityMatrix(single, half)), kLn2, 1e-15));
  CHECK_THROWS_AS(von_neumann_entropy(DensityMatrix(single, Eigen::MatrixXcd::Identity(2, 2))),
                  DomainError);

  const FockSpace pair({gk, gm}, 20);
  const double z = 0.5;
  const auto tms = two_mode_squeezed_vacuum(pair, gk, gm, {z, 0.0});
  const double c2 = std::cosh(z) * std::cosh(z), s2 = std::sinh(z) * std::sinh(z);
  const double expected = c2 * std::log(c2) - s2 * std::log(s2);  // 0.659453
  const std::vector<ModeId> keep{gk};
  CHECK(close(entanglement_entropy(tms, keep), expected, 1e-6));
  CHECK(close(expected, 0.659453, 1e-6));
}

TEST_CASE("logarithmic negativity") {
  const FockSpace pair({gk, gm}, 1);
  const std::vector<int> a{1, 0};
  const BipartitionSpec cut{{gk}, {gm}};
  CHECK(close(logarithmic_negativity(basis_state(pair, a), cut), 0.0, 1e-12));
  CHECK(close(logarithmic_negativity(bell(pair), cut), kLn2, 1e-12));

  const FockSpace big({gk, gm}, 20);
  const auto tms = two_mode_squeezed_vacuum(big, gk, gm, {0.4, 0.0});
  CHECK(close(logarithmic_negativity(tms, cut), 0.8, 2e-2));

  CHECK_THROWS_AS(logarithmic_negativity(bell(pair), {{gk}, {gk}}), DomainError);
  CHECK_THROWS_AS(logarithmic_negativity(bell(pair), {{gk}, {}}), DomainError);
  const FockSpace three({gk, gm, photon_mode()}, 1);
  CHECK_THROWS_AS(logarithmic_negativity(vacuum(three), {{gk}, {gm}}), DomainError);
}

TEST_CASE("negativity vanishes on random product states") {
  std::mt19937_64 rng(31);
  const FockSpace a({gk}, 3), b({gm}, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto psi = tensor_product(test::random_state(a, rng), test::random_state(b, rng));
    REQUIRE(logarithmic_negativity(psi, {{gk}, {gm}}) < 1e-10);
  }
}

TEST_CASE("entropy invariances") {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  const FockSpace space({gk, gm, photon_mode()}, 2);
  const std::vector<ModeId> side{gk};
  const std::vector<ModeId> rest{gm, photon_mode()};
  for (int trial = 0; trial < 10; ++trial) {
    const auto psi = test::random_state(space, rng);
    const double s = entanglement_entropy(psi, side);
    REQUIRE(close(s, entanglement_entropy(psi, rest), 1e-10));
    const auto rotated = apply(phase_rotation(space, gk, angle(rng)), psi);
    REQUIRE(close(s, entanglement_entropy(rotated, side), 1e-10));
  }
}

TEST_CASE("exchange and beam splitter maps") {
  const FockSpace space = scenario_space(2);
  const auto p = scenario_photon_k1(), g = scenario_graviton_k1();
  for (double theta : {0.0, 0.3, kHalfPi}) {
    REQUIRE(unitarity_defect(exchange_unitary(space, p, g, theta).entries()) < 1e-12);
    REQUIRE(unitarity_defect(beam_splitter_unitary(space, p, g, theta).entries()) < 1e-12);
    REQUIRE(unitarity_defect(
                conditional_exchange_unitary(space, p, g, scenario_photon_k2(), theta).entries()) <
            1e-12);
  }
  // same single-excitation populations
  const std::vector<int> photon{1, 0, 0}, graviton{0, 0, 1};
  const auto i = basis_state(space, photon);
  const auto f = basis_state(space, graviton);
  for (double theta : {0.2, 0.9, kHalfPi}) {
    const double ex = std::norm(inner(f, apply(exchange_unitary(space, p, g, theta), i)));
    const double bs = std::norm(inner(f, apply(beam_splitter_unitary(space, p, g, theta), i)));
    REQUIRE(close(ex, std::sin(theta) * std::sin(theta), 1e-12));
    REQUIRE(close(bs, ex, 1e-12));
  }
  CHECK_THROWS_AS(exchange_unitary(space, p, p, 1.0), DomainError);
  CHECK_THROWS_AS(exchange_unitary(space, p, g, std::nan("")), DomainError);
  CHECK_THROWS_AS(conditional_exchange_unitary(space, p, g, g, 1.0), DomainError);
}

TEST_CASE("swap scenario") {
  const FockSpace space = scenario_space(2);
  const auto u = exchange_unitary(space, scenario_photon_k1(), scenario_graviton_k1(), kHalfPi);
  const auto report = run_swap_scenario(u);
  CHECK(close(report.entropy_before, kLn2, 1e-9));
  CHECK(close(report.entropy_after, kLn2, 1e-9));
  CHECK(report.fidelity_to_target >= 1.0 - 1e-9);
  CHECK(close(report.entropy_photon_k1_after, 0.0, 1e-9));
  CHECK(close(report.negativity_after, kLn2, 1e-9));

  const auto twice = apply(u, report.final_state);
  CHECK(std::norm(inner(report.initial_state, twice)) >= 1.0 - 1e-9);
}

TEST_CASE("generation scenario") {
  const FockSpace space = scenario_space(2);
  const auto u = conditional_exchange_unitary(space, scenario_photon_k1(), scenario_graviton_k1(),
                                              scenario_photon_k2(), kHalfPi);
  const auto report = run_generation_scenario(u);
  CHECK(close(report.entropy_before, 0.0, 1e-9));
  CHECK(close(report.entropy_after, kLn2, 1e-9));
  CHECK(report.fidelity_to_target >= 1.0 - 1e-9);
  CHECK(close(report.negativity_after, kLn2, 1e-9));

  // the mode-level exchange moves both branches and leaves a product state
  const auto plain = run_generation_scenario(
      exchange_unitary(space, scenario_photon_k1(), scenario_graviton_k1(), kHalfPi));
  CHECK(close(plain.entropy_after, 0.0, 1e-9));
  CHECK(close(plain.fidelity_to_target, 0.25, 1e-12));
}

TEST_CASE("zero strength leaves the scenarios unchanged") {
  const FockSpace space = scenario_space(1);
  const auto p = scenario_photon_k1(), g = scenario_graviton_k1();
  for (const auto& u : {exchange_unitary(space, p, g, 0.0), beam_splitter_unitary(space, p, g, 0.0)}) {
    for (const auto& report : {run_swap_scenario(u), run_generation_scenario(u)}) {
      REQUIRE(std::norm(inner(report.initial_state, report.final_state)) >= 1.0 - 1e-12);
      REQUIRE(close(report.entropy_before, report.entropy_after, 1e-12));
    }
  }
}

TEST_CASE("non-unitary map is rejected") {
  const FockSpace space = scenario_space(1);
  const OperatorMatrix half(space, 0.5 * Eigen::MatrixXcd::Identity(space.dim(), space.dim()));
  CHECK_THROWS_AS(run_swap_scenario(half), DomainError);
}
