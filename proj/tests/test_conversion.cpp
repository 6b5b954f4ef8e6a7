#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "gpc/conversion.hpp"
#include "gpc/errors.hpp"
#include "gpc/scenario.hpp"
#include "support.hpp"

using namespace gpc;
using gpc::test::close;
using gpc::test::rel_close;

namespace {

constexpr double kPi = std::numbers::pi;

const ModeId gk = graviton_mode(Momentum::plus);
const ModeId yk = photon_mode(Momentum::plus);

StateVector occupied(const FockSpace& space, std::vector<int> occ) {
  return basis_state(space, occ);
}

}  // namespace

TEST_CASE("f(t)") {
  CHECK(f_of_t(Polarization::plus, 1.0, 0.0) == Complex{0.0, 0.0});
  CHECK(std::abs(f_of_t(Polarization::plus, 1.0, kPi)) < 1e-15);
  CHECK(std::abs(f_of_t(Polarization::plus, 1.0, kPi / 2) - Complex{0.0, -1.0}) < 1e-15);
  CHECK(f_of_t(Polarization::cross, 2.0, 0.3) == -f_of_t(Polarization::plus, 2.0, 0.3));
  CHECK_THROWS_AS(f_of_t(Polarization::plus, 0.0, 1.0), DomainError);
}

TEST_CASE("Q matrix elements") {
  const FockSpace space(sector_modes(Polarization::plus), 2);
  const CouplingConfig zero{0.0, 2.0, 1.0};
  CHECK(max_abs(build_q(space, zero, {}).entries()) == 0.0);

  const CouplingConfig c{0.3, 0.7, 1.3};
  const auto rot = build_q(space, c, {Polarization::plus, false});
  const auto g1 = occupied(space, {1, 0, 0, 0});
  const auto y1 = occupied(space, {0, 0, 1, 0});
  const Complex elem = inner(g1, apply(rot, y1));
  CHECK(std::abs(elem - Complex{0.0, c.strength()}) < 1e-15);

  const auto q = build_q(space, c, {});
  const auto pair = occupied(space, {1, 0, 0, 1});
  const Complex cr = inner(pair, apply(q, vacuum(space)));
  CHECK(close(std::abs(cr), c.lambda * std::abs(f_of_t(Polarization::plus, c.k, c.t)), 1e-15));
  CHECK(hermiticity_defect(q.entries()) == 0.0);

  const FockSpace missing({gk, yk}, 2);
  CHECK_THROWS_AS(build_q(missing, c, {}), ConfigError);
  CHECK_NOTHROW(build_q(missing, c, {Polarization::plus, false}));
  CHECK_THROWS_AS(build_q(space, {-1.0, 1.0, 1.0}, {}), DomainError);
}

TEST_CASE("W matrix elements") {
  const FockSpace space(sector_modes(Polarization::cross), 2);
  const CouplingConfig c{0.4, 0.9, 2.0};
  CHECK(max_abs(build_w(space, {0.0, 1.0, 1.0}, {Polarization::cross, true}).entries()) == 0.0);
  const auto w = build_w(space, c, {Polarization::cross, true});
  const std::vector<int> from{0, 0, 1, 0}, to{1, 0, 0, 0};
  CHECK(std::abs(w(space.index_of(to), space.index_of(from)) - Complex{0.0, c.strength()}) <
        1e-15);
  // every nonzero element raises graviton k by exactly one
  for (Index r = 0; r < space.dim(); ++r) {
    for (Index col = 0; col < space.dim(); ++col) {
      if (w(r, col) != Complex{0.0, 0.0}) {
        REQUIRE(space.occupation(r, 0) == space.occupation(col, 0) + 1);
      }
    }
  }
}

TEST_CASE("evolution") {
  const FockSpace space(sector_modes(Polarization::plus), 3);
  CHECK(max_abs((evolve(build_q(space, {0.0, 1.0, 1.0}, {})) - identity(space)).entries()) ==
        0.0);

  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    const CouplingConfig c{unit(rng), 1.0, 0.5 + unit(rng)};
    REQUIRE(unitarity_defect(evolve(build_q(space, c, {})).entries()) < 1e-12);
  }

  const CouplingConfig swap{kPi / 2, 1.0, 1.0};
  const auto u = evolve(build_q(space, swap, {Polarization::plus, false}));
  CHECK(close(transition_prob(u, occupied(space, {0, 0, 1, 0}), occupied(space, {1, 0, 0, 0})),
              1.0, 1e-10));

  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Zero(space.dim(), space.dim());
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(evolve(OperatorMatrix(space, bad)), DomainError);
}

TEST_CASE("vacuum probability") {
  CHECK(prob_vacuum({0.0, 1.0, 1.0}).value == 0.0);
  CHECK(rel_close(prob_vacuum({1e-10, 1.0, 1.0}).value, 1e-20, 1e-12));
  CHECK(prob_vacuum({1.0, 1.0, 1.0}).within_guard == false);
  CHECK(prob_vacuum({2.0, 1.0, 1.0}).value == 4.0);

  const FockSpace space(sector_modes(Polarization::plus), 4);
  const CouplingConfig c{1e-3, 1.0, 1.0};
  const auto u = evolve(build_q(space, c, {}));
  const double full =
      transition_prob(u, occupied(space, {0, 0, 1, 0}), occupied(space, {1, 0, 0, 0}));
  CHECK(rel_close(full, prob_vacuum(c).value, 1e-2));
}

TEST_CASE("squeezed coherent probability") {
  const CouplingConfig c{1e-3, 1.0, 1.0};
  CHECK(prob_squeezed_coherent(c, {}, {}).value == prob_vacuum(c).value);
  const double r8 = squeeze_db_to_r(8.0);
  CHECK(close(std::exp(2 * r8), 6.3, 0.1));
  // beta >> 1 and phase aligned: factor approaches |beta|^2 e^{2r}
  const CoherentParams big{std::polar(100.0, 0.0)};
  CHECK(rel_close(photon_enhancement({r8, 0.0}, big), 1e4 * std::exp(2 * r8), 1e-3));

  ScenarioConfig sc;
  sc.lambda_t = 1e-3;
  sc.squeeze = {0.5, 0.0};
  sc.coherent = {Complex{1.0, 0.0}};
  sc.counter_rotating = true;
  const double oracle = conversion_oracle(sc, 24).first_order;
  const double analytic = prob_squeezed_coherent(coupling_from(sc), sc.squeeze, sc.coherent).value;
  CHECK(rel_close(oracle, analytic, 1e-2));
}

TEST_CASE("primordial probability") {
  const CouplingConfig c{1e-3, 1.0, 1.0};
  CHECK(prob_primordial(c, {}, {}, {}).value == prob_squeezed_coherent(c, {}, {}).value);
  const double z = 0.5 * std::acosh(1e4);
  CHECK(rel_close(graviton_enhancement({z, 0.0}), (1e4 + 1) / 2, 1e-12));
  CHECK_THROWS_AS(prob_primordial(c, {}, {}, {-0.1, 0.0}), DomainError);

  ScenarioConfig sc;
  sc.lambda_t = 1e-3;
  sc.graviton_source = GravitonSource::explicit_z;
  sc.graviton_z = 0.6;
  const double oracle = conversion_oracle(sc, 20, 200'000).first_order;
  const double analytic =
      prob_primordial(coupling_from(sc), {}, {}, graviton_params(sc)).value;
  CHECK(rel_close(oracle, analytic, 1e-2));
}

TEST_CASE("first order amplitude") {
  const FockSpace space(sector_modes(Polarization::plus), 2);
  const CouplingConfig c{0.01, 2.0, 1.0};
  const auto q = build_q(space, c, {});
  CHECK(first_order_amplitude(q, vacuum(space), vacuum(space)) == Complex{0.0, 0.0});
  CHECK(close(std::abs(first_order_amplitude(q, occupied(space, {0, 0, 1, 0}),
                                             occupied(space, {1, 0, 0, 0}))),
              c.strength(), 1e-15));

  std::mt19937_64 rng(23);
  const auto i = test::random_state(space, rng);
  const auto f = test::random_state(space, rng);
  const Complex forward = first_order_amplitude(q, i, f);
  const Complex backward = Complex{0.0, 1.0} * inner(i, apply(q, f));
  CHECK(std::abs(forward - std::conj(backward)) < 1e-15);
  CHECK(std::abs(forward - first_order_amplitude(q_generator(c, {}), i, f)) < 1e-15);
}

TEST_CASE("transition probability") {
  std::mt19937_64 rng(29);
  const FockSpace space({gk, yk}, 2);
  const auto i = test::random_state(space, rng);
  CHECK(close(transition_prob(identity(space), i, i), 1.0, 1e-12));
  const std::vector<int> a{0, 1}, b{1, 0};
  CHECK(transition_prob(identity(space), basis_state(space, a), basis_state(space, b)) == 0.0);
}

TEST_CASE("Q on the cross sector uses the cross modes") {
  const auto modes = sector_modes(Polarization::cross);
  CHECK(modes[0] == graviton_mode(Momentum::plus, Polarization::cross));
  CHECK(modes[3] == photon_mode(Momentum::minus, Polarization::cross));
  const FockSpace plus_space(sector_modes(Polarization::plus), 1);
  CHECK_THROWS_AS(build_q(plus_space, {0.1, 1.0, 1.0}, {Polarization::cross, true}), ConfigError);
}
