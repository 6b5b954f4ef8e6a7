#include "gpc/oracle_checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <random>

#include "gpc/conversion.hpp"
#include "gpc/errors.hpp"
#include "gpc/gaussian.hpp"
#include "gpc/polarization.hpp"
#include "gpc/scenario.hpp"

namespace gpc {

namespace {

constexpr double kPi = std::numbers::pi;

CheckResult check(const std::string& suite, const std::string& name, double value,
                  double tolerance) {
  return {suite, name, value, tolerance, std::isfinite(value) && value <= tolerance};
}

// Max-norm of `m` on basis states whose occupations all stay below n_max,
// where truncated ladder operators obey the untruncated algebra.
double interior_defect(const FockSpace& space, const Eigen::MatrixXcd& m) {
  std::vector<Index> interior;
  for (Index i = 0; i < space.dim(); ++i) {
    bool inside = true;
    for (std::size_t s = 0; s < space.num_modes(); ++s) {
      if (space.occupation(i, s) >= space.n_max()) inside = false;
    }
    if (inside) interior.push_back(i);
  }
  double worst = 0.0;
  for (Index r : interior) {
    for (Index c : interior) worst = std::max(worst, std::abs(m(r, c)));
  }
  return worst;
}

std::vector<CheckResult> commutator_suite() {
  const std::string suite = "commutators";
  std::vector<CheckResult> out;
  const ModeId a = graviton_mode();
  const ModeId b = photon_mode();
  const FockSpace pair({a, b}, 6);
  const auto id = identity(pair);
  const auto ba = annihilator(pair, b);
  const auto bc = creator(pair, b);
  const auto aa = annihilator(pair, a);

  out.push_back(check(suite, "[b,b^dagger]=1 below cutoff",
                      interior_defect(pair, (commutator(ba, bc) - id).entries()), 1e-12));
  out.push_back(check(suite, "[a,b^dagger]=0", max_abs(commutator(aa, bc).entries()), 1e-12));
  out.push_back(check(suite, "[a,b]=0", max_abs(commutator(aa, ba).entries()), 1e-12));
  out.push_back(check(suite, "n=b^dagger b",
                      max_abs((number_operator(pair, b) - bc * ba).entries()), 1e-12));

  const CouplingConfig coupling{0.7, 1.3, 0.9};
  for (Polarization p : {Polarization::plus, Polarization::cross}) {
    const FockSpace sector(sector_modes(p), 3);
    const auto q = build_q(sector, coupling, {p, true});
    const std::string tag = p == Polarization::plus ? " (+)" : " (x)";
    out.push_back(check(suite, "Q hermitian" + tag, hermiticity_defect(q.entries()), 1e-12));
    out.push_back(check(suite, "exp(-iQ) unitary" + tag,
                        unitarity_defect(evolve(q).entries()), 1e-12));
  }
  return out;
}

std::vector<CheckResult> bogoliubov_suite() {
  const std::string suite = "bogoliubov";
  std::vector<CheckResult> out;
  const ModeId b = photon_mode();
  const FockSpace space({b}, 20);
  const SqueezeParams squeezes[] = {{0.25, 0.0}, {0.5, kPi / 3}, {1.0, kPi / 2}, {1.0, kPi}};
  for (const auto& s : squeezes) {
    char name[64];
    std::snprintf(name, sizeof name, "squeeze r=%.2f phi=%.3f", s.r, s.phi);
    out.push_back(check(suite, name, bogoliubov_residual(space, b, s), 1e-6));
  }
  const CoherentParams shifts[] = {{Complex{0.5, 0.0}}, {Complex{1.0, 0.5}}, {Complex{-1.5, 1.0}}};
  for (const auto& c : shifts) {
    char name[64];
    std::snprintf(name, sizeof name, "displacement beta=%.2f%+.2fi", c.beta.real(),
                  c.beta.imag());
    out.push_back(check(suite, name, displacement_residual(space, b, c), 1e-6));
  }
  return out;
}

std::vector<CheckResult> norm_suite() {
  const std::string suite = "norms";
  std::vector<CheckResult> out;
  const ModeId b = photon_mode();
  const FockSpace single({b}, 96);
  struct Point {
    double r, phi, beta_abs, beta_arg;
  };
  const Point points[] = {{0.0, 0.0, 1.0, 0.0},
                          {0.5, 0.0, 1.0, 0.0},
                          {0.8, kPi / 2, 1.5, kPi / 4},
                          {0.8, 0.0, 1.5, kPi}};
  for (const auto& p : points) {
    const SqueezeParams s{p.r, p.phi};
    const CoherentParams c{std::polar(p.beta_abs, p.beta_arg)};
    const double numeric = creation_norm_squared(squeezed_coherent_state(single, b, s, c), b);
    const double a = photon_norm_const(s, c);
    char name[96];
    std::snprintf(name, sizeof name, "A_gamma^-2 r=%.2f phi=%.3f |beta|=%.2f arg=%.3f", p.r,
                  p.phi, p.beta_abs, p.beta_arg);
    out.push_back(check(suite, name, std::abs(numeric - 1.0 / (a * a)), 1e-6));
  }

  const ModeId gk = graviton_mode(Momentum::plus);
  const ModeId gm = graviton_mode(Momentum::minus);
  const FockSpace pair({gk, gm}, 24);
  for (double z : {0.25, 0.5, 1.0}) {
    const TwoModeSqueezeParams g{z, 0.0};
    const double norm = std::sqrt(creation_norm_squared(two_mode_squeezed_vacuum(pair, gk, gm, g), gk));
    char name[48];
    std::snprintf(name, sizeof name, "A_g * norm z=%.2f", z);
    out.push_back(check(suite, name, std::abs(graviton_norm_const(g) * norm - 1.0), 1e-6));
  }
  return out;
}

std::vector<CheckResult> probability_suite() {
  const std::string suite = "probabilities";
  std::vector<CheckResult> out;
  double worst = 0.0;
  auto compare = [&](const std::string& name, ScenarioConfig c, int n_max, std::size_t budget) {
    c.lambda_t = 1e-3;
    const double analytic = cmd_convert(c).prob_leading;
    const double oracle = conversion_oracle(c, n_max, budget, false).first_order;
    const double dev = std::abs(oracle - analytic) / analytic;
    worst = std::max(worst, dev);
    out.push_back(check(suite, name, dev, 1e-2));
  };

  ScenarioConfig base;
  compare("vacuum photon", base, 4, kDefaultDimensionBudget);

  ScenarioConfig sc = base;
  sc.squeeze = {0.5, kPi / 4};
  sc.coherent = {std::polar(1.0, kPi / 2)};
  compare("squeezed coherent r=0.5 |beta|=1", sc, 40, kDefaultDimensionBudget);

  sc.counter_rotating = false;
  sc.squeeze = {0.8, 0.0};
  sc.coherent = {std::polar(1.5, kPi)};
  compare("squeezed coherent r=0.8 |beta|=1.5", sc, 64, kDefaultDimensionBudget);

  ScenarioConfig pr = base;
  pr.squeeze = {0.25, 0.0};
  pr.coherent = {Complex{0.5, 0.0}};
  pr.graviton_source = GravitonSource::explicit_z;
  for (double z : {0.3, 0.6}) {
    pr.graviton_z = z;
    char name[48];
    std::snprintf(name, sizeof name, "primordial z=%.1f", z);
    compare(name, pr, 16, kDefaultDimensionBudget);
  }
  out.push_back(check(suite, "max relative deviation", worst, 1e-2));
  return out;
}

std::vector<CheckResult> identity_suite() {
  const std::string suite = "identities";
  std::mt19937_64 rng(20240611);
  std::normal_distribution<double> normal;
  auto random_vec = [&] { return Vec3<double>(normal(rng), normal(rng), normal(rng)); };

  double ortho = 0.0, vec_comp = 0.0, ten_comp = 0.0, transverse = 0.0, traceless = 0.0,
         delta_pq = 0.0, parallel_lambda = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Vec3<double> k = random_vec() * std::exp(normal(rng));
    const auto basis = build_basis(k);
    const Mat3<double> proj = projection_tensor(k);
    const auto& ep = basis.e_plus;
    const auto& ex = basis.e_cross;
    const auto& kh = basis.khat;

    ortho = std::max({ortho, std::abs(ep.dot(ep) - 1.0), std::abs(ex.dot(ex) - 1.0),
                      std::abs(ep.dot(ex))});
    vec_comp = std::max(vec_comp,
                        (ep * ep.transpose() + ex * ex.transpose() - proj).cwiseAbs().maxCoeff());

    const auto t = polarization_tensors(basis);
    double worst_t = 0.0;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        for (int l = 0; l < 3; ++l) {
          for (int m = 0; m < 3; ++m) {
            const double lhs = t.plus(i, j) * t.plus(l, m) + t.cross(i, j) * t.cross(l, m);
            const double rhs = 0.5 * (proj(i, l) * proj(j, m) + proj(i, m) * proj(j, l) -
                                      proj(i, j) * proj(l, m));
            worst_t = std::max(worst_t, std::abs(lhs - rhs));
          }
        }
      }
    }
    ten_comp = std::max(ten_comp, worst_t);
    transverse = std::max({transverse, std::abs(ep.dot(kh)), std::abs(ex.dot(kh)),
                           (t.plus * kh).cwiseAbs().maxCoeff(),
                           (t.cross * kh).cwiseAbs().maxCoeff()});
    traceless = std::max({traceless, std::abs(t.plus.trace()), std::abs(t.cross.trace())});

    const Vec3<double> b_perp = decompose_field<double>(random_vec(), k).perp;
    const auto aligned = basis_aligned_to(k, b_perp);
    const auto m = delta_pq_contraction(aligned, b_perp);
    const double expected = b_perp.norm() / std::numbers::sqrt2;
    delta_pq = std::max(delta_pq, std::max({std::abs(m(0, 0) - expected),
                                            std::abs(m(1, 1) + expected), std::abs(m(0, 1)),
                                            std::abs(m(1, 0))}) /
                                      b_perp.norm());

    // Field parallel to k: coupling relative to the same field turned transverse.
    const Vec3<double> b_par = k * normal(rng);
    const double reference = coupling_lambda<double>(b_par.cross(ep).normalized() * b_par.norm(), k);
    if (reference > 0.0) {
      parallel_lambda = std::max(parallel_lambda, coupling_lambda<double>(b_par, k) / reference);
    }
  }
  const Vec3<double> x(1.0, 0.0, 0.0);
  const double axis_lambda = coupling_lambda<double>(Vec3<double>(7.0, 0.0, 0.0), x);

  return {check(suite, "orthonormality", ortho, 1e-12),
          check(suite, "vector completeness", vec_comp, 1e-12),
          check(suite, "tensor completeness", ten_comp, 1e-12),
          check(suite, "transversality", transverse, 1e-12),
          check(suite, "tracelessness", traceless, 1e-12),
          check(suite, "delta_PQ proportionality", delta_pq, 1e-12),
          check(suite, "lambda for B parallel to k (relative)", parallel_lambda, 1e-12),
          check(suite, "lambda for B parallel to k (axis)", axis_lambda, 0.0)};
}

}  // namespace

const std::vector<std::string>& oracle_suites() {
  static const std::vector<std::string> names{"commutators", "bogoliubov", "norms",
                                              "probabilities", "identities"};
  return names;
}

std::vector<CheckResult> run_oracle_suite(const std::string& suite) {
  if (suite == "all") {
    std::vector<CheckResult> all;
    for (const auto& name : oracle_suites()) {
      auto part = run_oracle_suite(name);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  if (suite == "commutators") return commutator_suite();
  if (suite == "bogoliubov") return bogoliubov_suite();
  if (suite == "norms") return norm_suite();
  if (suite == "probabilities") return probability_suite();
  if (suite == "identities") return identity_suite();
  throw ConfigError("unknown oracle suite '" + suite + "'");
}

bool write_report(std::ostream& out, const std::vector<CheckResult>& results) {
  std::size_t failed = 0;
  for (const auto& r : results) {
    if (!r.pass) ++failed;
    out << (r.pass ? "PASS " : "FAIL ") << r.suite << ": " << r.name
        << "  value=" << format_value(r.value) << "  tol=" << format_value(r.tolerance) << '\n';
  }
  out << results.size() - failed << "/" << results.size() << " checks passed\n";
  return failed == 0;
}

}  // namespace gpc
