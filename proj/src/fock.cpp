#include "gpc/fock.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unsupported/Eigen/MatrixFunctions>

#include "gpc/errors.hpp"
#include "gpc/ladder.hpp"

namespace gpc {

std::string to_string(const ModeId& mode) {
  std::string s = mode.species == Species::photon ? "photon" : "graviton";
  s += "(";
  s += mode.momentum == Momentum::plus ? "+k" : "-k";
  if (mode.wave != 0) s += std::to_string(mode.wave);
  s += mode.polarization == Polarization::plus ? ",+" : ",x";
  s += ")";
  return s;
}

// ---------------------------------------------------------------- FockSpace

FockSpace::FockSpace(std::vector<ModeId> modes, int n_max, std::size_t budget)
    : modes_(std::move(modes)), n_max_(n_max), dim_(1) {
  if (modes_.empty()) throw ConfigError("Fock space needs at least one mode");
  if (n_max_ < 1) throw ConfigError("n_max must be >= 1, got " + std::to_string(n_max_));
  std::set<ModeId> seen;
  for (const auto& m : modes_) {
    if (!seen.insert(m).second) throw ConfigError("duplicate mode " + to_string(m));
  }
  const auto levels = static_cast<double>(n_max_ + 1);
  const double dim = std::pow(levels, static_cast<double>(modes_.size()));
  if (dim > static_cast<double>(budget)) {
    throw ResourceError("Fock space dimension " + std::to_string(static_cast<long long>(dim)) +
                        " exceeds budget " + std::to_string(budget));
  }
  strides_.assign(modes_.size(), 1);
  for (std::size_t i = modes_.size(); i-- > 0;) {
    strides_[i] = dim_;
    dim_ *= n_max_ + 1;
  }
}

bool FockSpace::contains(const ModeId& mode) const {
  return std::find(modes_.begin(), modes_.end(), mode) != modes_.end();
}

std::size_t FockSpace::slot(const ModeId& mode) const {
  auto it = std::find(modes_.begin(), modes_.end(), mode);
  if (it == modes_.end()) throw LookupError("mode " + to_string(mode) + " not in Fock space");
  return static_cast<std::size_t>(it - modes_.begin());
}

std::vector<int> FockSpace::occupations(Index index) const {
  std::vector<int> occ(modes_.size());
  for (std::size_t s = 0; s < modes_.size(); ++s) occ[s] = occupation(index, s);
  return occ;
}

Index FockSpace::index_of(std::span<const int> occupations) const {
  if (occupations.size() != modes_.size()) {
    throw DomainError("occupation tuple has wrong length");
  }
  Index index = 0;
  for (std::size_t s = 0; s < modes_.size(); ++s) {
    if (occupations[s] < 0 || occupations[s] > n_max_) {
      throw DomainError("occupation outside [0, n_max]");
    }
    index += occupations[s] * strides_[s];
  }
  return index;
}

FockSpace build_space(std::vector<ModeId> modes, int n_max, std::size_t budget) {
  return FockSpace(std::move(modes), n_max, budget);
}

// ---------------------------------------------------------- value types

StateVector::StateVector(FockSpace space)
    : space_(std::move(space)), amplitudes_(Eigen::VectorXcd::Zero(space_.dim())) {}

StateVector::StateVector(FockSpace space, Eigen::VectorXcd amplitudes)
    : space_(std::move(space)), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != space_.dim()) throw DomainError("amplitude vector size mismatch");
}

OperatorMatrix::OperatorMatrix(FockSpace space, Eigen::MatrixXcd entries)
    : space_(std::move(space)), entries_(std::move(entries)) {
  if (entries_.rows() != space_.dim() || entries_.cols() != space_.dim()) {
    throw DomainError("operator shape does not match space dimension");
  }
}

DensityMatrix::DensityMatrix(FockSpace space, Eigen::MatrixXcd entries)
    : space_(std::move(space)), entries_(std::move(entries)) {
  if (entries_.rows() != space_.dim() || entries_.cols() != space_.dim()) {
    throw DomainError("density matrix shape does not match space dimension");
  }
  if (!entries_.allFinite()) throw NumericError("density matrix has non-finite entries");
  const double scale = std::max(1.0, max_abs(entries_));
  if (hermiticity_defect(entries_) > 1e-12 * scale) {
    throw DomainError("density matrix is not Hermitian");
  }
}

double DensityMatrix::purity() const {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return entries_.squaredNorm();
}

// ---------------------------------------------------------- constructors

StateVector basis_state(const FockSpace& space, std::span<const int> occupations) {
  StateVector psi(space);
  psi.amplitudes()[space.index_of(occupations)] = 1.0;
  return psi;
}

StateVector vacuum(const FockSpace& space) {
  StateVector psi(space);
  psi.amplitudes()[0] = 1.0;
  return psi;
}

OperatorMatrix identity(const FockSpace& space) {
  if (space.dim() > kDenseDimensionLimit) throw ResourceError("identity exceeds dense limit");
  return OperatorMatrix(space, Eigen::MatrixXcd::Identity(space.dim(), space.dim()));
}

OperatorMatrix annihilator(const FockSpace& space, const ModeId& mode) {
  return to_matrix(space, LadderPolynomial{{1.0, {lower(mode)}}});
}

OperatorMatrix creator(const FockSpace& space, const ModeId& mode) {
  return to_matrix(space, LadderPolynomial{{1.0, {raise(mode)}}});
}

OperatorMatrix number_operator(const FockSpace& space, const ModeId& mode) {
  const std::size_t slot = space.slot(mode);
  if (space.dim() > kDenseDimensionLimit) throw ResourceError("operator exceeds dense limit");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(space.dim(), space.dim());
  for (Index i = 0; i < space.dim(); ++i) m(i, i) = space.occupation(i, slot);
  return OperatorMatrix(space, std::move(m));
}

// ---------------------------------------------------------- algebra

namespace {

void require_same_space(const FockSpace& a, const FockSpace& b) {
  if (!(a == b)) throw DomainError("operands live on different Fock spaces");
}

}  // namespace

OperatorMatrix adjoint(const OperatorMatrix& op) {
  return OperatorMatrix(op.space(), op.entries().adjoint());
}

OperatorMatrix operator*(const OperatorMatrix& lhs, const OperatorMatrix& rhs) {
  require_same_space(lhs.space(), rhs.space());
  return OperatorMatrix(lhs.space(), lhs.entries() * rhs.entries());
}

OperatorMatrix operator+(const OperatorMatrix& lhs, const OperatorMatrix& rhs) {
  require_same_space(lhs.space(), rhs.space());
  return OperatorMatrix(lhs.space(), lhs.entries() + rhs.entries());
}

OperatorMatrix operator-(const OperatorMatrix& lhs, const OperatorMatrix& rhs) {
  require_same_space(lhs.space(), rhs.space());
  return OperatorMatrix(lhs.space(), lhs.entries() - rhs.entries());
}

OperatorMatrix operator*(Complex scale, const OperatorMatrix& op) {
  return OperatorMatrix(op.space(), scale * op.entries());
}

OperatorMatrix commutator(const OperatorMatrix& lhs, const OperatorMatrix& rhs) {
  require_same_space(lhs.space(), rhs.space());
  return OperatorMatrix(lhs.space(),
                        lhs.entries() * rhs.entries() - rhs.entries() * lhs.entries());
}

OperatorMatrix matrix_exponential(const OperatorMatrix& generator) {
  if (!generator.entries().allFinite()) {
    throw NumericError("matrix exponential of a matrix with non-finite entries");
  }
  Eigen::MatrixXcd result = generator.entries().exp();
  if (!result.allFinite()) throw NumericError("matrix exponential overflowed");
  return OperatorMatrix(generator.space(), std::move(result));
}

StateVector apply(const OperatorMatrix& op, const StateVector& psi) {
  require_same_space(op.space(), psi.space());
  return StateVector(psi.space(), op.entries() * psi.amplitudes());
}

Complex inner(const StateVector& phi, const StateVector& psi) {
  require_same_space(phi.space(), psi.space());
  return phi.amplitudes().dot(psi.amplitudes());
}

StateVector normalize(const StateVector& psi) {
  const double n = psi.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw NumericError("cannot normalize a zero or non-finite state");
  return StateVector(psi.space(), psi.amplitudes() / n);
}

Complex expectation(const OperatorMatrix& op, const StateVector& psi) {
  return inner(psi, apply(op, psi));
}

// ---------------------------------------------------------- composites

StateVector product_state(const FockSpace& space, std::span<const StateVector> factors) {
  // slot map: for every factor, the full-space slot of each of its modes.
  std::vector<std::vector<std::size_t>> slots;
  std::vector<bool> covered(space.num_modes(), false);
  for (const auto& f : factors) {
    if (f.space().n_max() != space.n_max()) {
      throw DomainError("product_state factors must share the target n_max");
    }
    std::vector<std::size_t> s;
    for (const auto& m : f.space().modes()) {
      const std::size_t slot = space.slot(m);
      if (covered[slot]) throw DomainError("product_state factors overlap on " + to_string(m));
      covered[slot] = true;
      s.push_back(slot);
    }
    slots.push_back(std::move(s));
  }

  Eigen::VectorXcd amps(space.dim());
  for (Index i = 0; i < space.dim(); ++i) {
    bool uncovered_excited = false;
    for (std::size_t s = 0; s < space.num_modes(); ++s) {
      if (!covered[s] && space.occupation(i, s) != 0) {
        uncovered_excited = true;
        break;
      }
    }
    if (uncovered_excited) {
      amps[i] = 0.0;
      continue;
    }
    Complex value = 1.0;
    for (std::size_t f = 0; f < factors.size(); ++f) {
      const FockSpace& sub = factors[f].space();
      Index sub_index = 0;
      for (std::size_t k = 0; k < slots[f].size(); ++k) {
        sub_index += space.occupation(i, slots[f][k]) * sub.stride(k);
      }
      value *= factors[f][sub_index];
      if (value == Complex{}) break;
    }
    amps[i] = value;
  }
  return StateVector(space, std::move(amps));
}

StateVector tensor_product(const StateVector& lhs, const StateVector& rhs) {
  if (lhs.space().n_max() != rhs.space().n_max()) {
    throw DomainError("tensor_product requires equal n_max");
  }
  std::vector<ModeId> modes = lhs.space().modes();
  modes.insert(modes.end(), rhs.space().modes().begin(), rhs.space().modes().end());
  FockSpace joint(std::move(modes), lhs.space().n_max(),
                  static_cast<std::size_t>(lhs.space().dim() * rhs.space().dim()));
  Eigen::VectorXcd amps(joint.dim());
  const Index n = rhs.space().dim();
  for (Index i = 0; i < lhs.space().dim(); ++i) {
    amps.segment(i * n, n) = lhs[i] * rhs.amplitudes();
  }
  return StateVector(std::move(joint), std::move(amps));
}

DensityMatrix partial_trace(const StateVector& psi, std::span<const ModeId> keep) {
  const FockSpace& space = psi.space();
  if (keep.empty()) throw DomainError("partial_trace needs at least one kept mode");
  std::vector<std::size_t> keep_slots;
  std::vector<bool> kept(space.num_modes(), false);
  for (const auto& m : keep) {
    const std::size_t s = space.slot(m);
    if (kept[s]) throw DomainError("mode " + to_string(m) + " listed twice in keep");
    kept[s] = true;
    keep_slots.push_back(s);
  }
  std::vector<std::size_t> trace_slots;
  for (std::size_t s = 0; s < space.num_modes(); ++s) {
    if (!kept[s]) trace_slots.push_back(s);
  }

  FockSpace reduced(std::vector<ModeId>(keep.begin(), keep.end()), space.n_max(),
                    static_cast<std::size_t>(space.dim()));
  const Index levels = space.n_max() + 1;
  Index traced_dim = 1;
  for (std::size_t k = 0; k < trace_slots.size(); ++k) traced_dim *= levels;

  // psi reshaped to (kept, traced); rho = M M^dagger.
  Eigen::MatrixXcd m(reduced.dim(), traced_dim);
  for (Index i = 0; i < space.dim(); ++i) {
    Index row = 0;
    for (std::size_t k = 0; k < keep_slots.size(); ++k) {
      row += space.occupation(i, keep_slots[k]) * reduced.stride(k);
    }
    Index col = 0;
    for (std::size_t s : trace_slots) col = col * levels + space.occupation(i, s);
    m(row, col) = psi[i];
  }
  Eigen::MatrixXcd rho = m * m.adjoint();
  // Symmetrize the rounding noise of the product.
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(std::move(reduced), std::move(rho));
}

DensityMatrix pure_density(const StateVector& psi) {
  Eigen::MatrixXcd rho = psi.amplitudes() * psi.amplitudes().adjoint();
  return DensityMatrix(psi.space(), std::move(rho));
}

double creation_norm_squared(const StateVector& psi, const ModeId& mode) {
  const std::size_t slot = psi.space().slot(mode);
  double sum = 0.0;
  for (Index i = 0; i < psi.space().dim(); ++i) {
    sum += std::norm(psi[i]) * (psi.space().occupation(i, slot) + 1);
  }
  return sum;
}

double max_abs(const Eigen::MatrixXcd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const Eigen::MatrixXcd& m) {
  return max_abs(m - m.adjoint());
}

double unitarity_defect(const Eigen::MatrixXcd& u) {
  return max_abs(u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols()));
}

}  // namespace gpc
