#pragma once

// Truncated multi-mode bosonic Fock space.
//
// A FockSpace is an ordered list of modes with a common occupation cutoff
// n_max. Basis states are enumerated lexicographically in the occupation
// tuple with the first mode varying slowest, so the amplitude of
// |n_0, n_1, ..., n_{M-1}> sits at index sum_i n_i (n_max+1)^(M-1-i).
// That ordering is also the Kronecker ordering of single-mode factors.

#include <compare>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace gpc {

using Complex = std::complex<double>;
using Index = Eigen::Index;

enum class Species { photon, graviton };
enum class Momentum { plus, minus };  // +k or -k
enum class Polarization { plus, cross };

struct ModeId {
  Species species = Species::photon;
  Momentum momentum = Momentum::plus;
  Polarization polarization = Polarization::plus;
  // Index of the wavevector the +-k pair belongs to (k1, k2, ...).
  int wave = 0;

  auto operator<=>(const ModeId&) const = default;
};

inline ModeId photon_mode(Momentum m = Momentum::plus, Polarization p = Polarization::plus,
                          int wave = 0) {
  return {Species::photon, m, p, wave};
}

inline ModeId graviton_mode(Momentum m = Momentum::plus, Polarization p = Polarization::plus,
                            int wave = 0) {
  return {Species::graviton, m, p, wave};
}

std::string to_string(const ModeId& mode);

inline constexpr std::size_t kDefaultDimensionBudget = 100'000;

/// Largest dimension for which a dense dim x dim matrix is materialized.
inline constexpr Index kDenseDimensionLimit = 8192;

class FockSpace {
 public:
  /// Throws ConfigError on empty/duplicate modes or n_max < 1, ResourceError
  /// when (n_max+1)^modes exceeds `budget`.
  FockSpace(std::vector<ModeId> modes, int n_max,
            std::size_t budget = kDefaultDimensionBudget);

  const std::vector<ModeId>& modes() const { return modes_; }
  std::size_t num_modes() const { return modes_.size(); }
  int n_max() const { return n_max_; }
  Index dim() const { return dim_; }

  bool contains(const ModeId& mode) const;
  /// Position of `mode` in the ordering; LookupError if absent.
  std::size_t slot(const ModeId& mode) const;
  Index stride(std::size_t slot) const { return strides_[slot]; }

  int occupation(Index index, std::size_t slot) const {
    return static_cast<int>((index / strides_[slot]) % (n_max_ + 1));
  }
  std::vector<int> occupations(Index index) const;
  Index index_of(std::span<const int> occupations) const;

  bool operator==(const FockSpace& other) const {
    return n_max_ == other.n_max_ && modes_ == other.modes_;
  }

 private:
  std::vector<ModeId> modes_;
  int n_max_;
  Index dim_;
  std::vector<Index> strides_;
};

FockSpace build_space(std::vector<ModeId> modes, int n_max,
                      std::size_t budget = kDefaultDimensionBudget);

class StateVector {
 public:
  /// Zero vector on `space`.
  explicit StateVector(FockSpace space);
  StateVector(FockSpace space, Eigen::VectorXcd amplitudes);

  const FockSpace& space() const { return space_; }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  Eigen::VectorXcd& amplitudes() { return amplitudes_; }

  Complex operator[](Index i) const { return amplitudes_[i]; }
  Complex amplitude(std::span<const int> occupations) const {
    return amplitudes_[space_.index_of(occupations)];
  }
  double norm() const { return amplitudes_.norm(); }

 private:
  FockSpace space_;
  Eigen::VectorXcd amplitudes_;
};

class OperatorMatrix {
 public:
  OperatorMatrix(FockSpace space, Eigen::MatrixXcd entries);

  const FockSpace& space() const { return space_; }
  const Eigen::MatrixXcd& entries() const { return entries_; }
  Eigen::MatrixXcd& entries() { return entries_; }

  Complex operator()(Index row, Index col) const { return entries_(row, col); }

 private:
  FockSpace space_;
  Eigen::MatrixXcd entries_;
};

class DensityMatrix {
 public:
  /// Validates shape, Hermiticity (1e-12 relative to the largest entry)
  /// and finiteness; DomainError otherwise.
  DensityMatrix(FockSpace space, Eigen::MatrixXcd entries);

  const FockSpace& space() const { return space_; }
  const Eigen::MatrixXcd& entries() const { return entries_; }
  Complex trace() const { return entries_.trace(); }
  /// Tr(rho^2).
  double purity() const;

 private:
  FockSpace space_;
  Eigen::MatrixXcd entries_;
};

/// |n_0, ..., n_{M-1}>.
StateVector basis_state(const FockSpace& space, std::span<const int> occupations);
StateVector vacuum(const FockSpace& space);

OperatorMatrix identity(const FockSpace& space);
OperatorMatrix annihilator(const FockSpace& space, const ModeId& mode);
OperatorMatrix creator(const FockSpace& space, const ModeId& mode);
OperatorMatrix number_operator(const FockSpace& space, const ModeId& mode);

OperatorMatrix adjoint(const OperatorMatrix& op);
OperatorMatrix operator*(const OperatorMatrix& lhs, const OperatorMatrix& rhs);
OperatorMatrix operator+(const OperatorMatrix& lhs, const OperatorMatrix& rhs);
OperatorMatrix operator-(const OperatorMatrix& lhs, const OperatorMatrix& rhs);
OperatorMatrix operator*(Complex scale, const OperatorMatrix& op);
OperatorMatrix commutator(const OperatorMatrix& lhs, const OperatorMatrix& rhs);

/// exp(A) by scaling and squaring with a [13/13] Pade approximant.
/// NumericError on non-finite entries. Unitary for anti-Hermitian A.
OperatorMatrix matrix_exponential(const OperatorMatrix& generator);

StateVector apply(const OperatorMatrix& op, const StateVector& psi);
inline StateVector operator*(const OperatorMatrix& op, const StateVector& psi) {
  return apply(op, psi);
}
/// <phi|psi>, conjugate-linear in phi.
Complex inner(const StateVector& phi, const StateVector& psi);
/// NumericError on a zero vector.
StateVector normalize(const StateVector& psi);
/// <psi|op|psi>.
Complex expectation(const OperatorMatrix& op, const StateVector& psi);

/// Product state on `space` from factors on disjoint subsets of its modes.
/// Modes not covered by any factor are put in the vacuum.
StateVector product_state(const FockSpace& space, std::span<const StateVector> factors);
/// Joint state on the concatenated mode list (same n_max required).
StateVector tensor_product(const StateVector& lhs, const StateVector& rhs);

/// Reduced density matrix over `keep`, in the order given.
DensityMatrix partial_trace(const StateVector& psi, std::span<const ModeId> keep);
DensityMatrix pure_density(const StateVector& psi);

/// ||b^dagger psi||^2 for the creation operator of `mode` acting in the
/// untruncated space, i.e. <psi| 1 + b^dagger b |psi>. The truncated
/// creator would drop the n_max component.
double creation_norm_squared(const StateVector& psi, const ModeId& mode);

/// Max-norm helpers used by invariant checks.
double max_abs(const Eigen::MatrixXcd& m);
double hermiticity_defect(const Eigen::MatrixXcd& m);
double unitarity_defect(const Eigen::MatrixXcd& u);

}  // namespace gpc
