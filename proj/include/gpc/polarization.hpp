#pragma once

// Transverse polarization geometry for a wavevector k, the split of a
// static magnetic field into parts parallel and perpendicular to k, and the
// photon-graviton coupling strength that the perpendicular part induces.
//
// Conventions:
//   * (khat, e_cross, e_plus) is right-handed: khat x e_cross = e_plus.
//     For k along +x this is e_cross = +y, e_plus = +z.
//   * Under k -> -k:  e_plus(-k) = e_plus(k),  e_cross(-k) = -e_cross(k).
//     Both hold bit-for-bit, because e_plus depends only on the line
//     through k and e_cross = e_plus x khat.

#include <array>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "gpc/errors.hpp"
#include "gpc/units.hpp"

namespace gpc {

template <typename Scalar>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar>
using Mat3 = Eigen::Matrix<Scalar, 3, 3>;

template <typename Scalar>
struct PolarizationBasis {
  Vec3<Scalar> e_plus;
  Vec3<Scalar> e_cross;
  Vec3<Scalar> khat;
};

template <typename Scalar>
struct PolarizationTensors {
  Mat3<Scalar> plus;
  Mat3<Scalar> cross;
};

template <typename Scalar>
struct FieldDecomposition {
  Vec3<Scalar> parallel;
  Vec3<Scalar> perp;
};

namespace detail {

template <typename Scalar>
Scalar checked_norm(const Vec3<Scalar>& k) {
  const Scalar n = k.norm();
  if (!(n > Scalar(0)) || !std::isfinite(static_cast<double>(n))) {
    throw DomainError("wavevector must be nonzero and finite");
  }
  return n;
}

}  // namespace detail

template <typename Scalar>
PolarizationBasis<Scalar> build_basis(const Vec3<Scalar>& k) {
  const Scalar norm = detail::checked_norm(k);
  const Vec3<Scalar> khat = k / norm;

  // Seed axis: smallest |component|; ties go to the later axis so that
  // k = x picks z.
  int seed = 0;
  for (int i = 1; i < 3; ++i) {
    if (std::abs(khat[i]) <= std::abs(khat[seed])) seed = i;
  }
  Vec3<Scalar> ref = Vec3<Scalar>::Zero();
  ref[seed] = Scalar(1);

  Vec3<Scalar> e_plus = ref - ref.dot(khat) * khat;
  e_plus.normalize();
  const Vec3<Scalar> e_cross = e_plus.cross(khat);
  return {e_plus, e_cross, khat};
}

/// Basis whose e_cross is the direction of `b_perp` (which must be nonzero
/// and transverse to k).
template <typename Scalar>
PolarizationBasis<Scalar> basis_aligned_to(const Vec3<Scalar>& k, const Vec3<Scalar>& b_perp) {
  const Vec3<Scalar> khat = k / detail::checked_norm(k);
  const Scalar b = b_perp.norm();
  if (!(b > Scalar(0))) throw DomainError("cannot align a basis to a zero field");
  if (std::abs(b_perp.dot(khat)) > Scalar(1e-12) * b) {
    throw DomainError("field is not transverse to k");
  }
  const Vec3<Scalar> e_cross = b_perp / b;
  const Vec3<Scalar> e_plus = khat.cross(e_cross);
  return {e_plus, e_cross, khat};
}

template <typename Scalar>
Mat3<Scalar> projection_tensor(const Vec3<Scalar>& k) {
  const Scalar n = detail::checked_norm(k);
  return Mat3<Scalar>::Identity() - k * k.transpose() / (n * n);
}

template <typename Scalar>
PolarizationTensors<Scalar> polarization_tensors(const PolarizationBasis<Scalar>& basis) {
  const Scalar inv_sqrt2 = Scalar(1) / std::sqrt(Scalar(2));
  const auto& ep = basis.e_plus;
  const auto& ex = basis.e_cross;
  return {inv_sqrt2 * (ep * ep.transpose() - ex * ex.transpose()),
          inv_sqrt2 * (ep * ex.transpose() + ex * ep.transpose())};
}

template <typename Scalar>
FieldDecomposition<Scalar> decompose_field(const Vec3<Scalar>& b, const Vec3<Scalar>& k) {
  const Scalar n = detail::checked_norm(k);
  const Vec3<Scalar> parallel = k * (k.dot(b) / (n * n));
  return {parallel, b - parallel};
}

/// lambda = |B_perp| / (sqrt(2) M_pl) in eV, with B in tesla and M_pl in eV.
template <typename Scalar>
Scalar coupling_lambda(const Vec3<Scalar>& b_tesla, const Vec3<Scalar>& k,
                       Scalar planck_mass_ev = Scalar(units::kReducedPlanckMassEv)) {
  if (!(planck_mass_ev > Scalar(0))) throw DomainError("Planck mass must be positive");
  if (!b_tesla.allFinite()) throw DomainError("magnetic field must be finite");
  const Vec3<Scalar> perp = decompose_field(b_tesla, k).perp;
  const Scalar b_ev2 = perp.norm() * Scalar(units::kEv2PerTesla);
  return b_ev2 / (std::sqrt(Scalar(2)) * planck_mass_ev);
}

/// Same coupling from the explicit contraction e_plus . (khat x B_perp) in a
/// given basis; equals coupling_lambda when e_cross is aligned with B_perp.
template <typename Scalar>
Scalar coupling_contraction(const PolarizationBasis<Scalar>& basis, const Vec3<Scalar>& b_tesla,
                            Scalar planck_mass_ev = Scalar(units::kReducedPlanckMassEv)) {
  const Vec3<Scalar> perp = decompose_field(b_tesla, basis.khat).perp;
  return basis.e_plus.dot(basis.khat.cross(perp)) * Scalar(units::kEv2PerTesla) /
         (std::sqrt(Scalar(2)) * planck_mass_ev);
}

/// M_PQ = eps_ilm B_perp^m e^P_ij(k) e^Q_j(-k) khat^l. Diagonal when B_perp is
/// along e_cross; throws PreconditionError otherwise.
template <typename Scalar>
Eigen::Matrix<Scalar, 2, 2> delta_pq_contraction(const PolarizationBasis<Scalar>& basis,
                                                 const Vec3<Scalar>& b_perp) {
  const Scalar b = b_perp.norm();
  if (b > Scalar(0) && b_perp.cross(basis.e_cross).norm() > Scalar(1e-12) * b) {
    throw PreconditionError("B_perp must be aligned with e_cross", 0);
  }
  const auto tensors = polarization_tensors(basis);
  // e^Q(-k) by the parity convention.
  const std::array<Vec3<Scalar>, 2> mirrored{basis.e_plus, Vec3<Scalar>(-basis.e_cross)};
  const std::array<Mat3<Scalar>, 2> e_tensor{tensors.plus, tensors.cross};
  const Vec3<Scalar> v = basis.khat.cross(b_perp);  // v_i = eps_ilm k^l B^m
  Eigen::Matrix<Scalar, 2, 2> m;
  for (int p = 0; p < 2; ++p) {
    for (int q = 0; q < 2; ++q) m(p, q) = v.dot(e_tensor[p] * mirrored[q]);
  }
  return m;
}

}  // namespace gpc
