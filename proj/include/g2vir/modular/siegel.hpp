#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "g2vir/modular/symplectic.hpp"
#include "g2vir/modular/types.hpp"

namespace g2vir::modular {

/// Raised when a sample is too badly conditioned to evaluate reliably; trial
/// runners resample on it.
class ConditioningError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Point of the genus-two Siegel upper half space. Symmetric by construction:
/// the off-diagonal entry is stored once.
class SiegelPoint {
 public:
  SiegelPoint() : SiegelPoint(Complex(0, 1), Complex(0, 0), Complex(0, 1)) {}
  SiegelPoint(Complex o11, Complex o12, Complex o22) : coords_(o11, o12, o22) {}
  explicit SiegelPoint(const CCoords& coords) : coords_(coords) {}

  [[nodiscard]] const CCoords& coords() const noexcept { return coords_; }
  [[nodiscard]] CMat2 matrix() const { return from_coords(coords_); }

  /// Smallest leading minor of Im(Omega); positive iff Im(Omega) > 0.
  [[nodiscard]] double imaginary_margin() const {
    const double y11 = coords_(0).imag();
    const double det = y11 * coords_(2).imag() - coords_(1).imag() * coords_(1).imag();
    return std::min(y11, det);
  }
  [[nodiscard]] bool in_upper_half_space(double tol = 1e-12) const {
    return imaginary_margin() > tol;
  }

 private:
  CCoords coords_;
};

/// Result of acting with gamma on a period matrix.
template <class Scalar>
struct PeriodTransform {
  Mat2<Scalar> omega_gamma;  // (A Omega + B) N, symmetrized
  Mat2<Scalar> m;            // C Omega + D
  Mat2<Scalar> n;            // M^-1
  double asymmetry = 0;      // relative off-diagonal mismatch before symmetrizing
};

/// Largest accepted condition number of M = C Omega + D.
inline constexpr double kMaxConditionNumber = 1e6;
/// Largest accepted relative asymmetry of (A Omega + B) N.
inline constexpr double kSymmetryTolerance = 1e-9;

/// Omega -> (A Omega + B)(C Omega + D)^-1. Throws ConditioningError if M is
/// near singular or, when enforce_symmetry is set, the image fails the
/// symmetry tolerance. Checks that measure symmetry themselves turn it off.
template <class Scalar>
PeriodTransform<Scalar> transform_period(const SymplecticElement& gamma, const Mat2<Scalar>& omega,
                                         bool enforce_symmetry = true) {
  PeriodTransform<Scalar> t;
  t.m = gamma.block_c<Scalar>() * omega + gamma.block_d<Scalar>();
  const Scalar det = t.m.determinant();
  const double scale = t.m.squaredNorm();
  if (std::abs(det) == 0.0 || scale / std::abs(det) > kMaxConditionNumber)
    throw ConditioningError("C Omega + D is ill conditioned");
  t.n = t.m.inverse();
  const Mat2<Scalar> image = (gamma.block_a<Scalar>() * omega + gamma.block_b<Scalar>()) * t.n;
  const double norm = image.norm();
  t.asymmetry = norm == 0.0 ? 0.0 : std::abs(image(0, 1) - image(1, 0)) / norm;
  if (enforce_symmetry && t.asymmetry > kSymmetryTolerance)
    throw ConditioningError("transformed period is not symmetric");
  t.omega_gamma = image;
  t.omega_gamma(0, 1) = t.omega_gamma(1, 0) = (image(0, 1) + image(1, 0)) / Scalar(2);
  return t;
}

/// Action on a Siegel point; additionally requires Im(Omega^gamma) > 0.
struct PointTransform {
  SiegelPoint omega_gamma;
  CMat2 m;
  CMat2 n;
  double asymmetry = 0;
};
[[nodiscard]] PointTransform transform_period(const SymplecticElement& gamma, const SiegelPoint& omega);

/// Principal log det M.
[[nodiscard]] Complex log_det(const CMat2& m);

}  // namespace g2vir::modular
