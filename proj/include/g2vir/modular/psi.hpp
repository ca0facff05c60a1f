#pragma once

#include <array>

#include "g2vir/modular/derivative.hpp"
#include "g2vir/modular/geometry.hpp"
#include "g2vir/modular/symplectic.hpp"

namespace g2vir::modular {

/// Smallest accepted |det(nu(y); d_y nu(y))|; below it a sample is degenerate.
inline constexpr double kMinPsiDenominator = 1e-3;

/// nabla_x nu(y) in Omega, by central differences.
[[nodiscard]] CRow2 nabla_nu(const ModelGeometry& geometry, const CMat2& omega, Complex x, Complex y,
                             const DiffOptions& opt);

/// Psi(x, y) = -[omega(x,y) |nu(x); nu(y)| + |nu(y); nabla_x nu(y)|] / |nu(y); d_y nu(y)|
/// with form factors stripped. Throws ConditioningError on a degenerate
/// denominator.
[[nodiscard]] Complex evaluate_psi(const ModelGeometry& geometry, const CMat2& omega, Complex x,
                                   Complex y, const DiffOptions& opt = {});

/// The same expression assembled from the transformed data nu^gamma,
/// omega^gamma and nabla^gamma at Omega^gamma.
[[nodiscard]] Complex evaluate_psi_transformed(const SymplecticElement& gamma,
                                               const ModelGeometry& geometry, const CMat2& omega,
                                               Complex x, Complex y, const DiffOptions& opt = {});

struct PoleCheck {
  std::array<double, 3> steps{};
  std::array<Complex, 3> samples{};  // eps * Psi(y + eps, y)
  Complex extrapolated;
  double error = 0;  // |extrapolated - 1|
};

/// Extrapolates (x - y) Psi(x, y) to x = y from steps eps, eps/2, eps/4,
/// cancelling the O(eps) and O(eps^2) terms.
[[nodiscard]] PoleCheck pole_check(const ModelGeometry& geometry, const CMat2& omega, Complex y,
                                   double eps = 1e-3, const DiffOptions& opt = {});

}  // namespace g2vir::modular
