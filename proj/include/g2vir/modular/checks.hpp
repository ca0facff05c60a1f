#pragma once

#include "g2vir/expr/rational.hpp"
#include "g2vir/modular/derivative.hpp"
#include "g2vir/modular/geometry.hpp"
#include "g2vir/modular/siegel.hpp"

namespace g2vir::modular {

/// Worst absolute and relative mismatch over a set of comparisons. The
/// relative error of a pair is |lhs - rhs| / max(|lhs|, |rhs|), and 0 when
/// both sides vanish.
struct Discrepancy {
  double max_abs = 0;
  double max_rel = 0;

  void add(Complex lhs, Complex rhs);
  void add(double abs_error, double scale);
  template <class Derived, class Other>
  void add_matrix(const Eigen::MatrixBase<Derived>& lhs, const Eigen::MatrixBase<Other>& rhs) {
    add((lhs - rhs).norm(), std::max(lhs.norm(), rhs.norm()));
  }
  void merge(const Discrepancy& other);
  /// Marks an exact check as failed.
  void fail();
};

/// Step sizes used by the numeric checks. With Richardson extrapolation the
/// truncation error is O(h^4), so the error budget is set by roundoff and
/// larger steps than the plain-difference default win.
struct CheckOptions {
  DiffOptions first{1e-3, true};
  DiffOptions second{3e-3, true};
};

/// Exact Sp(4,Z) relations for gamma, delta and delta*gamma; symmetry and
/// positivity of Omega^gamma; the composition law; det N det M = 1.
[[nodiscard]] Discrepancy check_sp4(const SymplecticElement& gamma, const SymplecticElement& delta,
                                    const SiegelPoint& omega);
/// NC = (NC)^T.
[[nodiscard]] Discrepancy check_nc_symmetry(const SymplecticElement& gamma, const SiegelPoint& omega);
/// d_11 log det M = (NC)_11, d_22 log det M = (NC)_22, d_12 log det M = 2 (NC)_12.
[[nodiscard]] Discrepancy check_logdet_gradient(const SymplecticElement& gamma,
                                                const SiegelPoint& omega,
                                                const CheckOptions& opt = {});
/// nabla_x N = -N C nu(x)^T nu(x) N.
[[nodiscard]] Discrepancy check_nabla_n(const SymplecticElement& gamma, const SiegelPoint& omega,
                                        const ModelGeometry& geometry, Complex x,
                                        const CheckOptions& opt = {});
/// The three determinant identities for nu^gamma = nu N.
[[nodiscard]] Discrepancy check_det_identities(const SymplecticElement& gamma,
                                               const SiegelPoint& omega,
                                               const ModelGeometry& geometry, Complex x, Complex y,
                                               const CheckOptions& opt = {});
/// Psi^gamma(x, y) = Psi(x, y).
[[nodiscard]] Discrepancy check_psi_invariance(const SymplecticElement& gamma,
                                               const SiegelPoint& omega,
                                               const ModelGeometry& geometry, Complex x, Complex y,
                                               const CheckOptions& opt = {});
/// (x - y) Psi(x, y) -> 1 as x -> y; needs a pole-bearing geometry.
[[nodiscard]] Discrepancy check_pole(const ModelGeometry& geometry, const SiegelPoint& omega,
                                     Complex y, const CheckOptions& opt = {});
/// -nu(y1) (nabla_x N) C nu(y2)^T = (nu(x) N C nu(y1)^T)(nu(x) N C nu(y2)^T).
[[nodiscard]] Discrepancy check_ode_invariance_identity(const SymplecticElement& gamma,
                                                        const SiegelPoint& omega,
                                                        const ModelGeometry& geometry, Complex x,
                                                        Complex y1, Complex y2,
                                                        const CheckOptions& opt = {});
/// O_1^gamma (det M^(c/2) F) = det M^(c/2) O_1 F, with d/dOmega^gamma from the
/// inverted Jacobian of Omega -> Omega^gamma. Also checks that the s-law
/// agrees with 6 R^gamma(x, x) from the omega-law.
[[nodiscard]] Discrepancy check_o1_covariance(const SymplecticElement& gamma,
                                              const SiegelPoint& omega,
                                              const ModelGeometry& geometry, Complex x,
                                              const expr::Rational& c, const CheckOptions& opt = {});
/// O_2^gamma (det M^(c/2) F) = det M^(c/2) O_2 F, with second derivatives in
/// Omega^gamma from the nested chain rule over finite differences in Omega.
[[nodiscard]] Discrepancy check_o2_covariance(const SymplecticElement& gamma,
                                              const SiegelPoint& omega,
                                              const ModelGeometry& geometry, Complex x1, Complex x2,
                                              const expr::Rational& c, const CheckOptions& opt = {});

}  // namespace g2vir::modular
