#pragma once

#include <array>

#include "g2vir/modular/derivative.hpp"
#include "g2vir/modular/geometry.hpp"
#include "g2vir/modular/siegel.hpp"

namespace g2vir::modular {

/// log det M(Omega') continued from a base point Omega: the principal value at
/// the base plus log(det M(Omega') / det M(Omega)). Continuous across any
/// finite-difference stencil around the base.
class LogDetM {
 public:
  LogDetM(const SymplecticElement& gamma, const CMat2& base);
  [[nodiscard]] Complex operator()(const CMat2& omega) const;
  [[nodiscard]] Complex at_base() const noexcept { return base_log_; }

 private:
  const SymplecticElement* gamma_;
  Complex base_det_;
  Complex base_log_;
};

/// Largest accepted |arg det M| for the principal branch of det M^(c/2).
inline constexpr double kBranchMargin = 1e-2;
/// Throws ConditioningError if det M at omega lies within kBranchMargin of
/// the negative real axis.
void require_off_branch_cut(const SymplecticElement& gamma, const CMat2& omega);

/// d log det M / d Omega_k for the three coordinates.
[[nodiscard]] CCoords logdet_gradient(const SymplecticElement& gamma, const CMat2& omega,
                                      const DiffOptions& opt);
/// sum_{a<=b} u_a v_b-symmetrized weights against a coordinate gradient:
/// 1/2 sum_{a<=b} (u_a v_b + u_b v_a) g_ab.
[[nodiscard]] Complex contract(const CRow2& u, const CRow2& v, const CCoords& gradient);

/// nu^gamma(y) = nu(y) N.
[[nodiscard]] CRow2 transformed_nu(const SymplecticElement& gamma, const ModelGeometry& geometry,
                                   const CMat2& omega, Complex y);
/// omega^gamma(x, y) = omega(x, y) - 1/2 sum_{a<=b} (nu_a(x) nu_b(y) + nu_b(x) nu_a(y)) d_ab log det M.
[[nodiscard]] Complex transformed_bidifferential(const SymplecticElement& gamma,
                                                 const ModelGeometry& geometry, const CMat2& omega,
                                                 Complex x, Complex y, const DiffOptions& opt);
/// s^gamma(x) = s(x) - 6 nabla_x log det M.
[[nodiscard]] Complex transformed_projective_connection(const SymplecticElement& gamma,
                                                        const ModelGeometry& geometry,
                                                        const CMat2& omega, Complex x,
                                                        const DiffOptions& opt);

using CMat3 = Eigen::Matrix<Complex, 3, 3>;

/// J(i, j) = d Omega^gamma_i / d Omega_j by central differences in Omega.
[[nodiscard]] CMat3 period_jacobian(const SymplecticElement& gamma, const CMat2& omega,
                                    const DiffOptions& opt);
/// T[p](i, j) = d^2 Omega^gamma_p / d Omega_i d Omega_j by central differences.
[[nodiscard]] std::array<CMat3, 3> period_hessians(const SymplecticElement& gamma,
                                                   const CMat2& omega, const DiffOptions& opt);

/// Derivatives in Omega^gamma coordinates from derivatives in Omega by the
/// chain rule: g^gamma = J^-T g, and
/// H^gamma = J^-T (H - sum_p g^gamma_p T[p]) J^-1.
struct ChainRule {
  CMat3 jacobian;
  std::array<CMat3, 3> hessians;
  [[nodiscard]] CCoords gradient(const CCoords& g) const;
  [[nodiscard]] CMat3 hessian(const CMat3& h, const CCoords& g) const;
};

/// nabla^gamma_x nu^gamma(y): the Omega-derivatives of nu(y) N are carried to
/// Omega^gamma coordinates by the chain rule and weighted with nu^gamma(x).
[[nodiscard]] CRow2 transformed_nabla_nu(const SymplecticElement& gamma,
                                         const ModelGeometry& geometry, const CMat2& omega,
                                         Complex x, Complex y, const DiffOptions& opt);

}  // namespace g2vir::modular
