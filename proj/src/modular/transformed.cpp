#include "g2vir/modular/transformed.hpp"

#include <numbers>

namespace g2vir::modular {

LogDetM::LogDetM(const SymplecticElement& gamma, const CMat2& base)
    : gamma_(&gamma),
      base_det_(transform_period<Complex>(gamma, base).m.determinant()),
      base_log_(std::log(base_det_)) {}

Complex LogDetM::operator()(const CMat2& omega) const {
  const CMat2 m = gamma_->block_c<Complex>() * omega + gamma_->block_d<Complex>();
  return base_log_ + std::log(m.determinant() / base_det_);
}

void require_off_branch_cut(const SymplecticElement& gamma, const CMat2& omega) {
  const Complex det = transform_period<Complex>(gamma, omega).m.determinant();
  if (std::abs(std::arg(det)) > std::numbers::pi - kBranchMargin)
    throw ConditioningError("det M is too close to the branch cut");
}

CCoords logdet_gradient(const SymplecticElement& gamma, const CMat2& omega, const DiffOptions& opt) {
  const LogDetM logdet(gamma, omega);
  return omega_gradient(logdet, omega, opt);
}

Complex contract(const CRow2& u, const CRow2& v, const CCoords& gradient) {
  return u(0) * v(0) * gradient(0) + (u(0) * v(1) + u(1) * v(0)) / Complex(2) * gradient(1) +
         u(1) * v(1) * gradient(2);
}

CRow2 transformed_nu(const SymplecticElement& gamma, const ModelGeometry& geometry,
                     const CMat2& omega, Complex y) {
  return geometry.nu(y, omega) * transform_period<Complex>(gamma, omega).n;
}

Complex transformed_bidifferential(const SymplecticElement& gamma, const ModelGeometry& geometry,
                                   const CMat2& omega, Complex x, Complex y,
                                   const DiffOptions& opt) {
  return geometry.bidifferential(x, y, omega) -
         contract(geometry.nu(x, omega), geometry.nu(y, omega), logdet_gradient(gamma, omega, opt));
}

Complex transformed_projective_connection(const SymplecticElement& gamma,
                                          const ModelGeometry& geometry, const CMat2& omega,
                                          Complex x, const DiffOptions& opt) {
  const CRow2 nu_x = geometry.nu(x, omega);
  return geometry.projective_connection(x, omega) -
         Complex(6) * contract(nu_x, nu_x, logdet_gradient(gamma, omega, opt));
}

CMat3 period_jacobian(const SymplecticElement& gamma, const CMat2& omega, const DiffOptions& opt) {
  auto image = [&](const CMat2& p) -> CCoords {
    return to_coords(transform_period<Complex>(gamma, p).omega_gamma);
  };
  CMat3 jacobian;
  for (int j = 0; j < 3; ++j) jacobian.col(j) = omega_derivative(image, omega, j, opt);
  return jacobian;
}

std::array<CMat3, 3> period_hessians(const SymplecticElement& gamma, const CMat2& omega,
                                     const DiffOptions& opt) {
  std::array<CMat3, 3> out;
  for (int p = 0; p < 3; ++p) {
    auto coordinate = [&](const CMat2& o) -> Complex {
      return to_coords(transform_period<Complex>(gamma, o).omega_gamma)(p);
    };
    out[static_cast<std::size_t>(p)] = omega_hessian(coordinate, omega, opt);
  }
  return out;
}

CCoords ChainRule::gradient(const CCoords& g) const {
  return jacobian.transpose().partialPivLu().solve(g);
}

CMat3 ChainRule::hessian(const CMat3& h, const CCoords& g) const {
  const CCoords gg = gradient(g);
  CMat3 inner = h;
  for (std::size_t p = 0; p < 3; ++p) inner -= gg(static_cast<int>(p)) * hessians[p];
  // J^-T inner J^-1 = (J^-T (J^-T inner)^T)^T.
  const Eigen::PartialPivLU<CMat3> lu_t(CMat3(jacobian.transpose()));
  const CMat3 left = lu_t.solve(inner);
  return lu_t.solve(CMat3(left.transpose())).transpose();
}

CRow2 transformed_nabla_nu(const SymplecticElement& gamma, const ModelGeometry& geometry,
                           const CMat2& omega, Complex x, Complex y, const DiffOptions& opt) {
  const CMat2 n = transform_period<Complex>(gamma, omega).n;
  auto nu_gamma_y = [&](const CMat2& o) -> CRow2 {
    return geometry.nu(y, o) * transform_period<Complex>(gamma, o).n;
  };
  Eigen::Matrix<Complex, 3, 2> d;
  for (int k = 0; k < 3; ++k) d.row(k) = omega_derivative(nu_gamma_y, omega, k, opt);
  const Eigen::Matrix<Complex, 3, 2> d_gamma = period_jacobian(gamma, omega, opt).transpose().partialPivLu().solve(d);
  const CRow2 w = geometry.nu(x, omega) * n;
  return w(0) * w(0) * d_gamma.row(0) + w(0) * w(1) * d_gamma.row(1) + w(1) * w(1) * d_gamma.row(2);
}

}  // namespace g2vir::modular
