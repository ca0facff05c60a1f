#include "g2vir/modular/checks.hpp"

#include <limits>

#include "g2vir/modular/operator_eval.hpp"
#include "g2vir/modular/psi.hpp"
#include "g2vir/modular/transformed.hpp"

namespace g2vir::modular {

void Discrepancy::add(Complex lhs, Complex rhs) {
  add(std::abs(lhs - rhs), std::max(std::abs(lhs), std::abs(rhs)));
}

void Discrepancy::add(double abs_error, double scale) {
  max_abs = std::max(max_abs, abs_error);
  if (abs_error > 0) max_rel = std::max(max_rel, scale > 0 ? abs_error / scale : abs_error);
}

void Discrepancy::merge(const Discrepancy& other) {
  max_abs = std::max(max_abs, other.max_abs);
  max_rel = std::max(max_rel, other.max_rel);
}

void Discrepancy::fail() {
  max_abs = std::numeric_limits<double>::infinity();
  max_rel = std::numeric_limits<double>::infinity();
}

namespace {

CMat2 nc_of(const SymplecticElement& gamma, const CMat2& omega) {
  return transform_period<Complex>(gamma, omega).n * gamma.block_c<Complex>();
}

// nabla_x N(Omega), entrywise by central differences.
CMat2 nabla_n(const SymplecticElement& gamma, const CMat2& omega, const CRow2& nu_x,
              const DiffOptions& opt) {
  auto n_of = [&](const CMat2& o) -> CMat2 { return transform_period<Complex>(gamma, o).n; };
  return nabla(n_of, omega, nu_x, opt);
}

// G = det M^(c/2) F, with log det M continued from the base point.
struct Weighted {
  const ModelGeometry* geometry;
  LogDetM logdet;
  double half_c;
  Complex operator()(const CMat2& o) const {
    return std::exp(Complex(half_c) * logdet(o)) * geometry->test_function(o);
  }
};

}  // namespace

Discrepancy check_sp4(const SymplecticElement& gamma, const SymplecticElement& delta,
                      const SiegelPoint& omega) {
  Discrepancy d;
  const SymplecticElement product = delta * gamma;
  if (!gamma.relations().all() || !delta.relations().all() || !product.relations().all()) d.fail();
  if (!(gamma * gamma.inverse() == SymplecticElement::identity())) d.fail();
  // Symmetry and positivity are measured here, not delegated to the
  // resampling guard; only conditioning of M may trigger a resample.
  const CMat2 o = omega.matrix();
  const PeriodTransform<Complex> once = transform_period<Complex>(gamma, o, false);
  const PeriodTransform<Complex> twice = transform_period<Complex>(delta, once.omega_gamma, false);
  const PeriodTransform<Complex> direct = transform_period<Complex>(product, o, false);
  for (const PeriodTransform<Complex>* t : {&once, &twice, &direct}) {
    d.add(t->asymmetry, 1.0);
    if (!SiegelPoint(to_coords(t->omega_gamma)).in_upper_half_space()) d.fail();
  }
  d.add_matrix(twice.omega_gamma, direct.omega_gamma);
  d.add(once.n.determinant() * once.m.determinant(), Complex(1));
  return d;
}

Discrepancy check_nc_symmetry(const SymplecticElement& gamma, const SiegelPoint& omega) {
  Discrepancy d;
  const CMat2 nc = nc_of(gamma, omega.matrix());
  d.add_matrix(nc, nc.transpose());
  return d;
}

Discrepancy check_logdet_gradient(const SymplecticElement& gamma, const SiegelPoint& omega,
                                  const CheckOptions& opt) {
  Discrepancy d;
  const CMat2 o = omega.matrix();
  const CMat2 nc = nc_of(gamma, o);
  const CCoords g = logdet_gradient(gamma, o, opt.first);
  d.add_matrix(g, CCoords(nc(0, 0), Complex(2) * nc(0, 1), nc(1, 1)));
  return d;
}

Discrepancy check_nabla_n(const SymplecticElement& gamma, const SiegelPoint& omega,
                          const ModelGeometry& geometry, Complex x, const CheckOptions& opt) {
  Discrepancy d;
  const CMat2 o = omega.matrix();
  const PeriodTransform<Complex> t = transform_period<Complex>(gamma, o);
  const CRow2 nu_x = geometry.nu(x, o);
  const CMat2 expected = -t.n * gamma.block_c<Complex>() * nu_x.transpose() * nu_x * t.n;
  d.add_matrix(nabla_n(gamma, o, nu_x, opt.first), expected);
  return d;
}

Discrepancy check_det_identities(const SymplecticElement& gamma, const SiegelPoint& omega,
                                 const ModelGeometry& geometry, Complex x, Complex y,
                                 const CheckOptions& opt) {
  Discrepancy d;
  const CMat2 o = omega.matrix();
  const PeriodTransform<Complex> t = transform_period<Complex>(gamma, o);
  const Complex det_n = t.n.determinant();
  const CRow2 nu_x = geometry.nu(x, o);
  const CRow2 nu_y = geometry.nu(y, o);
  const CRow2 dnu_y = geometry.nu_dy(y, o);
  d.add(det_rows<Complex>(nu_x * t.n, nu_y * t.n), det_rows(nu_x, nu_y) * det_n);
  d.add(det_rows<Complex>(nu_y * t.n, dnu_y * t.n), det_rows(nu_y, dnu_y) * det_n);
  const CRow2 lhs_nabla = transformed_nabla_nu(gamma, geometry, o, x, y, opt.first);
  const Complex cross = (nu_x * t.n * gamma.block_c<Complex>() * nu_y.transpose())(0, 0);
  const Complex rhs = det_rows(nu_y, nabla_nu(geometry, o, x, y, opt.first)) * det_n +
                      cross * det_rows(nu_x, nu_y) * det_n;
  d.add(det_rows<Complex>(nu_y * t.n, lhs_nabla), rhs);
  return d;
}

Discrepancy check_psi_invariance(const SymplecticElement& gamma, const SiegelPoint& omega,
                                 const ModelGeometry& geometry, Complex x, Complex y,
                                 const CheckOptions& opt) {
  Discrepancy d;
  const CMat2 o = omega.matrix();
  d.add(evaluate_psi_transformed(gamma, geometry, o, x, y, opt.first),
        evaluate_psi(geometry, o, x, y, opt.first));
  return d;
}

Discrepancy check_pole(const ModelGeometry& geometry, const SiegelPoint& omega, Complex y,
                       const CheckOptions& opt) {
  Discrepancy d;
  const PoleCheck pole = pole_check(geometry, omega.matrix(), y, 1e-3, opt.first);
  d.add(pole.extrapolated, Complex(1));
  return d;
}

Discrepancy check_ode_invariance_identity(const SymplecticElement& gamma, const SiegelPoint& omega,
                                          const ModelGeometry& geometry, Complex x, Complex y1,
                                          Complex y2, const CheckOptions& opt) {
  Discrepancy d;
  const CMat2 o = omega.matrix();
  const CMat2 nc = nc_of(gamma, o);
  const CMat2 c = gamma.block_c<Complex>();
  const CRow2 nu_x = geometry.nu(x, o);
  const CRow2 nu_1 = geometry.nu(y1, o);
  const CRow2 nu_2 = geometry.nu(y2, o);
  const Complex lhs = -(nu_1 * nabla_n(gamma, o, nu_x, opt.first) * c * nu_2.transpose())(0, 0);
  const Complex rhs = (nu_x * nc * nu_1.transpose())(0, 0) * (nu_x * nc * nu_2.transpose())(0, 0);
  d.add(lhs, rhs);
  return d;
}

Discrepancy check_o1_covariance(const SymplecticElement& gamma, const SiegelPoint& omega,
                                const ModelGeometry& geometry, Complex x, const expr::Rational& c,
                                const CheckOptions& opt) {
  static const ward::OperatorForm o1 = ward::build_operator(1);
  Discrepancy d;
  const CMat2 o = omega.matrix();
  require_off_branch_cut(gamma, o);
  const PeriodTransform<Complex> t = transform_period<Complex>(gamma, o);
  const double cv = c.to_double();
  const Weighted g{&geometry, LogDetM(gamma, o), cv / 2};
  const Complex det_factor = std::exp(Complex(cv / 2) * g.logdet.at_base());

  const ChainRule chain{period_jacobian(gamma, o, opt.first), {}};
  Jet lhs_jet;
  lhs_jet.value = g(o);
  lhs_jet.gradient = chain.gradient(omega_gradient(g, o, opt.first));
  OperatorFrame lhs_frame;
  lhs_frame.nu[1] = geometry.nu(x, o) * t.n;
  const Complex s_gamma = transformed_projective_connection(gamma, geometry, o, x, opt.first);
  lhs_frame.projective_connection[1] = s_gamma;

  auto f = [&](const CMat2& p) { return geometry.test_function(p); };
  Jet rhs_jet;
  rhs_jet.value = geometry.test_function(o);
  rhs_jet.gradient = omega_gradient(f, o, opt.first);
  OperatorFrame rhs_frame;
  rhs_frame.nu[1] = geometry.nu(x, o);
  rhs_frame.projective_connection[1] = geometry.projective_connection(x, o);

  d.add(apply_operator(o1, lhs_frame, lhs_jet, cv),
        det_factor * apply_operator(o1, rhs_frame, rhs_jet, cv));

  // s^gamma from the s-law against 6 R^gamma(x, x) from the omega-law.
  const CRow2 nu_x = geometry.nu(x, o);
  const Complex cross = (nu_x * t.n * gamma.block_c<Complex>() * nu_x.transpose())(0, 0);
  d.add(s_gamma, Complex(6) * (geometry.regular(x, x, o) - cross));
  return d;
}

Discrepancy check_o2_covariance(const SymplecticElement& gamma, const SiegelPoint& omega,
                                const ModelGeometry& geometry, Complex x1, Complex x2,
                                const expr::Rational& c, const CheckOptions& opt) {
  static const ward::OperatorForm o2 = ward::build_operator(2);
  Discrepancy d;
  const CMat2 o = omega.matrix();
  require_off_branch_cut(gamma, o);
  const PeriodTransform<Complex> t = transform_period<Complex>(gamma, o);
  const double cv = c.to_double();
  const Weighted g{&geometry, LogDetM(gamma, o), cv / 2};
  const Complex det_factor = std::exp(Complex(cv / 2) * g.logdet.at_base());

  const ChainRule chain{period_jacobian(gamma, o, opt.first), period_hessians(gamma, o, opt.second)};
  const CCoords g_grad = omega_gradient(g, o, opt.first);
  Jet lhs_jet;
  lhs_jet.value = g(o);
  lhs_jet.gradient = chain.gradient(g_grad);
  lhs_jet.hessian = chain.hessian(omega_hessian(g, o, opt.second), g_grad);
  OperatorFrame lhs_frame;
  lhs_frame.nu[1] = geometry.nu(x1, o) * t.n;
  lhs_frame.nu[2] = geometry.nu(x2, o) * t.n;
  lhs_frame.bidifferential[{1, 2}] = transformed_bidifferential(gamma, geometry, o, x1, x2, opt.first);
  lhs_frame.projective_connection[1] = transformed_projective_connection(gamma, geometry, o, x1, opt.first);
  lhs_frame.projective_connection[2] = transformed_projective_connection(gamma, geometry, o, x2, opt.first);

  auto f = [&](const CMat2& p) { return geometry.test_function(p); };
  Jet rhs_jet;
  rhs_jet.value = geometry.test_function(o);
  rhs_jet.gradient = omega_gradient(f, o, opt.first);
  rhs_jet.hessian = omega_hessian(f, o, opt.second);
  OperatorFrame rhs_frame;
  rhs_frame.nu[1] = geometry.nu(x1, o);
  rhs_frame.nu[2] = geometry.nu(x2, o);
  rhs_frame.bidifferential[{1, 2}] = geometry.bidifferential(x1, x2, o);
  rhs_frame.projective_connection[1] = geometry.projective_connection(x1, o);
  rhs_frame.projective_connection[2] = geometry.projective_connection(x2, o);

  d.add(apply_operator(o2, lhs_frame, lhs_jet, cv),
        det_factor * apply_operator(o2, rhs_frame, rhs_jet, cv));
  return d;
}

}  // namespace g2vir::modular
