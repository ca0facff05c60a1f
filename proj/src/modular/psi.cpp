#include "g2vir/modular/psi.hpp"

#include "g2vir/modular/transformed.hpp"

namespace g2vir::modular {

namespace {

Complex assemble(Complex bidifferential, const CRow2& nu_x, const CRow2& nu_y,
                 const CRow2& nabla_nu_y, const CRow2& dnu_y) {
  const Complex den = det_rows(nu_y, dnu_y);
  if (std::abs(den) < kMinPsiDenominator) throw ConditioningError("Psi denominator is degenerate");
  return -(bidifferential * det_rows(nu_x, nu_y) + det_rows(nu_y, nabla_nu_y)) / den;
}

}  // namespace

CRow2 nabla_nu(const ModelGeometry& geometry, const CMat2& omega, Complex x, Complex y,
               const DiffOptions& opt) {
  auto nu_y = [&](const CMat2& o) -> CRow2 { return geometry.nu(y, o); };
  return nabla(nu_y, omega, geometry.nu(x, omega), opt);
}

Complex evaluate_psi(const ModelGeometry& geometry, const CMat2& omega, Complex x, Complex y,
                     const DiffOptions& opt) {
  return assemble(geometry.bidifferential(x, y, omega), geometry.nu(x, omega), geometry.nu(y, omega),
                  nabla_nu(geometry, omega, x, y, opt), geometry.nu_dy(y, omega));
}

Complex evaluate_psi_transformed(const SymplecticElement& gamma, const ModelGeometry& geometry,
                                 const CMat2& omega, Complex x, Complex y, const DiffOptions& opt) {
  const CMat2 n = transform_period<Complex>(gamma, omega).n;
  return assemble(transformed_bidifferential(gamma, geometry, omega, x, y, opt),
                  geometry.nu(x, omega) * n, geometry.nu(y, omega) * n,
                  transformed_nabla_nu(gamma, geometry, omega, x, y, opt),
                  geometry.nu_dy(y, omega) * n);
}

PoleCheck pole_check(const ModelGeometry& geometry, const CMat2& omega, Complex y, double eps,
                     const DiffOptions& opt) {
  PoleCheck out;
  for (std::size_t i = 0; i < 3; ++i) {
    out.steps[i] = eps / static_cast<double>(1 << i);
    const Complex step(out.steps[i]);
    out.samples[i] = step * evaluate_psi(geometry, omega, y + step, y, opt);
  }
  const Complex r0 = Complex(2) * out.samples[1] - out.samples[0];
  const Complex r1 = Complex(2) * out.samples[2] - out.samples[1];
  out.extrapolated = (Complex(4) * r1 - r0) / Complex(3);
  out.error = std::abs(out.extrapolated - Complex(1));
  return out;
}

}  // namespace g2vir::modular
