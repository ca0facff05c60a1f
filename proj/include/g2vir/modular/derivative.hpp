#pragma once

#include <type_traits>

#include "g2vir/modular/types.hpp"

namespace g2vir::modular {

struct DiffOptions {
  double step = 1e-5;
  /// Combines steps h and h/2 to cancel the h^2 error term.
  bool richardson = false;
};

/// d f / d Omega_k by central differences. f maps a symmetric 2x2 matrix to a
/// scalar or an Eigen object; the off-diagonal coordinate moves both slots.
template <class F>
auto omega_derivative(F&& f, const CMat2& omega, int k, const DiffOptions& opt = {}) {
  using Result = std::decay_t<decltype(f(omega))>;
  const CMat2 e = unit_direction<Complex>(k);
  auto central = [&](double h) -> Result {
    const Result plus = f(CMat2(omega + Complex(h) * e));
    const Result minus = f(CMat2(omega - Complex(h) * e));
    return Result((plus - minus) / Complex(2 * h));
  };
  if (!opt.richardson) return central(opt.step);
  const Result coarse = central(opt.step);
  const Result fine = central(opt.step / 2);
  return Result((Complex(4) * fine - coarse) / Complex(3));
}

/// Gradient of a scalar function in the three period coordinates.
template <class F>
CCoords omega_gradient(F&& f, const CMat2& omega, const DiffOptions& opt = {}) {
  CCoords g;
  for (int k = 0; k < 3; ++k) g(k) = omega_derivative(f, omega, k, opt);
  return g;
}

/// nabla_x f = sum_{a<=b} nu_a(x) nu_b(x) d f / d Omega_ab.
template <class F>
auto nabla(F&& f, const CMat2& omega, const CRow2& nu_x, const DiffOptions& opt = {}) {
  using Result = std::decay_t<decltype(f(omega))>;
  Result acc = Result(omega_derivative(f, omega, 0, opt) * (nu_x(0) * nu_x(0)));
  acc = Result(acc + omega_derivative(f, omega, 1, opt) * (nu_x(0) * nu_x(1)));
  acc = Result(acc + omega_derivative(f, omega, 2, opt) * (nu_x(1) * nu_x(1)));
  return acc;
}

/// Hessian of a scalar function in the three period coordinates.
template <class F>
Eigen::Matrix<Complex, 3, 3> omega_hessian(F&& f, const CMat2& omega, const DiffOptions& opt = {}) {
  auto at = [&](int k, double hk, int l, double hl) {
    return f(CMat2(omega + Complex(hk) * unit_direction<Complex>(k) +
                   Complex(hl) * unit_direction<Complex>(l)));
  };
  auto pass = [&](double h) {
    Eigen::Matrix<Complex, 3, 3> hess;
    const Complex centre = f(omega);
    for (int k = 0; k < 3; ++k) {
      hess(k, k) = (at(k, h, k, 0) - Complex(2) * centre + at(k, -h, k, 0)) / Complex(h * h);
      for (int l = k + 1; l < 3; ++l) {
        hess(k, l) = hess(l, k) =
            (at(k, h, l, h) - at(k, h, l, -h) - at(k, -h, l, h) + at(k, -h, l, -h)) /
            Complex(4 * h * h);
      }
    }
    return hess;
  };
  if (!opt.richardson) return pass(opt.step);
  const Eigen::Matrix<Complex, 3, 3> coarse = pass(opt.step);
  const Eigen::Matrix<Complex, 3, 3> fine = pass(opt.step / 2);
  return (Complex(4) * fine - coarse) / Complex(3);
}

}  // namespace g2vir::modular
