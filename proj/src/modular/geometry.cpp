#include "g2vir/modular/geometry.hpp"

#include <random>

namespace g2vir::modular {

namespace {

std::vector<std::array<int, 3>> exponents_up_to(int degree) {
  std::vector<std::array<int, 3>> out;
  for (int d = 0; d <= degree; ++d)
    for (int i = d; i >= 0; --i)
      for (int j = d - i; j >= 0; --j) out.push_back({i, j, d - i - j});
  return out;
}

Complex power(Complex z, int k) {
  Complex r(1);
  for (int i = 0; i < k; ++i) r *= z;
  return r;
}

}  // namespace

Complex ModelGeometry::OmegaPoly::operator()(const CCoords& u) const {
  Complex acc(0);
  for (std::size_t t = 0; t < exponents.size(); ++t) {
    const auto& e = exponents[t];
    acc += coefficients[t] * power(u(0), e[0]) * power(u(1), e[1]) * power(u(2), e[2]);
  }
  return acc;
}

ModelGeometry::ModelGeometry(std::uint64_t seed, GeometryOptions options)
    : seed_(seed), options_(options) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  auto draw = [&](int degree) {
    OmegaPoly p;
    p.exponents = exponents_up_to(degree);
    for (std::size_t t = 0; t < p.exponents.size(); ++t) p.coefficients.emplace_back(unit(rng), unit(rng));
    return p;
  };
  const int nu_omega = options_.nu_depends_on_omega ? options_.nu_omega_degree : 0;
  for (auto& component : nu_)
    for (int k = 0; k <= options_.nu_y_degree; ++k) component.push_back(draw(nu_omega));
  const int dr = options_.regular_point_degree;
  regular_.assign(static_cast<std::size_t>(dr + 1), std::vector<OmegaPoly>(static_cast<std::size_t>(dr + 1)));
  for (int j = 0; j <= dr; ++j)
    for (int k = j; k <= dr; ++k) {
      regular_[j][k] = draw(options_.regular_omega_degree);
      regular_[k][j] = regular_[j][k];
    }
  test_ = draw(options_.test_function_degree);
}

CCoords ModelGeometry::shifted(const CMat2& omega) {
  return to_coords(omega) - CCoords(Complex(0, 1), Complex(0), Complex(0, 1));
}

CRow2 ModelGeometry::nu(Complex y, const CMat2& omega) const {
  const CCoords u = shifted(omega);
  CRow2 out = CRow2::Zero();
  for (int a = 0; a < 2; ++a) {
    const auto& component = nu_[static_cast<std::size_t>(a)];
    for (std::size_t k = 0; k < component.size(); ++k)
      out(a) += component[k](u) * power(y, static_cast<int>(k));
  }
  return out;
}

CRow2 ModelGeometry::nu_dy(Complex y, const CMat2& omega) const {
  const CCoords u = shifted(omega);
  CRow2 out = CRow2::Zero();
  for (int a = 0; a < 2; ++a) {
    const auto& component = nu_[static_cast<std::size_t>(a)];
    for (std::size_t k = 1; k < component.size(); ++k)
      out(a) += Complex(static_cast<double>(k)) * component[k](u) * power(y, static_cast<int>(k) - 1);
  }
  return out;
}

Complex ModelGeometry::regular(Complex x, Complex y, const CMat2& omega) const {
  if (options_.omega_vanishes) return Complex(0);
  const CCoords u = shifted(omega);
  Complex acc(0);
  for (std::size_t j = 0; j < regular_.size(); ++j)
    for (std::size_t k = 0; k < regular_.size(); ++k)
      acc += regular_[j][k](u) * power(x, static_cast<int>(j)) * power(y, static_cast<int>(k));
  return acc;
}

Complex ModelGeometry::bidifferential(Complex x, Complex y, const CMat2& omega) const {
  if (options_.omega_vanishes) return Complex(0);
  Complex value = regular(x, y, omega);
  if (options_.pole) value += Complex(1) / ((x - y) * (x - y));
  return value;
}

Complex ModelGeometry::projective_connection(Complex x, const CMat2& omega) const {
  return Complex(6) * regular(x, x, omega);
}

Complex ModelGeometry::test_function(const CMat2& omega) const { return test_(shifted(omega)); }

}  // namespace g2vir::modular
