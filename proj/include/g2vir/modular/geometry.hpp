#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "g2vir/modular/types.hpp"

namespace g2vir::modular {

struct GeometryOptions {
  int nu_y_degree = 3;
  int nu_omega_degree = 2;
  /// Degree of the regular part R(x, y) in each point variable.
  int regular_point_degree = 2;
  int regular_omega_degree = 1;
  int test_function_degree = 3;
  /// Adds 1/(x-y)^2 to the bidifferential.
  bool pole = true;
  bool nu_depends_on_omega = true;
  /// Forces the bidifferential to vanish (pole and regular part).
  bool omega_vanishes = false;
};

/// Seeded polynomial stand-ins for the genus-two data nu_a(y; Omega),
/// omega(x, y; Omega), s(x; Omega) and a test function F(Omega).
///
/// Period dependence is polynomial in u = coords(Omega) - (i, 0, i), so the
/// data are unit scale near the sampled points. R is stored symmetrized, and
/// s(x) = 6 R(x, x).
class ModelGeometry {
 public:
  explicit ModelGeometry(std::uint64_t seed, GeometryOptions options = {});

  [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }
  [[nodiscard]] const GeometryOptions& options() const noexcept { return options_; }

  [[nodiscard]] CRow2 nu(Complex y, const CMat2& omega) const;
  [[nodiscard]] CRow2 nu_dy(Complex y, const CMat2& omega) const;
  /// Regular part R(x, y; Omega) = R(y, x; Omega).
  [[nodiscard]] Complex regular(Complex x, Complex y, const CMat2& omega) const;
  [[nodiscard]] Complex bidifferential(Complex x, Complex y, const CMat2& omega) const;
  [[nodiscard]] Complex projective_connection(Complex x, const CMat2& omega) const;
  [[nodiscard]] Complex test_function(const CMat2& omega) const;

 private:
  // Polynomial in the three shifted period coordinates.
  struct OmegaPoly {
    std::vector<std::array<int, 3>> exponents;
    std::vector<Complex> coefficients;
    [[nodiscard]] Complex operator()(const CCoords& u) const;
  };

  [[nodiscard]] static CCoords shifted(const CMat2& omega);

  std::uint64_t seed_;
  GeometryOptions options_;
  // nu_[a][k]: coefficient of y^k in nu_{a+1}.
  std::array<std::vector<OmegaPoly>, 2> nu_;
  // regular_[j][k] = regular_[k][j]: coefficient of x^j y^k.
  std::vector<std::vector<OmegaPoly>> regular_;
  OmegaPoly test_;
};

}  // namespace g2vir::modular
