#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <utility>

#include <Eigen/Dense>

namespace g2vir::modular {

using Complex = std::complex<double>;

template <class Scalar>
using Mat2 = Eigen::Matrix<Scalar, 2, 2>;
template <class Scalar>
using Row2 = Eigen::Matrix<Scalar, 1, 2>;
/// Period coordinates (Omega_11, Omega_12, Omega_22).
template <class Scalar>
using Coords = Eigen::Matrix<Scalar, 3, 1>;

using IMat2 = Mat2<std::int64_t>;
using CMat2 = Mat2<Complex>;
using CRow2 = Row2<Complex>;
using CCoords = Coords<Complex>;

/// Coordinate k <-> zero-based matrix slot (a, b) with a <= b.
inline constexpr std::array<std::pair<int, int>, 3> kCoordinateSlots{{{0, 0}, {0, 1}, {1, 1}}};

/// Coordinate index of the one-based pair (a, b), in either order.
constexpr int coordinate_index(int a, int b) noexcept {
  return (a == b) ? (a == 1 ? 0 : 2) : 1;
}

/// Unit direction of coordinate k. The off-diagonal coordinate is a single
/// variable, so its direction fills both slots.
template <class Scalar>
Mat2<Scalar> unit_direction(int k) {
  Mat2<Scalar> e = Mat2<Scalar>::Zero();
  const auto [a, b] = kCoordinateSlots[static_cast<std::size_t>(k)];
  e(a, b) = Scalar(1);
  e(b, a) = Scalar(1);
  return e;
}

template <class Scalar>
Coords<Scalar> to_coords(const Mat2<Scalar>& m) {
  return Coords<Scalar>(m(0, 0), m(0, 1), m(1, 1));
}

template <class Scalar>
Mat2<Scalar> from_coords(const Coords<Scalar>& v) {
  Mat2<Scalar> m;
  m << v(0), v(1), v(1), v(2);
  return m;
}

/// Row-vector determinant |u; v|.
template <class Scalar>
Scalar det_rows(const Row2<Scalar>& u, const Row2<Scalar>& v) {
  return u(0) * v(1) - u(1) * v(0);
}

/// Symmetric direction matrix u^T v + v^T u, halved. For u == v this is the
/// direction along which nabla differentiates.
template <class Scalar>
Mat2<Scalar> sym_outer(const Row2<Scalar>& u, const Row2<Scalar>& v) {
  return (u.transpose() * v + v.transpose() * u) / Scalar(2);
}

}  // namespace g2vir::modular
