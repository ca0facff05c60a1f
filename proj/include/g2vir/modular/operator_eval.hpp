#pragma once

#include <map>
#include <utility>

#include "g2vir/modular/types.hpp"
#include "g2vir/ward/operator.hpp"

namespace g2vir::modular {

/// Value, gradient and Hessian of a function of the period coordinates.
struct Jet {
  Complex value;
  CCoords gradient = CCoords::Zero();
  Eigen::Matrix<Complex, 3, 3> hessian = Eigen::Matrix<Complex, 3, 3>::Zero();
};

/// Numeric values for the atoms of an operator at fixed points.
struct OperatorFrame {
  std::map<int, CRow2> nu;
  std::map<std::pair<int, int>, Complex> bidifferential;  // key (i, j) with i < j
  std::map<int, Complex> projective_connection;
};

/// Applies the operator in normal order: every monomial's non-alpha atoms are
/// evaluated from the frame and multiply the mixed derivative named by its
/// alpha atoms, read off the jet. Throws std::invalid_argument for an alpha
/// degree above 2 or an atom the frame does not supply.
[[nodiscard]] Complex apply_operator(const ward::OperatorForm& op, const OperatorFrame& frame,
                                     const Jet& jet, double c);

}  // namespace g2vir::modular
