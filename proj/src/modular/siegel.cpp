#include "g2vir/modular/siegel.hpp"

namespace g2vir::modular {

PointTransform transform_period(const SymplecticElement& gamma, const SiegelPoint& omega) {
  const PeriodTransform<Complex> t = transform_period<Complex>(gamma, omega.matrix());
  PointTransform out{SiegelPoint(to_coords(t.omega_gamma)), t.m, t.n, t.asymmetry};
  if (!out.omega_gamma.in_upper_half_space())
    throw ConditioningError("transformed period left the upper half space");
  return out;
}

Complex log_det(const CMat2& m) { return std::log(m.determinant()); }

}  // namespace g2vir::modular
