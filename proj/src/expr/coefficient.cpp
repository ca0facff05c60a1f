#include "g2vir/expr/coefficient.hpp"

#include <cmath>

namespace g2vir::expr {

Coefficient::Coefficient(Rational constant) { add_term(0, constant); }

Coefficient Coefficient::term(Rational r, int degree) {
  Coefficient out;
  out.add_term(degree, r);
  return out;
}

Rational Coefficient::at(int degree) const {
  const auto it = terms_.find(degree);
  return it == terms_.end() ? Rational() : it->second;
}

int Coefficient::degree() const noexcept {
  return terms_.empty() ? -1 : terms_.rbegin()->first;
}

Rational Coefficient::evaluate(const Rational& c) const {
  Rational sum;
  for (const auto& [deg, r] : terms_) {
    Rational p(1);
    for (int i = 0; i < deg; ++i) p *= c;
    sum += r * p;
  }
  return sum;
}

double Coefficient::evaluate(double c) const {
  double sum = 0.0;
  for (const auto& [deg, r] : terms_) sum += r.to_double() * std::pow(c, deg);
  return sum;
}

void Coefficient::add_term(int degree, const Rational& r) {
  if (r.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(degree, r);
  if (inserted) return;
  it->second += r;
  if (it->second.is_zero()) terms_.erase(it);
}

Coefficient Coefficient::operator-() const {
  Coefficient out;
  for (const auto& [deg, r] : terms_) out.terms_.emplace(deg, -r);
  return out;
}

Coefficient& Coefficient::operator+=(const Coefficient& rhs) {
  for (const auto& [deg, r] : rhs.terms_) add_term(deg, r);
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& rhs) {
  for (const auto& [deg, r] : rhs.terms_) add_term(deg, -r);
  return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& rhs) {
  *this = *this * rhs;
  return *this;
}

Coefficient operator*(const Coefficient& lhs, const Coefficient& rhs) {
  Coefficient out;
  for (const auto& [dl, rl] : lhs.terms_) {
    for (const auto& [dr, rr] : rhs.terms_) out.add_term(dl + dr, rl * rr);
  }
  return out;
}

}  // namespace g2vir::expr
