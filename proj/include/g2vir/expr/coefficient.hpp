#pragma once

#include <map>

#include "g2vir/expr/rational.hpp"

namespace g2vir::expr {

/// Polynomial in the central charge c with rational coefficients.
///
/// Stored sparsely as degree -> rational; zero coefficients are never stored,
/// so two coefficients are equal iff their maps are identical.
class Coefficient {
 public:
  using Terms = std::map<int, Rational>;

  Coefficient() = default;
  Coefficient(Rational constant);  // NOLINT(google-explicit-constructor)
  Coefficient(std::int64_t constant) : Coefficient(Rational(constant)) {}  // NOLINT

  /// r * c^degree
  static Coefficient term(Rational r, int degree);
  /// The formal central charge c.
  static Coefficient c() { return term(Rational(1), 1); }

  [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] Rational at(int degree) const;
  /// Highest c-degree; -1 for the zero coefficient.
  [[nodiscard]] int degree() const noexcept;

  [[nodiscard]] Rational evaluate(const Rational& c) const;
  [[nodiscard]] double evaluate(double c) const;

  Coefficient operator-() const;
  Coefficient& operator+=(const Coefficient& rhs);
  Coefficient& operator-=(const Coefficient& rhs);
  Coefficient& operator*=(const Coefficient& rhs);

  friend Coefficient operator+(Coefficient lhs, const Coefficient& rhs) { return lhs += rhs; }
  friend Coefficient operator-(Coefficient lhs, const Coefficient& rhs) { return lhs -= rhs; }
  friend Coefficient operator*(const Coefficient& lhs, const Coefficient& rhs);

  friend bool operator==(const Coefficient&, const Coefficient&) = default;

 private:
  void add_term(int degree, const Rational& r);

  Terms terms_;
};

}  // namespace g2vir::expr
