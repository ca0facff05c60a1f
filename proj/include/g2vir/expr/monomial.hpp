#pragma once

#include <compare>
#include <span>
#include <utility>
#include <vector>

#include "g2vir/expr/atom.hpp"

namespace g2vir::expr {

/// Largest exponent any atom may carry in a monomial.
inline constexpr int kMaxExponent = 64;

/// Commutative product of atoms with positive integer exponents, kept sorted
/// by the canonical atom order with no repeated atoms.
class Monomial {
 public:
  using Factor = std::pair<Atom, int>;

  Monomial() = default;
  explicit Monomial(Atom atom, int exponent = 1);
  /// Canonicalizes an arbitrary factor list (sorts, merges, drops zero powers).
  static Monomial from_factors(std::vector<Factor> factors);

  [[nodiscard]] std::span<const Factor> factors() const noexcept { return factors_; }
  [[nodiscard]] bool is_one() const noexcept { return factors_.empty(); }
  [[nodiscard]] int exponent(const Atom& atom) const noexcept;
  [[nodiscard]] int degree() const noexcept;
  [[nodiscard]] int degree(AtomKind kind) const noexcept;

  /// This monomial divided by `atom` once; atom must be present.
  [[nodiscard]] Monomial divided_by(const Atom& atom) const;
  /// This monomial with every power of `atom` removed.
  [[nodiscard]] Monomial without(const Atom& atom) const;

  friend Monomial operator*(const Monomial& lhs, const Monomial& rhs);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

}  // namespace g2vir::expr
