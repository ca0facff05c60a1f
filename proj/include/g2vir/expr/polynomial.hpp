#pragma once

#include <functional>
#include <map>

#include "g2vir/expr/atom.hpp"
#include "g2vir/expr/coefficient.hpp"
#include "g2vir/expr/monomial.hpp"

namespace g2vir::expr {

/// Exact multivariate polynomial over formal atoms with coefficients in Q[c].
///
/// Canonical by construction: the term map is ordered by monomial and holds
/// no zero coefficients, so structural equality is mathematical equality.
/// Values are immutable once built and safe to share across threads.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Coefficient>;

  Polynomial() = default;
  Polynomial(Coefficient constant);  // NOLINT(google-explicit-constructor)
  Polynomial(Rational constant) : Polynomial(Coefficient(constant)) {}  // NOLINT
  Polynomial(std::int64_t constant) : Polynomial(Coefficient(constant)) {}  // NOLINT
  Polynomial(Atom atom);  // NOLINT(google-explicit-constructor)
  Polynomial(const Monomial& monomial, const Coefficient& coefficient);

  [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] Coefficient coefficient(const Monomial& monomial) const;
  [[nodiscard]] bool contains(AtomKind kind) const noexcept;
  [[nodiscard]] bool contains(const Atom& atom) const noexcept;

  /// Accumulates coefficient * monomial in place.
  void add_term(const Monomial& monomial, const Coefficient& coefficient);

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  Terms terms_;
};

using DerivationRule = std::function<Polynomial(const Atom&)>;
/// Maps labels to labels; labels absent from the map are fixed.
using LabelMap = std::map<int, int>;

[[nodiscard]] Polynomial add(const Polynomial& p, const Polynomial& q);
[[nodiscard]] Polynomial sub(const Polynomial& p, const Polynomial& q);
[[nodiscard]] Polynomial mul(const Polynomial& p, const Polynomial& q);
[[nodiscard]] Polynomial scale(const Polynomial& p, const Coefficient& k);
[[nodiscard]] Polynomial pow(const Polynomial& p, int k);

/// Derivation extending `rule` from atoms to products by Leibniz:
/// every atom occurrence F in a monomial m contributes coeff(m) * (m/F) * rule(F).
[[nodiscard]] Polynomial derive(const Polynomial& p, const DerivationRule& rule);

/// Replaces every occurrence of `target` (power k -> replacement^k).
[[nodiscard]] Polynomial substitute(const Polynomial& p, const Atom& target,
                                    const Polynomial& replacement);

/// Applies a label bijection to every atom. Throws std::invalid_argument if
/// `sigma` identifies two labels that occur in p.
[[nodiscard]] Polynomial relabel(const Polynomial& p, const LabelMap& sigma);

/// Terms of p whose monomial satisfies `keep`.
[[nodiscard]] Polynomial filter(const Polynomial& p,
                                const std::function<bool(const Monomial&)>& keep);

inline Polynomial operator+(const Polynomial& p, const Polynomial& q) { return add(p, q); }
inline Polynomial operator-(const Polynomial& p, const Polynomial& q) { return sub(p, q); }
inline Polynomial operator*(const Polynomial& p, const Polynomial& q) { return mul(p, q); }
inline Polynomial operator-(const Polynomial& p) { return scale(p, Coefficient(-1)); }

}  // namespace g2vir::expr
