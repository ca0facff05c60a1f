#include "g2vir/expr/monomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace g2vir::expr {

namespace {

int checked_exponent(int e) {
  if (e > kMaxExponent) {
    throw std::overflow_error("atom exponent exceeds cap " + std::to_string(kMaxExponent));
  }
  return e;
}

}  // namespace

Monomial::Monomial(Atom atom, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  if (exponent > 0) factors_.emplace_back(atom, checked_exponent(exponent));
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  Monomial out;
  for (const auto& [atom, e] : factors) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    if (e == 0) continue;
    if (!out.factors_.empty() && out.factors_.back().first == atom) {
      out.factors_.back().second = checked_exponent(out.factors_.back().second + e);
    } else {
      out.factors_.emplace_back(atom, checked_exponent(e));
    }
  }
  return out;
}

int Monomial::exponent(const Atom& atom) const noexcept {
  const auto it = std::lower_bound(factors_.begin(), factors_.end(), atom,
                                   [](const Factor& f, const Atom& a) { return f.first < a; });
  return (it != factors_.end() && it->first == atom) ? it->second : 0;
}

int Monomial::degree() const noexcept {
  int d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

int Monomial::degree(AtomKind kind) const noexcept {
  int d = 0;
  for (const auto& f : factors_) {
    if (f.first.kind() == kind) d += f.second;
  }
  return d;
}

Monomial Monomial::divided_by(const Atom& atom) const {
  Monomial out = *this;
  const auto it = std::find_if(out.factors_.begin(), out.factors_.end(),
                               [&](const Factor& f) { return f.first == atom; });
  if (it == out.factors_.end()) throw std::logic_error("divided_by: atom not present");
  if (--it->second == 0) out.factors_.erase(it);
  return out;
}

Monomial Monomial::without(const Atom& atom) const {
  Monomial out = *this;
  std::erase_if(out.factors_, [&](const Factor& f) { return f.first == atom; });
  return out;
}

Monomial operator*(const Monomial& lhs, const Monomial& rhs) {
  Monomial out;
  out.factors_.reserve(lhs.factors_.size() + rhs.factors_.size());
  auto l = lhs.factors_.begin();
  auto r = rhs.factors_.begin();
  while (l != lhs.factors_.end() && r != rhs.factors_.end()) {
    if (l->first < r->first) {
      out.factors_.push_back(*l++);
    } else if (r->first < l->first) {
      out.factors_.push_back(*r++);
    } else {
      out.factors_.emplace_back(l->first, checked_exponent(l->second + r->second));
      ++l;
      ++r;
    }
  }
  out.factors_.insert(out.factors_.end(), l, lhs.factors_.end());
  out.factors_.insert(out.factors_.end(), r, rhs.factors_.end());
  return out;
}

}  // namespace g2vir::expr
