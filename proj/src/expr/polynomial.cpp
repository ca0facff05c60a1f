#include "g2vir/expr/polynomial.hpp"

#include <set>
#include <stdexcept>

namespace g2vir::expr {

Polynomial::Polynomial(Coefficient constant) { add_term(Monomial(), constant); }

Polynomial::Polynomial(Atom atom) { add_term(Monomial(atom), Coefficient(1)); }

Polynomial::Polynomial(const Monomial& monomial, const Coefficient& coefficient) {
  add_term(monomial, coefficient);
}

Coefficient Polynomial::coefficient(const Monomial& monomial) const {
  const auto it = terms_.find(monomial);
  return it == terms_.end() ? Coefficient() : it->second;
}

bool Polynomial::contains(AtomKind kind) const noexcept {
  for (const auto& [m, coeff] : terms_) {
    if (m.degree(kind) > 0) return true;
  }
  return false;
}

bool Polynomial::contains(const Atom& atom) const noexcept {
  for (const auto& [m, coeff] : terms_) {
    if (m.exponent(atom) > 0) return true;
  }
  return false;
}

void Polynomial::add_term(const Monomial& monomial, const Coefficient& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(monomial, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second.is_zero()) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  for (const auto& [m, coeff] : rhs.terms_) add_term(m, coeff);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  for (const auto& [m, coeff] : rhs.terms_) add_term(m, -coeff);
  return *this;
}

Polynomial add(const Polynomial& p, const Polynomial& q) {
  Polynomial out = p;
  out += q;
  return out;
}

Polynomial sub(const Polynomial& p, const Polynomial& q) {
  Polynomial out = p;
  out -= q;
  return out;
}

Polynomial mul(const Polynomial& p, const Polynomial& q) {
  Polynomial out;
  for (const auto& [mp, cp] : p.terms()) {
    for (const auto& [mq, cq] : q.terms()) out.add_term(mp * mq, cp * cq);
  }
  return out;
}

Polynomial scale(const Polynomial& p, const Coefficient& k) {
  Polynomial out;
  if (k.is_zero()) return out;
  for (const auto& [m, coeff] : p.terms()) out.add_term(m, coeff * k);
  return out;
}

Polynomial pow(const Polynomial& p, int k) {
  if (k < 0) throw std::invalid_argument("negative polynomial power");
  Polynomial out(1);
  for (int i = 0; i < k; ++i) out = mul(out, p);
  return out;
}

Polynomial derive(const Polynomial& p, const DerivationRule& rule) {
  std::map<Atom, Polynomial> images;
  const auto image = [&](const Atom& atom) -> const Polynomial& {
    auto it = images.find(atom);
    if (it == images.end()) it = images.emplace(atom, rule(atom)).first;
    return it->second;
  };

  Polynomial out;
  for (const auto& [m, coeff] : p.terms()) {
    for (const auto& [atom, e] : m.factors()) {
      const Polynomial& img = image(atom);
      if (img.is_zero()) continue;
      const Monomial rest = m.divided_by(atom);
      const Coefficient k = coeff * Coefficient(e);
      for (const auto& [mi, ci] : img.terms()) out.add_term(rest * mi, k * ci);
    }
  }
  return out;
}

Polynomial substitute(const Polynomial& p, const Atom& target, const Polynomial& replacement) {
  std::map<int, Polynomial> powers;
  Polynomial out;
  for (const auto& [m, coeff] : p.terms()) {
    const int e = m.exponent(target);
    if (e == 0) {
      out.add_term(m, coeff);
      continue;
    }
    auto it = powers.find(e);
    if (it == powers.end()) it = powers.emplace(e, pow(replacement, e)).first;
    const Monomial rest = m.without(target);
    for (const auto& [mr, cr] : it->second.terms()) out.add_term(rest * mr, coeff * cr);
  }
  return out;
}

Polynomial relabel(const Polynomial& p, const LabelMap& sigma) {
  const auto map = [&](int label) {
    const auto it = sigma.find(label);
    return it == sigma.end() ? label : it->second;
  };

  std::set<int> labels;
  for (const auto& [m, coeff] : p.terms()) {
    for (const auto& [atom, e] : m.factors()) {
      for (int k = 0; k < atom.label_count(); ++k) labels.insert(atom.label(k));
    }
  }
  std::set<int> images;
  for (int label : labels) {
    if (!images.insert(map(label)).second) {
      throw std::invalid_argument("relabel: map is not injective on the labels present");
    }
  }

  Polynomial out;
  for (const auto& [m, coeff] : p.terms()) {
    std::vector<Monomial::Factor> factors;
    factors.reserve(m.factors().size());
    for (const auto& [atom, e] : m.factors()) factors.emplace_back(atom.relabeled(map), e);
    out.add_term(Monomial::from_factors(std::move(factors)), coeff);
  }
  return out;
}

Polynomial filter(const Polynomial& p, const std::function<bool(const Monomial&)>& keep) {
  Polynomial out;
  for (const auto& [m, coeff] : p.terms()) {
    if (keep(m)) out.add_term(m, coeff);
  }
  return out;
}

}  // namespace g2vir::expr
