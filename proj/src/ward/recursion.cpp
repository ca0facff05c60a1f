#include "g2vir/ward/recursion.hpp"

#include <algorithm>
#include <string>

namespace g2vir::ward {

using expr::AtomKind;
using expr::Monomial;

Polynomial rewrite_rule(const Atom& atom, int new_label) {
  if (atom.has_label(new_label)) {
    throw std::invalid_argument("rewrite_rule: insertion label already present in atom");
  }
  const int x = new_label;
  switch (atom.kind()) {
    case AtomKind::Om:
      return Polynomial(Atom::om(x, atom.first())) * Polynomial(Atom::om(x, atom.second()));
    case AtomKind::Nu:
      return Polynomial(Atom::om(x, atom.second())) * Polynomial(Atom::nu(atom.first(), x));
    case AtomKind::S: {
      const int k = atom.first();
      Polynomial out(Monomial(Atom::om(x, k), 2), Coefficient(6));
      out.add_term(Monomial(Atom::p4(x, k)), Coefficient(-6));
      return out;
    }
    case AtomKind::Alpha:
    case AtomKind::P4:
    case AtomKind::X: return {};
  }
  return {};
}

Polynomial RecursionTerms::sum() const {
  Polynomial out = connection;
  out += insertion;
  out += derivation;
  out += contraction;
  return out;
}

RecursionTerms expand_recursion(const OperatorForm& prev,
                                const std::map<int, OperatorForm>& prev2, int new_label) {
  const auto& labels = prev.labels();
  if (std::find(labels.begin(), labels.end(), new_label) != labels.end()) {
    throw std::invalid_argument("expand_recursion: new label already in use");
  }
  for (int k : labels) {
    const auto it = prev2.find(k);
    if (it == prev2.end()) {
      throw std::invalid_argument("expand_recursion: missing O_{n-2} with label " +
                                  std::to_string(k) + " removed");
    }
    std::vector<int> expected;
    std::copy_if(labels.begin(), labels.end(), std::back_inserter(expected),
                 [k](int l) { return l != k; });
    if (it->second.labels() != expected) {
      throw std::invalid_argument("expand_recursion: O_{n-2} label set mismatch");
    }
  }

  const int x = new_label;
  RecursionTerms t;
  t.connection = expr::scale(Polynomial(Atom::s(x)), Coefficient::term(Rational(1, 12), 1)) *
                 prev.poly();
  t.insertion = chain_weight(x, x) * prev.poly();
  t.derivation = expr::derive(prev.poly(), [x](const Atom& a) { return rewrite_rule(a, x); });
  const Coefficient half_c = Coefficient::term(Rational(1, 2), 1);
  for (int k : labels) {
    t.contraction += expr::scale(Polynomial(Atom::p4(x, k)), half_c) * prev2.at(k).poly();
  }
  return t;
}

namespace {

std::string residual_message(const Polynomial& residual) {
  return "cancellation failure: " + std::to_string(residual.size()) + " P4 terms survive";
}

}  // namespace

CancellationFailure::CancellationFailure(Polynomial residual)
    : std::runtime_error(residual_message(residual)), residual_(std::move(residual)) {}

OperatorForm apply_recursion(const OperatorForm& prev, const std::map<int, OperatorForm>& prev2,
                             int new_label) {
  const Polynomial total = expand_recursion(prev, prev2, new_label).sum();
  Polynomial residual = expr::filter(
      total, [](const Monomial& m) { return m.degree(AtomKind::P4) > 0; });
  if (!residual.is_zero()) throw CancellationFailure(std::move(residual));

  std::vector<int> labels = prev.labels();
  labels.insert(std::upper_bound(labels.begin(), labels.end(), new_label), new_label);
  return OperatorForm(std::move(labels), total);
}

}  // namespace g2vir::ward
