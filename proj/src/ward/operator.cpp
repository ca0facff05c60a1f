#include "g2vir/ward/operator.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace g2vir::ward {

using expr::AtomKind;

OperatorForm::OperatorForm(std::vector<int> labels, Polynomial poly)
    : labels_(std::move(labels)), poly_(std::move(poly)) {
  if (!std::is_sorted(labels_.begin(), labels_.end()) ||
      std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
    throw std::invalid_argument("operator labels must be strictly increasing");
  }
  if (poly_.contains(AtomKind::P4) || poly_.contains(AtomKind::X)) {
    throw std::invalid_argument("operator form may not contain P4 or X atoms");
  }
  const std::set<int> allowed(labels_.begin(), labels_.end());
  for (const auto& [m, coeff] : poly_.terms()) {
    for (const auto& [atom, e] : m.factors()) {
      for (int k = 0; k < atom.label_count(); ++k) {
        if (!allowed.contains(atom.label(k))) {
          throw std::invalid_argument("operator mentions label " + std::to_string(atom.label(k)) +
                                      " outside its label set");
        }
      }
    }
  }
}

Polynomial chain_weight(int k, int l) {
  Polynomial out;
  const Coefficient half(Rational(1, 2));
  for (int a = 1; a <= 2; ++a) {
    for (int b = a; b <= 2; ++b) {
      const Polynomial alpha(Atom::alpha(a, b));
      const Polynomial sym = Polynomial(Atom::nu(a, k)) * Polynomial(Atom::nu(b, l)) +
                             Polynomial(Atom::nu(a, l)) * Polynomial(Atom::nu(b, k));
      out += expr::scale(alpha * sym, half);
    }
  }
  return out;
}

Polynomial edge_weight(int i, int j) {
  if (i == j) return expr::scale(Polynomial(Atom::s(i)), Coefficient(Rational(1, 6)));
  return Polynomial(Atom::om(i, j));
}

Polynomial graph_weight(const graphs::VirasoroGraph& g, std::span<const int> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != g.size()) {
    throw std::invalid_argument("graph_weight: label list size differs from graph order");
  }
  const auto label = [&](int v) { return labels.empty() ? v : labels[v - 1]; };

  const graphs::Decomposition d = graphs::classify(g);
  Polynomial w(Coefficient::term(Rational(1, 1), 0));
  for (int k = 0; k < d.cycle_count(); ++k) {
    w = expr::scale(w, Coefficient::term(Rational(1, 2), 1));
  }
  for (const auto& [from, to] : g.edges()) w = w * edge_weight(label(from), label(to));
  for (const auto& chain : d.chains) w = w * chain_weight(label(chain.front()), label(chain.back()));
  return w;
}

OperatorForm build_operator(int n, int cap) {
  std::vector<int> labels(std::max(n, 0));
  for (int i = 0; i < n; ++i) labels[i] = i + 1;
  return build_operator(labels, cap);
}

OperatorForm build_operator(const std::vector<int>& labels, int cap) {
  const int n = static_cast<int>(labels.size());
  if (n > cap) {
    throw std::length_error("operator order " + std::to_string(n) + " exceeds the weighted cap " +
                            std::to_string(cap));
  }
  Polynomial sum;
  graphs::for_each_graph(
      n, [&](const graphs::VirasoroGraph& g) { sum += graph_weight(g, labels); }, cap);
  return OperatorForm(labels, std::move(sum));
}

OperatorForm move_to_labels(const OperatorForm& op, const std::vector<int>& labels) {
  if (labels.size() != op.labels().size()) {
    throw std::invalid_argument("move_to_labels: label count mismatch");
  }
  expr::LabelMap sigma;
  for (std::size_t k = 0; k < labels.size(); ++k) sigma[op.labels()[k]] = labels[k];
  return OperatorForm(labels, expr::relabel(op.poly(), sigma));
}

}  // namespace g2vir::ward
