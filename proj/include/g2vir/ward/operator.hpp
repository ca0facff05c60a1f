#pragma once

#include <span>
#include <vector>

#include "g2vir/expr/polynomial.hpp"
#include "g2vir/graphs/virasoro_graph.hpp"

namespace g2vir::ward {

using expr::Atom;
using expr::Coefficient;
using expr::Polynomial;
using expr::Rational;

/// Cap on the order of operators built by weighted graph enumeration.
inline constexpr int kOperatorCap = 5;

/// The operator O_n in alpha-form: a polynomial in s, omega, nu and alpha_ab,
/// where each alpha-monomial stands for the matching mixed derivative in the
/// period matrix. Never contains P4 or Schwarzian atoms.
class OperatorForm {
 public:
  OperatorForm() : poly_(1) {}
  /// Throws std::invalid_argument if labels are not strictly increasing, if
  /// poly mentions a label outside them, or if poly carries P4/X atoms.
  OperatorForm(std::vector<int> labels, Polynomial poly);

  [[nodiscard]] const std::vector<int>& labels() const noexcept { return labels_; }
  [[nodiscard]] const Polynomial& poly() const noexcept { return poly_; }
  [[nodiscard]] int order() const noexcept { return static_cast<int>(labels_.size()); }

  friend bool operator==(const OperatorForm&, const OperatorForm&) = default;

 private:
  std::vector<int> labels_;
  Polynomial poly_;
};

/// Symmetrized chain weight
///   A(k,l) = 1/2 sum_{a<=b} alpha_ab (nu_a(k) nu_b(l) + nu_a(l) nu_b(k)),
/// which reduces to sum_{a<=b} alpha_ab nu_a(k) nu_b(k) when k == l.
[[nodiscard]] Polynomial chain_weight(int k, int l);

/// s(i)/6 for a loop, omega(i,j) otherwise.
[[nodiscard]] Polynomial edge_weight(int i, int j);

/// (c/2)^K * prod(all edge weights) * prod(chain weights). Vertex v of the
/// graph carries label labels[v-1]; an empty span means the identity.
[[nodiscard]] Polynomial graph_weight(const graphs::VirasoroGraph& g,
                                      std::span<const int> labels = {});

/// Sum of graph weights over all order-n graphs, on labels {1..n}.
[[nodiscard]] OperatorForm build_operator(int n, int cap = kOperatorCap);
/// Same operator on an arbitrary strictly increasing label set.
[[nodiscard]] OperatorForm build_operator(const std::vector<int>& labels, int cap = kOperatorCap);

/// The operator moved onto `labels` by the order-preserving relabeling.
[[nodiscard]] OperatorForm move_to_labels(const OperatorForm& op, const std::vector<int>& labels);

}  // namespace g2vir::ward
