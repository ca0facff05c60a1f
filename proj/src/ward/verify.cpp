#include "g2vir/ward/verify.hpp"

#include <map>
#include <stdexcept>

#include "g2vir/graphs/virasoro_graph.hpp"
#include "g2vir/ward/recursion.hpp"

namespace g2vir::ward {

using expr::AtomKind;
using expr::Monomial;

namespace {

std::vector<int> iota_labels(int first, int last) {
  std::vector<int> out;
  for (int i = first; i <= last; ++i) out.push_back(i);
  return out;
}

void check_order(int n) {
  if (n < 0) throw std::invalid_argument("operator order must be non-negative");
  if (n > kOperatorCap) {
    throw std::length_error("operator order " + std::to_string(n) + " exceeds the weighted cap " +
                            std::to_string(kOperatorCap));
  }
}

}  // namespace

WardReport verify_ward(int n) {
  check_order(n);
  WardReport report;
  report.n = n;
  report.pass = true;

  // chain[m] is O_m on labels {1..m}, obtained purely by recursion.
  std::vector<OperatorForm> chain{OperatorForm()};
  for (int m = 1; m <= n; ++m) {
    const std::vector<int> rest = iota_labels(2, m);
    const OperatorForm prev = move_to_labels(chain[m - 1], rest);
    std::map<int, OperatorForm> prev2;
    if (m >= 2) {
      for (int k : rest) {
        std::vector<int> without;
        for (int l : rest) {
          if (l != k) without.push_back(l);
        }
        prev2.emplace(k, move_to_labels(chain[m - 2], without));
      }
    }

    WardStage stage;
    stage.n = m;
    stage.graphs = graphs::partial_permutation_count(m);
    const Polynomial total = expand_recursion(prev, prev2, 1).sum();
    const Polynomial residual =
        expr::filter(total, [](const Monomial& mono) { return mono.degree(AtomKind::P4) > 0; });
    stage.residual_p4_terms = residual.size();

    const OperatorForm reference = build_operator(m);
    stage.monomials_rhs = reference.poly().size();
    if (residual.is_zero()) {
      OperatorForm next(iota_labels(1, m), total);
      stage.monomials_lhs = next.poly().size();
      stage.pass = next == reference;
      chain.push_back(std::move(next));
    } else {
      stage.monomials_lhs = total.size();
      stage.pass = false;
    }
    report.stages.push_back(stage);
    report.residual_p4_terms += stage.residual_p4_terms;
    if (!stage.pass) {
      report.pass = false;
      break;
    }
  }

  report.graphs = graphs::partial_permutation_count(n);
  if (!report.stages.empty()) {
    report.monomials_lhs = report.stages.back().monomials_lhs;
    report.monomials_rhs = report.stages.back().monomials_rhs;
  } else {
    report.monomials_lhs = report.monomials_rhs = 1;
  }
  return report;
}

SymmetryReport verify_symmetry(int n) {
  check_order(n);
  SymmetryReport report;
  report.n = n;
  const OperatorForm op = build_operator(n);
  report.monomials = op.poly().size();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      ++report.transpositions;
      if (expr::relabel(op.poly(), {{i, j}, {j, i}}) != op.poly()) report.failures.emplace_back(i, j);
    }
  }
  report.pass = report.failures.empty();
  return report;
}

SchwarzianReport verify_schwarzian(int n, int label) {
  check_order(n);
  if (label < 1 || label > n) throw std::invalid_argument("Schwarzian label outside 1..n");
  SchwarzianReport report;
  report.n = n;
  report.label = label;

  const OperatorForm op = build_operator(n);
  const Polynomial lhs = expr::substitute(op.poly(), Atom::s(label),
                                          Polynomial(Atom::s(label)) + Polynomial(Atom::x(label)));
  std::vector<int> others;
  for (int i = 1; i <= n; ++i) {
    if (i != label) others.push_back(i);
  }
  const Polynomial rhs =
      op.poly() + expr::scale(Polynomial(Atom::x(label)), Coefficient::term(Rational(1, 12), 1)) *
                      build_operator(others).poly();
  report.monomials_lhs = lhs.size();
  report.monomials_rhs = rhs.size();
  report.pass = lhs == rhs;
  return report;
}

nlohmann::ordered_json to_json(const WardReport& r) {
  nlohmann::ordered_json j;
  j["check"] = "ward";
  j["n"] = r.n;
  j["pass"] = r.pass;
  j["graphs"] = r.graphs;
  j["monomials_lhs"] = r.monomials_lhs;
  j["monomials_rhs"] = r.monomials_rhs;
  j["residual_p4_terms"] = r.residual_p4_terms;
  j["stages"] = nlohmann::ordered_json::array();
  for (const auto& s : r.stages) {
    nlohmann::ordered_json st;
    st["n"] = s.n;
    st["pass"] = s.pass;
    st["graphs"] = s.graphs;
    st["monomials_lhs"] = s.monomials_lhs;
    st["monomials_rhs"] = s.monomials_rhs;
    st["residual_p4_terms"] = s.residual_p4_terms;
    j["stages"].push_back(std::move(st));
  }
  return j;
}

nlohmann::ordered_json to_json(const SymmetryReport& r) {
  nlohmann::ordered_json j;
  j["check"] = "symmetry";
  j["n"] = r.n;
  j["pass"] = r.pass;
  j["transpositions"] = r.transpositions;
  j["monomials"] = r.monomials;
  j["failures"] = nlohmann::ordered_json::array();
  for (const auto& [a, b] : r.failures) j["failures"].push_back({a, b});
  return j;
}

nlohmann::ordered_json to_json(const SchwarzianReport& r) {
  nlohmann::ordered_json j;
  j["check"] = "schwarzian";
  j["n"] = r.n;
  j["label"] = r.label;
  j["pass"] = r.pass;
  j["monomials_lhs"] = r.monomials_lhs;
  j["monomials_rhs"] = r.monomials_rhs;
  return j;
}

}  // namespace g2vir::ward
