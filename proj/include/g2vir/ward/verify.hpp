#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <json.hpp>

#include "g2vir/ward/operator.hpp"

namespace g2vir::ward {

struct WardStage {
  int n = 0;
  bool pass = false;
  std::uint64_t graphs = 0;
  std::size_t monomials_lhs = 0;  ///< recursion result
  std::size_t monomials_rhs = 0;  ///< graph sum
  std::size_t residual_p4_terms = 0;
};

/// Exact recursion-vs-enumeration comparison at every order up to n.
struct WardReport {
  int n = 0;
  bool pass = false;
  std::uint64_t graphs = 0;
  std::size_t monomials_lhs = 0;
  std::size_t monomials_rhs = 0;
  std::size_t residual_p4_terms = 0;
  std::vector<WardStage> stages;
};

/// Runs the recursion from O_0 = 1 (never consulting the graph sum) and
/// compares each O_m against build_operator(m), m = 1..n.
[[nodiscard]] WardReport verify_ward(int n);

struct SymmetryReport {
  int n = 0;
  bool pass = false;
  int transpositions = 0;
  std::size_t monomials = 0;
  std::vector<std::pair<int, int>> failures;
};

/// relabel(O_n, (i j)) == O_n for every transposition.
[[nodiscard]] SymmetryReport verify_symmetry(int n);

struct SchwarzianReport {
  int n = 0;
  int label = 0;
  bool pass = false;
  std::size_t monomials_lhs = 0;
  std::size_t monomials_rhs = 0;
};

/// O_n[S(i) -> S(i) + X(i)] == O_n + (c/12) X(i) O_{n-1}(labels without i).
[[nodiscard]] SchwarzianReport verify_schwarzian(int n, int label);

[[nodiscard]] nlohmann::ordered_json to_json(const WardReport& r);
[[nodiscard]] nlohmann::ordered_json to_json(const SymmetryReport& r);
[[nodiscard]] nlohmann::ordered_json to_json(const SchwarzianReport& r);

}  // namespace g2vir::ward
