#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "g2vir/graphs/virasoro_graph.hpp"

namespace g2vir::graphs {

/// Count of order-n graphs by (cycles K, chains M).
struct Census {
  int n = 0;
  std::map<std::pair<int, int>, std::uint64_t> table;  // (K, M) -> count

  [[nodiscard]] std::uint64_t total() const;
};

/// Full enumeration and classification; same size limits as for_each_graph.
[[nodiscard]] Census census(int n, int cap = kDefaultGraphCap);

/// Bivariate integer polynomial sum p_{KM} alpha^M beta^K, keyed by (K, M).
struct CountingPolynomial {
  int n = 0;
  std::map<std::pair<int, int>, std::int64_t> coefficients;  // (K, M) -> p_{KM}

  [[nodiscard]] std::string str() const;  // e.g. "a^2 + 2*a*b + b^2 + b + 2*a"
};

/// Expands (-1)^n n! sum_i (-alpha)^i / i! * binom(-beta - i, n - i) with the
/// generalized binomial coefficient, in exact rational arithmetic.
[[nodiscard]] CountingPolynomial counting_polynomial(int n);

/// True iff census and polynomial agree coefficient by coefficient.
[[nodiscard]] bool matches(const Census& c, const CountingPolynomial& p);

}  // namespace g2vir::graphs
