#include "g2vir/graphs/census.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "g2vir/expr/rational.hpp"

namespace g2vir::graphs {

using expr::Rational;

std::uint64_t Census::total() const {
  std::uint64_t sum = 0;
  for (const auto& [km, count] : table) sum += count;
  return sum;
}

Census census(int n, int cap) {
  Census c;
  c.n = n;
  for_each_graph(
      n,
      [&](const VirasoroGraph& g) {
        const Decomposition d = classify(g);
        ++c.table[{d.cycle_count(), d.chain_count()}];
      },
      cap);
  return c;
}

namespace {

/// Dense univariate polynomial in beta with rational coefficients.
using BetaPoly = std::vector<Rational>;

BetaPoly times_linear(const BetaPoly& p, const Rational& slope, const Rational& offset) {
  BetaPoly out(p.size() + 1);
  for (std::size_t k = 0; k < p.size(); ++k) {
    out[k] += p[k] * offset;
    out[k + 1] += p[k] * slope;
  }
  return out;
}

Rational factorial(int k) {
  Rational f(1);
  for (int i = 2; i <= k; ++i) f *= Rational(i);
  return f;
}

/// binom(x, k) for x = -beta - i as a polynomial in beta.
BetaPoly generalized_binomial(int i, int k) {
  BetaPoly p{Rational(1)};
  for (int j = 0; j < k; ++j) p = times_linear(p, Rational(-1), Rational(-i - j));
  const Rational kf = factorial(k);
  for (auto& r : p) r /= kf;
  return p;
}

}  // namespace

CountingPolynomial counting_polynomial(int n) {
  if (n < 0) throw std::invalid_argument("counting polynomial order must be non-negative");
  CountingPolynomial out;
  out.n = n;
  const Rational prefactor = Rational(n % 2 == 0 ? 1 : -1) * factorial(n);
  for (int i = 0; i <= n; ++i) {
    const Rational alpha_coeff = Rational(i % 2 == 0 ? 1 : -1) / factorial(i);
    const BetaPoly b = generalized_binomial(i, n - i);
    for (std::size_t k = 0; k < b.size(); ++k) {
      const Rational v = prefactor * alpha_coeff * b[k];
      if (v.is_zero()) continue;
      if (!v.is_integer()) throw std::logic_error("counting polynomial has a non-integer coefficient");
      out.coefficients[{static_cast<int>(k), i}] += v.num();
    }
  }
  std::erase_if(out.coefficients, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::string CountingPolynomial::str() const {
  if (coefficients.empty()) return "0";
  const auto power = [](const char* sym, int k) -> std::string {
    if (k == 0) return "";
    if (k == 1) return sym;
    return std::string(sym) + "^" + std::to_string(k);
  };
  std::string out;
  // Highest total degree first, alpha-heavy first within a degree.
  std::vector<std::pair<std::pair<int, int>, std::int64_t>> terms(coefficients.begin(),
                                                                  coefficients.end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const int da = a.first.first + a.first.second;
    const int db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.second > b.first.second;
  });
  for (const auto& [km, coeff] : terms) {
    const auto [k, m] = km;
    std::string mono = power("a", m);
    const std::string b = power("b", k);
    if (!mono.empty() && !b.empty()) mono += "*";
    mono += b;
    std::string term;
    const std::int64_t mag = coeff < 0 ? -coeff : coeff;
    if (mono.empty()) {
      term = std::to_string(mag);
    } else if (mag == 1) {
      term = mono;
    } else {
      term = std::to_string(mag) + "*" + mono;
    }
    if (out.empty()) {
      out = (coeff < 0 ? "-" : "") + term;
    } else {
      out += (coeff < 0 ? " - " : " + ") + term;
    }
  }
  return out;
}

bool matches(const Census& c, const CountingPolynomial& p) {
  if (c.table.size() != p.coefficients.size()) return false;
  for (const auto& [km, count] : c.table) {
    const auto it = p.coefficients.find(km);
    if (it == p.coefficients.end() || it->second < 0 ||
        static_cast<std::uint64_t>(it->second) != count) {
      return false;
    }
  }
  return true;
}

}  // namespace g2vir::graphs
