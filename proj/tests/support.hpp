#pragma once

#include <random>

#include "g2vir/expr/polynomial.hpp"

namespace g2vir::test {

// Labels 1..4 keep relabel and Om(i,j) collisions frequent.
inline expr::Atom random_atom(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 5);
  std::uniform_int_distribution<int> label(1, 4);
  std::uniform_int_distribution<int> index(1, 2);
  const int i = label(rng);
  int j = label(rng);
  while (j == i) j = label(rng);
  switch (kind(rng)) {
    case 0: return expr::Atom::s(i);
    case 1: return expr::Atom::om(i, j);
    case 2: return expr::Atom::nu(index(rng), i);
    case 3: return expr::Atom::alpha(index(rng), index(rng));
    case 4: return expr::Atom::p4(i, j);
    default: return expr::Atom::x(i);
  }
}

inline expr::Coefficient random_coefficient(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> degree(0, 2);
  expr::Coefficient k;
  const int parts = 1 + degree(rng) % 2;
  for (int p = 0; p < parts; ++p) k += expr::Coefficient::term(expr::Rational(num(rng), den(rng)), degree(rng));
  return k;
}

/// Small random polynomial: up to max_terms terms of degree <= 3.
inline expr::Polynomial random_polynomial(std::mt19937_64& rng, int max_terms = 4) {
  std::uniform_int_distribution<int> terms(0, max_terms);
  std::uniform_int_distribution<int> degree(0, 3);
  expr::Polynomial p;
  const int count = terms(rng);
  for (int t = 0; t < count; ++t) {
    std::vector<expr::Monomial::Factor> factors;
    const int d = degree(rng);
    for (int f = 0; f < d; ++f) factors.emplace_back(random_atom(rng), 1);
    p.add_term(expr::Monomial::from_factors(std::move(factors)), random_coefficient(rng));
  }
  return p;
}

}  // namespace g2vir::test
