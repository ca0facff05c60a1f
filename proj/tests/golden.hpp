#pragma once

#include "g2vir/expr/polynomial.hpp"

namespace g2vir::test {

using expr::Atom;
using expr::Coefficient;
using expr::Polynomial;
using expr::Rational;

inline Polynomial c_times(Rational r) { return Polynomial(Coefficient::term(r, 1)); }

// Chain weight written out by hand, independent of ward::chain_weight().
inline Polynomial hand_chain_weight(int k, int l) {
  Polynomial out;
  for (int a = 1; a <= 2; ++a) {
    for (int b = a; b <= 2; ++b) {
      const Polynomial sym = Polynomial(Atom::nu(a, k)) * Polynomial(Atom::nu(b, l)) +
                             Polynomial(Atom::nu(a, l)) * Polynomial(Atom::nu(b, k));
      out += Polynomial(Rational(1, 2)) * sym * Polynomial(Atom::alpha(a, b));
    }
  }
  return out;
}

// O_1 = nabla + (c/12) s in alpha-form.
inline Polynomial golden_o1() {
  return hand_chain_weight(1, 1) + c_times(Rational(1, 12)) * Polynomial(Atom::s(1));
}

// O_2 = O_1(1) O_1(2) + 2 omega A(1,2) + (c/2) omega^2.
inline Polynomial golden_o2() {
  const Polynomial s1 = c_times(Rational(1, 12)) * Polynomial(Atom::s(1));
  const Polynomial s2 = c_times(Rational(1, 12)) * Polynomial(Atom::s(2));
  const Polynomial om = Polynomial(Atom::om(1, 2));
  const Polynomial a11 = hand_chain_weight(1, 1);
  const Polynomial a22 = hand_chain_weight(2, 2);
  return a11 * a22 + s1 * a22 + s2 * a11 + s1 * s2 + Polynomial(2) * om * hand_chain_weight(1, 2) +
         c_times(Rational(1, 2)) * om * om;
}

}  // namespace g2vir::test
