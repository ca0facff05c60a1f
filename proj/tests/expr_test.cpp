#include <doctest.h>

#include <random>
#include <stdexcept>

#include "g2vir/expr/polynomial.hpp"
#include "g2vir/expr/text.hpp"
#include "support.hpp"

using namespace g2vir::expr;
using g2vir::test::random_polynomial;

namespace {

constexpr int kRingTrials = 1000;

Polynomial q(std::int64_t num, std::int64_t den) { return Polynomial(Rational(num, den)); }

Polynomial c_over(std::int64_t den) { return Polynomial(Coefficient::term(Rational(1, den), 1)); }

}  // namespace

TEST_CASE("rational arithmetic stays in lowest terms") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(6, -4).den() == 2);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(-2, 5) * Rational(5, 4) == Rational(-1, 2));
  CHECK(Rational::parse("-22/5") == Rational(-22, 5));
  CHECK(Rational::parse("7").str() == "7");
  CHECK(Rational(-22, 5).str() == "-22/5");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("1/ 2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("rational overflow is reported, never wrapped") {
  const Rational big(INT64_MAX);
  CHECK_THROWS_AS(big + Rational(1), std::overflow_error);
  CHECK_THROWS_AS(big * Rational(2), std::overflow_error);
}

TEST_CASE("coefficients are sparse polynomials in c") {
  const Coefficient c = Coefficient::c();
  CHECK((c - c).is_zero());
  CHECK((c * c).degree() == 2);
  CHECK((c * Coefficient(Rational(1, 2))).at(1) == Rational(1, 2));
  CHECK((c + Coefficient(3)).evaluate(Rational(-22, 5)) == Rational(-7, 5));
}

TEST_CASE("atom invariants") {
  CHECK(Atom::om(2, 1) == Atom::om(1, 2));
  CHECK(Atom::alpha(2, 1) == Atom::alpha(1, 2));
  CHECK(Atom::p4(2, 1) != Atom::p4(1, 2));
  CHECK_THROWS_AS(Atom::om(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Atom::nu(3, 1), std::out_of_range);
  CHECK(Atom::s(9) < Atom::om(1, 2));
  CHECK(Atom::nu(1, 1) < Atom::alpha(1, 1));
  CHECK(Atom::alpha(2, 2) < Atom::p4(1, 2));
  CHECK(Atom::p4(1, 2) < Atom::x(1));
}

TEST_CASE("add and mul examples") {
  const Polynomial s1 = Atom::s(1);
  const Polynomial om = Atom::om(1, 2);
  CHECK(s1 + Polynomial() == s1);
  CHECK(c_over(12) * s1 + c_over(12) * s1 == c_over(6) * s1);
  CHECK(s1 * Polynomial(1) == s1);
  CHECK(om * om == Polynomial(Monomial(Atom::om(1, 2), 2), Coefficient(1)));
  const Polynomial lhs = (c_over(2) * om * om) * (c_over(12) * Polynomial(Atom::s(3)));
  const Polynomial rhs(Monomial::from_factors({{Atom::om(1, 2), 2}, {Atom::s(3), 1}}),
                      Coefficient::term(Rational(1, 24), 2));
  CHECK(lhs == rhs);
  CHECK((s1 - s1).is_zero());
  CHECK(pow(s1 + 1, 2) == s1 * s1 + q(2, 1) * s1 + 1);
}

TEST_CASE("ring axioms on seeded random polynomials") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < kRingTrials; ++trial) {
    const Polynomial p = random_polynomial(rng);
    const Polynomial r = random_polynomial(rng);
    const Polynomial s = random_polynomial(rng);
    INFO("trial " << trial);
    REQUIRE(p + r == r + p);
    REQUIRE(p * r == r * p);
    REQUIRE((p + r) + s == p + (r + s));
    REQUIRE((p * r) * s == p * (r * s));
    REQUIRE(p * (r + s) == p * r + p * s);
    REQUIRE((p - p).is_zero());
    REQUIRE(p * 1 == p);
  }
}

TEST_CASE("derive examples") {
  const auto rule = [](const Atom& a) -> Polynomial {
    if (a == Atom::om(2, 3)) return Atom::s(7);
    return {};
  };
  const Polynomial om = Atom::om(2, 3);
  CHECK(derive(om * om, rule) == q(2, 1) * om * Polynomial(Atom::s(7)));
  CHECK(derive(Polynomial(Coefficient::c()), rule).is_zero());

  // Nu(a,k) -> Om(1,k) Nu(a,1), applied to one mixed alpha term.
  const auto nu_rule = [](const Atom& a) -> Polynomial {
    if (a.kind() != AtomKind::Nu) return {};
    return Polynomial(Atom::om(1, a.second())) * Polynomial(Atom::nu(a.first(), 1));
  };
  const Polynomial p = Polynomial(Atom::nu(1, 2)) * Polynomial(Atom::nu(2, 2)) *
                       Polynomial(Atom::alpha(1, 2));
  const Polynomial expected =
      Polynomial(Atom::om(1, 2)) *
      (Polynomial(Atom::nu(1, 1)) * Polynomial(Atom::nu(2, 2)) +
       Polynomial(Atom::nu(1, 2)) * Polynomial(Atom::nu(2, 1))) *
      Polynomial(Atom::alpha(1, 2));
  CHECK(derive(p, nu_rule) == expected);
}

TEST_CASE("derive obeys Leibniz on seeded random pairs") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    // Random rule: each atom maps to a fixed small random polynomial.
    std::mt19937_64 rule_rng(rng());
    std::map<Atom, Polynomial> images;
    const DerivationRule rule = [&](const Atom& a) {
      auto it = images.find(a);
      if (it == images.end()) it = images.emplace(a, random_polynomial(rule_rng, 2)).first;
      return it->second;
    };
    const Polynomial p = random_polynomial(rng);
    const Polynomial r = random_polynomial(rng);
    INFO("trial " << trial);
    REQUIRE(derive(p * r, rule) == derive(p, rule) * r + p * derive(r, rule));
  }
}

TEST_CASE("substitute examples") {
  const Polynomial s1 = Atom::s(1);
  const Polynomial shifted = s1 + Polynomial(Atom::x(1));
  CHECK(substitute(s1, Atom::s(1), shifted) == shifted);
  CHECK(substitute(Atom::om(1, 2), Atom::s(1), Atom::x(5)) == Polynomial(Atom::om(1, 2)));
  const Polynomial s2 = Atom::s(2);
  const Polynomial lhs = substitute(c_over(12) * s1 * c_over(12) * s2, Atom::s(1), shifted);
  const Polynomial rhs = Polynomial(Coefficient::term(Rational(1, 144), 2)) *
                         (s1 * s2 + Polynomial(Atom::x(1)) * s2);
  CHECK(lhs == rhs);
  CHECK(substitute(s1 * s1, Atom::s(1), shifted) == shifted * shifted);
}

TEST_CASE("relabel examples and action") {
  const LabelMap swap{{1, 2}, {2, 1}};
  CHECK(relabel(Atom::om(1, 2), swap) == Polynomial(Atom::om(1, 2)));
  CHECK(relabel(Atom::s(1), swap) == Polynomial(Atom::s(2)));
  CHECK(relabel(Atom::p4(1, 2), swap) == Polynomial(Atom::p4(2, 1)));
  CHECK_THROWS_AS((void)relabel(Polynomial(Atom::s(1)) * Polynomial(Atom::s(2)), LabelMap{{1, 2}}),
                  std::invalid_argument);

  std::mt19937_64 rng(5);
  const LabelMap sigma{{1, 2}, {2, 3}, {3, 1}};
  const LabelMap tau{{1, 4}, {4, 1}};
  LabelMap tau_sigma;  // tau after sigma
  for (int i = 1; i <= 4; ++i) {
    const int si = sigma.contains(i) ? sigma.at(i) : i;
    tau_sigma[i] = tau.contains(si) ? tau.at(si) : si;
  }
  for (int trial = 0; trial < 300; ++trial) {
    const Polynomial p = random_polynomial(rng);
    const Polynomial r = random_polynomial(rng);
    INFO("trial " << trial);
    REQUIRE(relabel(relabel(p, sigma), tau) == relabel(p, tau_sigma));
    REQUIRE(relabel(p * r, sigma) == relabel(p, sigma) * relabel(r, sigma));
    REQUIRE(relabel(p + r, sigma) == relabel(p, sigma) + relabel(r, sigma));
  }
}

TEST_CASE("s-expression form is canonical and round-trips") {
  CHECK(to_sexpr(Polynomial()) == "(+)");
  CHECK(to_sexpr(Polynomial(1)) == "(+ (* (q 1)))");
  CHECK(to_sexpr(c_over(12) * Polynomial(Atom::s(1))) == "(+ (* (q 1/12) (c 1) (S 1)))");
  CHECK(to_sexpr(Polynomial(Monomial(Atom::nu(1, 1), 2), Coefficient(1))) ==
        "(+ (* (q 1) (Nu 1 1) (Nu 1 1)))");
  CHECK(parse_sexpr("(+ (* (q 1) (S 1)) (* (q 1) (S 1)))") == q(2, 1) * Polynomial(Atom::s(1)));
  CHECK_THROWS_AS((void)parse_sexpr("(+ (* (q 1) (S 1))"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_sexpr("(+ (* (q 1) (Q 1)))"), std::invalid_argument);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Polynomial p = random_polynomial(rng);
    const std::string text = to_sexpr(p);
    INFO(text);
    REQUIRE(parse_sexpr(text) == p);
    REQUIRE(to_sexpr(parse_sexpr(text)) == text);
  }
}
