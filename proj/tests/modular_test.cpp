#include <doctest.h>

#include <stdexcept>

#include "g2vir/modular/checks.hpp"
#include "g2vir/modular/derivative.hpp"
#include "g2vir/modular/operator_eval.hpp"
#include "g2vir/modular/psi.hpp"
#include "g2vir/modular/transformed.hpp"
#include "g2vir/modular/trials.hpp"
#include "g2vir/ward/operator.hpp"

using namespace g2vir::modular;
using g2vir::expr::Rational;

namespace {

const SiegelPoint kOmega(Complex(0.1, 1.1), Complex(0.2, 0.3), Complex(-0.2, 0.9));
const Complex kX(0.2, 0.1);
const Complex kY(-0.3, 0.2);
const Complex kY2(0.35, -0.25);

// C = -I, D = -S: a generic element with a non-trivial automorphy factor.
SymplecticElement generic_gamma() {
  return SymplecticElement::j() * SymplecticElement::translation(IMat2{{1, 1}, {1, 0}});
}

double rel(Complex a, Complex b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0 ? 0 : std::abs(a - b) / scale;
}

template <class A, class B>
double rel_norm(const A& a, const B& b) {
  const double scale = std::max(a.norm(), b.norm());
  return scale == 0 ? 0 : (a - b).norm() / scale;
}

// Psi^gamma rebuilt by hand, optionally with the untransformed bidifferential.
Complex psi_gamma_by_hand(const SymplecticElement& gamma, const ModelGeometry& g, const CMat2& o,
                          bool correct_omega) {
  const DiffOptions opt = CheckOptions{}.first;
  const CMat2 n = transform_period<Complex>(gamma, o).n;
  const Complex omega = correct_omega ? transformed_bidifferential(gamma, g, o, kX, kY, opt)
                                      : g.bidifferential(kX, kY, o);
  const CRow2 nu_x = g.nu(kX, o) * n;
  const CRow2 nu_y = g.nu(kY, o) * n;
  const CRow2 dnu_y = g.nu_dy(kY, o) * n;
  const CRow2 nabla_y = transformed_nabla_nu(gamma, g, o, kX, kY, opt);
  return -(omega * det_rows(nu_x, nu_y) + det_rows(nu_y, nabla_y)) / det_rows(nu_y, dnu_y);
}

struct Sides {
  Complex lhs;
  Complex rhs;
};

// Both sides of the O_1 covariance identity, with the automorphy factor and the
// projective-connection correction switchable for negative controls.
Sides o1_sides(const SymplecticElement& gamma, const ModelGeometry& g, const CMat2& o, double c,
               bool det_weight, bool correct_s) {
  const DiffOptions opt = CheckOptions{}.first;
  const LogDetM logdet(gamma, o);
  const double half_c = det_weight ? c / 2 : 0.0;
  auto weighted = [&](const CMat2& p) {
    return std::exp(Complex(half_c) * logdet(p)) * g.test_function(p);
  };
  auto bare = [&](const CMat2& p) { return g.test_function(p); };
  const ChainRule chain{period_jacobian(gamma, o, opt), {}};

  Jet lhs_jet;
  lhs_jet.value = weighted(o);
  lhs_jet.gradient = chain.gradient(omega_gradient(weighted, o, opt));
  OperatorFrame lhs_frame;
  lhs_frame.nu[1] = g.nu(kX, o) * transform_period<Complex>(gamma, o).n;
  lhs_frame.projective_connection[1] = correct_s
                                           ? transformed_projective_connection(gamma, g, o, kX, opt)
                                           : g.projective_connection(kX, o);
  Jet rhs_jet;
  rhs_jet.value = bare(o);
  rhs_jet.gradient = omega_gradient(bare, o, opt);
  OperatorFrame rhs_frame;
  rhs_frame.nu[1] = g.nu(kX, o);
  rhs_frame.projective_connection[1] = g.projective_connection(kX, o);

  const g2vir::ward::OperatorForm o1 = g2vir::ward::build_operator(1);
  const Complex factor = std::exp(Complex(half_c) * logdet.at_base());
  return {apply_operator(o1, lhs_frame, lhs_jet, c), factor * apply_operator(o1, rhs_frame, rhs_jet, c)};
}

}  // namespace

TEST_CASE("generators satisfy the symplectic relations") {
  CHECK(SymplecticElement::identity().relations().all());
  const SymplecticElement j = SymplecticElement::j();
  CHECK(j.relations().all());
  CHECK(j.c() == IMat2{{-1, 0}, {0, -1}});
  CHECK(j * j * j * j == SymplecticElement::identity());
  CHECK(SymplecticElement::translation(IMat2{{2, -1}, {-1, 0}}).relations().all());
  CHECK(SymplecticElement::rotation(IMat2{{1, 1}, {0, 1}}).relations().all());
  CHECK(SymplecticElement::rotation(IMat2{{0, 1}, {1, 0}}).relations().all());
  CHECK_THROWS_AS((void)SymplecticElement::translation(IMat2{{0, 1}, {2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS((void)SymplecticElement::rotation(IMat2{{2, 0}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(SymplecticElement(IMat2{{2, 0}, {0, 1}}, IMat2::Zero(), IMat2::Zero(),
                                    IMat2::Identity()),
                  std::invalid_argument);
  CHECK(j.word() == "J");
}

TEST_CASE("random words are exact, closed and reproducible") {
  CHECK(random_symplectic(std::uint64_t{3}, 0) == SymplecticElement::identity());
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const SymplecticElement g = random_symplectic(seed, 8);
    const SymplecticElement h = random_symplectic(seed + 1000, 4);
    REQUIRE(g.relations().all());
    REQUIRE((g * h).relations().all());
    REQUIRE(g * g.inverse() == SymplecticElement::identity());
    REQUIRE(random_symplectic(seed, 8).word() == g.word());
  }
  CHECK_THROWS_AS((void)random_symplectic(std::uint64_t{1}, kMaxWordLength + 1), std::invalid_argument);
}

TEST_CASE("period transformation examples") {
  const CMat2 o = kOmega.matrix();
  const auto id = transform_period<Complex>(SymplecticElement::identity(), o);
  CHECK(rel_norm(id.omega_gamma, o) == 0);
  CHECK(rel_norm(id.m, CMat2::Identity()) == 0);

  const IMat2 s{{1, -2}, {-2, 0}};
  const auto t = transform_period<Complex>(SymplecticElement::translation(s), o);
  CHECK(rel_norm(t.omega_gamma, CMat2(o + s.cast<Complex>())) < 1e-15);

  const auto j = transform_period<Complex>(SymplecticElement::j(), o);
  CHECK(rel_norm(j.omega_gamma, CMat2(-o.inverse())) < 1e-14);
  CHECK(transform_period(SymplecticElement::j(), kOmega).omega_gamma.in_upper_half_space());
  CHECK_THROWS_AS((void)transform_period(SymplecticElement::identity(),
                                         SiegelPoint(Complex(1, -1), 0, Complex(0, 1))),
                  ConditioningError);
}

TEST_CASE("omega_derivative examples") {
  const CMat2 o = kOmega.matrix();
  const CCoords g = omega_gradient([](const CMat2& p) { return p(0, 0); }, o);
  CHECK(std::abs(g(0) - Complex(1)) < 1e-12);
  CHECK(std::abs(g(1)) < 1e-12);
  CHECK(std::abs(g(2)) < 1e-12);

  // Omega_12 moves both off-diagonal slots, so d det / d Omega_12 = -2 Omega_12.
  const CCoords d = omega_gradient([](const CMat2& p) { return p.determinant(); }, o);
  CHECK(rel(d(0), o(1, 1)) < 1e-8);
  CHECK(rel(d(1), Complex(-2) * o(0, 1)) < 1e-8);
  CHECK(rel(d(2), o(0, 0)) < 1e-8);

  const CCoords rich = omega_gradient([](const CMat2& p) { return std::exp(p(0, 1)); }, o,
                                      DiffOptions{1e-3, true});
  CHECK(rel(rich(1), std::exp(o(0, 1))) < 1e-10);

  const CCoords flat = logdet_gradient(SymplecticElement::identity(), o, DiffOptions{});
  CHECK(flat.norm() == 0);
}

TEST_CASE("log det gradient for J at a diagonal point") {
  const CMat2 o = SiegelPoint(Complex(0, 1), 0, Complex(0, 2)).matrix();
  const CCoords g = logdet_gradient(SymplecticElement::j(), o, CheckOptions{}.first);
  CHECK(rel(g(0), Complex(1) / o(0, 0)) < 1e-9);
  CHECK(rel(g(2), Complex(1) / o(1, 1)) < 1e-9);
  CHECK(std::abs(g(1)) < 1e-9);
}

TEST_CASE("checks reduce to trivial equalities for simple elements") {
  const ModelGeometry g(17);
  const SymplecticElement id = SymplecticElement::identity();
  const SymplecticElement t = SymplecticElement::translation(IMat2{{1, 0}, {0, -1}});
  CHECK(check_nc_symmetry(id, kOmega).max_abs == 0);
  CHECK(check_nc_symmetry(SymplecticElement::j(), kOmega).max_rel < 1e-14);
  for (const SymplecticElement& e : {id, t}) {
    CHECK(check_logdet_gradient(e, kOmega).max_abs == 0);
    CHECK(check_nabla_n(e, kOmega, g, kX).max_abs < 1e-12);
    CHECK(check_det_identities(e, kOmega, g, kX, kY).max_rel < 1e-9);
    CHECK(check_psi_invariance(e, kOmega, g, kX, kY).max_rel < 1e-9);
    CHECK(check_ode_invariance_identity(e, kOmega, g, kX, kY, kY2).max_abs == 0);
    CHECK(check_o1_covariance(e, kOmega, g, kX, Rational(-22, 5)).max_rel < 1e-9);
    CHECK(check_o2_covariance(e, kOmega, g, kX, kY, Rational(2)).max_rel < 1e-6);
  }
  CHECK(check_sp4(t, SymplecticElement::j(), kOmega).max_rel < 1e-12);
}

TEST_CASE("checks pass for a generic element") {
  const ModelGeometry g(17);
  const SymplecticElement gamma = generic_gamma();
  CHECK(check_sp4(gamma, random_symplectic(std::uint64_t{5}, 6), kOmega).max_rel < 1e-9);
  CHECK(check_nc_symmetry(gamma, kOmega).max_rel < 1e-12);
  CHECK(check_logdet_gradient(gamma, kOmega).max_rel < 1e-6);
  CHECK(check_nabla_n(gamma, kOmega, g, kX).max_rel < 1e-6);
  CHECK(check_det_identities(gamma, kOmega, g, kX, kY).max_rel < 1e-6);
  CHECK(check_psi_invariance(gamma, kOmega, g, kX, kY).max_rel < 1e-6);
  CHECK(check_pole(g, kOmega, kY).max_rel < 1e-6);
  CHECK(check_ode_invariance_identity(gamma, kOmega, g, kX, kY, kY2).max_rel < 1e-6);
  for (const Rational& c : {Rational(0), Rational(2), Rational(-22, 5)}) {
    CHECK(check_o1_covariance(gamma, kOmega, g, kX, c).max_rel < 1e-5);
    CHECK(check_o2_covariance(gamma, kOmega, g, kX, kY, c).max_rel < 1e-3);
  }
}

TEST_CASE("Psi evaluation") {
  GeometryOptions flat;
  flat.nu_depends_on_omega = false;
  flat.omega_vanishes = true;
  const ModelGeometry trivial(23, flat);
  CHECK(evaluate_psi(trivial, kOmega.matrix(), kX, kY) == Complex(0));

  const ModelGeometry g(23);
  const Complex first = evaluate_psi(g, kOmega.matrix(), kX, kY);
  const Complex second = evaluate_psi(ModelGeometry(23), kOmega.matrix(), kX, kY);
  CHECK(first.real() == second.real());
  CHECK(first.imag() == second.imag());
  CHECK(first != Complex(0));

  const PoleCheck pole = pole_check(g, kOmega.matrix(), kY);
  CHECK(pole.error < 1e-6);
  CHECK(std::abs(pole.samples[0] - Complex(1)) > pole.error);

  GeometryOptions no_pole;
  no_pole.pole = false;
  CHECK(pole_check(ModelGeometry(23, no_pole), kOmega.matrix(), kY).error > 0.5);
}

TEST_CASE("negative controls fail the identities they target") {
  const ModelGeometry g(17);
  const SymplecticElement gamma = generic_gamma();
  const CMat2 o = kOmega.matrix();
  const Complex psi = evaluate_psi(g, o, kX, kY);
  CHECK(rel(psi_gamma_by_hand(gamma, g, o, true), psi) < 1e-6);
  CHECK(rel(psi_gamma_by_hand(gamma, g, o, false), psi) > 1e-3);

  const Sides full = o1_sides(gamma, g, o, 2.0, true, true);
  CHECK(rel(full.lhs, full.rhs) < 1e-5);
  const Sides no_det = o1_sides(gamma, g, o, 2.0, false, true);
  CHECK(rel(no_det.lhs, no_det.rhs) > 1e-3);
  const Sides no_s = o1_sides(gamma, g, o, 2.0, true, false);
  CHECK(rel(no_s.lhs, no_s.rhs) > 1e-3);
  // At c = 0 neither correction is present, so nabla alone is invariant.
  const Sides free = o1_sides(gamma, g, o, 0.0, false, false);
  CHECK(rel(free.lhs, free.rhs) < 1e-5);
}

TEST_CASE("check names and defaults") {
  for (CheckKind k : kAllChecks) CHECK(parse_check(check_name(k)) == k);
  CHECK_THROWS_AS((void)parse_check("bogus"), std::invalid_argument);
  CHECK(default_tolerance(CheckKind::nc) == 1e-12);
  CHECK(default_tolerance(CheckKind::o1) == 1e-5);
  CHECK(default_tolerance(CheckKind::o2) == 1e-3);
  CHECK(default_trials(CheckKind::o1) == 50);
  CHECK(default_trials(CheckKind::o2) == 25);
  CHECK(uses_central_charge(CheckKind::o1));
  CHECK_FALSE(uses_central_charge(CheckKind::psi));
}

TEST_CASE("suites are deterministic and report reproduction data") {
  SuiteConfig cfg;
  cfg.seed = 99;
  cfg.trials = 10;
  for (CheckKind k : kAllChecks) {
    const SuiteReport a = run_suite(k, cfg);
    const SuiteReport b = run_suite(k, cfg);
    INFO(check_name(k));
    CHECK(a.pass);
    CHECK(to_json(a).dump() == to_json(b).dump());
  }
  const CheckReport t = run_trial(CheckKind::psi, trial_seed(99, CheckKind::psi, 0), 8, Rational(0), 1e-6);
  const auto j = to_json(t);
  for (const char* key : {"check", "seed", "word", "omega", "points", "max_abs_error", "max_rel_error",
                          "tolerance", "pass"})
    CHECK(j.contains(key));
  CHECK(t.pass == (t.max_rel_error <= t.tolerance));
  CHECK(trial_seed(99, CheckKind::psi, 0) != trial_seed(99, CheckKind::psi, 1));
  CHECK(trial_seed(99, CheckKind::psi, 0) != trial_seed(99, CheckKind::det, 0));
}

TEST_CASE("an unattainable tolerance is reported as a failure") {
  SuiteConfig cfg;
  cfg.trials = 5;
  cfg.tolerance = 1e-300;
  const SuiteReport r = run_suite(CheckKind::det, cfg);
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.failures.empty());
  CHECK(r.failures.size() <= kMaxReportedFailures);
}
