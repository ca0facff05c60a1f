#include "g2vir/modular/trials.hpp"

#include <array>
#include <random>
#include <stdexcept>

#include "g2vir/modular/checks.hpp"
#include "g2vir/modular/geometry.hpp"
#include "g2vir/modular/siegel.hpp"

namespace g2vir::modular {

namespace {

struct Entry {
  CheckKind kind;
  std::string_view name;
  double tolerance;
  int trials;
  bool central_charge;
};

constexpr std::array<Entry, 10> kTable{{
    {CheckKind::sp4, "sp4", 1e-9, 100, false},
    {CheckKind::nc, "nc", 1e-12, 100, false},
    {CheckKind::logdet, "logdet", 1e-6, 100, false},
    {CheckKind::nabla_n, "nablaN", 1e-6, 100, false},
    {CheckKind::det, "det", 1e-6, 100, false},
    {CheckKind::psi, "psi", 1e-6, 100, false},
    {CheckKind::pole, "pole", 1e-6, 100, false},
    {CheckKind::ode, "ode", 1e-6, 100, false},
    {CheckKind::o1, "o1", 1e-5, 50, true},
    {CheckKind::o2, "o2", 1e-3, 25, true},
}};

const Entry& entry(CheckKind kind) {
  for (const auto& e : kTable)
    if (e.kind == kind) return e;
  throw std::logic_error("unknown check kind");
}

SiegelPoint sample_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> real(-0.5, 0.5);
  std::uniform_real_distribution<double> diag(0.7, 1.5);
  std::uniform_real_distribution<double> corr(-0.4, 0.4);
  const double y11 = diag(rng);
  const double y22 = diag(rng);
  const double y12 = corr(rng) * std::sqrt(y11 * y22);
  const double x11 = real(rng);
  const double x12 = real(rng);
  const double x22 = real(rng);
  return {Complex(x11, y11), Complex(x12, y12), Complex(x22, y22)};
}

Complex sample_z(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> box(-0.5, 0.5);
  const double re = box(rng);
  return {re, box(rng)};
}

// Points are kept at least this far apart so that 1/(x-y)^2 stays unit scale.
constexpr double kMinSeparation = 0.1;

std::vector<Complex> sample_points(std::mt19937_64& rng, int count) {
  std::vector<Complex> points;
  while (static_cast<int>(points.size()) < count) {
    const Complex z = sample_z(rng);
    bool far = true;
    for (const Complex& p : points) far = far && std::abs(z - p) >= kMinSeparation;
    if (far) points.push_back(z);
  }
  return points;
}

int point_count(CheckKind kind) {
  switch (kind) {
    case CheckKind::sp4:
    case CheckKind::nc:
    case CheckKind::logdet: return 0;
    case CheckKind::nabla_n:
    case CheckKind::pole:
    case CheckKind::o1: return 1;
    case CheckKind::det:
    case CheckKind::psi:
    case CheckKind::o2: return 2;
    case CheckKind::ode: return 3;
  }
  return 0;
}

Discrepancy evaluate(CheckKind kind, const SymplecticElement& gamma, const SymplecticElement& delta,
                     const SiegelPoint& omega, const ModelGeometry& geometry,
                     const std::vector<Complex>& z, const expr::Rational& c,
                     const CheckOptions& opt) {
  // Every check first requires a well-conditioned, positive image.
  (void)transform_period(gamma, omega);
  switch (kind) {
    case CheckKind::sp4: return check_sp4(gamma, delta, omega);
    case CheckKind::nc: return check_nc_symmetry(gamma, omega);
    case CheckKind::logdet: return check_logdet_gradient(gamma, omega, opt);
    case CheckKind::nabla_n: return check_nabla_n(gamma, omega, geometry, z[0], opt);
    case CheckKind::det: return check_det_identities(gamma, omega, geometry, z[0], z[1], opt);
    case CheckKind::psi: return check_psi_invariance(gamma, omega, geometry, z[0], z[1], opt);
    case CheckKind::pole: return check_pole(geometry, omega, z[0], opt);
    case CheckKind::ode:
      return check_ode_invariance_identity(gamma, omega, geometry, z[0], z[1], z[2], opt);
    case CheckKind::o1: return check_o1_covariance(gamma, omega, geometry, z[0], c, opt);
    case CheckKind::o2: return check_o2_covariance(gamma, omega, geometry, z[0], z[1], c, opt);
  }
  throw std::logic_error("unknown check kind");
}

nlohmann::ordered_json complex_json(Complex z) { return nlohmann::ordered_json::array({z.real(), z.imag()}); }

}  // namespace

std::string_view check_name(CheckKind kind) { return entry(kind).name; }

CheckKind parse_check(std::string_view name) {
  for (const auto& e : kTable)
    if (e.name == name) return e.kind;
  throw std::invalid_argument("unknown check '" + std::string(name) + "'");
}

double default_tolerance(CheckKind kind) { return entry(kind).tolerance; }
int default_trials(CheckKind kind) { return entry(kind).trials; }
bool uses_central_charge(CheckKind kind) { return entry(kind).central_charge; }

std::uint64_t trial_seed(std::uint64_t root, CheckKind kind, int index) {
  std::seed_seq seq{static_cast<std::uint32_t>(root), static_cast<std::uint32_t>(root >> 32),
                    static_cast<std::uint32_t>(kind), static_cast<std::uint32_t>(index)};
  std::array<std::uint32_t, 2> words{};
  seq.generate(words.begin(), words.end());
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

CheckReport run_trial(CheckKind kind, std::uint64_t seed, int word_length, const expr::Rational& c,
                      double tolerance, const CheckOptions& options) {
  CheckReport report;
  report.check = std::string(check_name(kind));
  report.seed = seed;
  report.tolerance = tolerance;
  std::mt19937_64 rng(seed);
  for (report.attempts = 1; report.attempts <= kMaxAttempts; ++report.attempts) {
    const SymplecticElement gamma = random_symplectic(rng, word_length);
    const SymplecticElement delta = random_symplectic(rng, word_length);
    const SiegelPoint omega = sample_point(rng);
    report.word = gamma.word();
    report.omega = omega.coords();
    report.geometry_seed = rng();
    report.points = sample_points(rng, point_count(kind));
    try {
      const ModelGeometry geometry(report.geometry_seed);
      const Discrepancy d = evaluate(kind, gamma, delta, omega, geometry, report.points, c, options);
      report.max_abs_error = d.max_abs;
      report.max_rel_error = d.max_rel;
      report.pass = d.max_rel <= tolerance;
      return report;
    } catch (const ConditioningError&) {
      continue;
    } catch (const std::overflow_error&) {
      continue;
    }
  }
  report.attempts = kMaxAttempts;
  report.pass = false;
  report.note = "resample budget exhausted";
  return report;
}

SuiteReport run_suite(CheckKind kind, const SuiteConfig& config) {
  SuiteReport suite;
  suite.check = std::string(check_name(kind));
  suite.seed = config.seed;
  suite.trials = config.trials.value_or(default_trials(kind));
  suite.tolerance = config.tolerance.value_or(default_tolerance(kind));
  suite.word_length = config.word_length;
  if (uses_central_charge(kind)) suite.c = config.c;
  if (suite.trials <= 0) throw std::invalid_argument("trial count must be positive");
  if (!(suite.tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  suite.pass = true;
  bool first = true;
  for (int i = 0; i < suite.trials; ++i) {
    CheckReport r = run_trial(kind, trial_seed(config.seed, kind, i), config.word_length, config.c,
                              suite.tolerance, config.options);
    suite.resampled += r.attempts - 1;
    suite.max_abs_error = std::max(suite.max_abs_error, r.max_abs_error);
    // Worst = first failing trial, else the largest relative error.
    if (first || (!r.pass && suite.worst.pass) ||
        (suite.worst.pass && r.max_rel_error > suite.worst.max_rel_error))
      suite.worst = r;
    first = false;
    suite.max_rel_error = std::max(suite.max_rel_error, r.max_rel_error);
    if (!r.pass) {
      suite.pass = false;
      if (suite.failures.size() < kMaxReportedFailures) suite.failures.push_back(std::move(r));
    }
  }
  return suite;
}

nlohmann::ordered_json to_json(const CheckReport& report) {
  nlohmann::ordered_json j;
  j["check"] = report.check;
  j["seed"] = report.seed;
  j["word"] = report.word;
  j["omega"] = nlohmann::ordered_json::array(
      {complex_json(report.omega(0)), complex_json(report.omega(1)), complex_json(report.omega(2))});
  j["geometry_seed"] = report.geometry_seed;
  j["points"] = nlohmann::ordered_json::array();
  for (const Complex& z : report.points) j["points"].push_back(complex_json(z));
  j["max_abs_error"] = report.max_abs_error;
  j["max_rel_error"] = report.max_rel_error;
  j["tolerance"] = report.tolerance;
  j["pass"] = report.pass;
  j["attempts"] = report.attempts;
  if (!report.note.empty()) j["note"] = report.note;
  return j;
}

nlohmann::ordered_json to_json(const SuiteReport& report) {
  nlohmann::ordered_json j;
  j["check"] = report.check;
  j["seed"] = report.seed;
  j["trials"] = report.trials;
  j["tolerance"] = report.tolerance;
  j["word_length"] = report.word_length;
  if (report.c) j["c"] = report.c->str();
  j["pass"] = report.pass;
  j["max_abs_error"] = report.max_abs_error;
  j["max_rel_error"] = report.max_rel_error;
  j["resampled"] = report.resampled;
  j["worst"] = to_json(report.worst);
  j["failures"] = nlohmann::ordered_json::array();
  for (const CheckReport& r : report.failures) j["failures"].push_back(to_json(r));
  return j;
}

}  // namespace g2vir::modular
