#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "g2vir/expr/rational.hpp"
#include "g2vir/modular/checks.hpp"
#include "g2vir/modular/symplectic.hpp"
#include "g2vir/modular/types.hpp"

namespace g2vir::modular {

enum class CheckKind { sp4, nc, logdet, nabla_n, det, psi, pole, ode, o1, o2 };

inline constexpr CheckKind kAllChecks[] = {CheckKind::sp4, CheckKind::nc,   CheckKind::logdet,
                                           CheckKind::nabla_n, CheckKind::det, CheckKind::psi,
                                           CheckKind::pole, CheckKind::ode,  CheckKind::o1,
                                           CheckKind::o2};

[[nodiscard]] std::string_view check_name(CheckKind kind);
/// Throws std::invalid_argument on an unknown name.
[[nodiscard]] CheckKind parse_check(std::string_view name);
[[nodiscard]] double default_tolerance(CheckKind kind);
[[nodiscard]] int default_trials(CheckKind kind);
/// Whether the check reads a central charge.
[[nodiscard]] bool uses_central_charge(CheckKind kind);

/// Default word length of sampled group elements.
inline constexpr int kDefaultWordLength = 8;
/// Resampling budget per trial.
inline constexpr int kMaxAttempts = 100;

struct SuiteConfig {
  std::uint64_t seed = 42;
  std::optional<int> trials;
  std::optional<double> tolerance;
  int word_length = kDefaultWordLength;
  expr::Rational c{0};
  CheckOptions options;
};

/// One trial: everything needed to reproduce it.
struct CheckReport {
  std::string check;
  std::uint64_t seed = 0;  // per-trial seed
  std::string word;
  CCoords omega = CCoords::Zero();
  std::uint64_t geometry_seed = 0;
  std::vector<Complex> points;
  double max_abs_error = 0;
  double max_rel_error = 0;
  double tolerance = 0;
  bool pass = false;
  int attempts = 0;
  std::string note;
};

struct SuiteReport {
  std::string check;
  std::uint64_t seed = 0;
  int trials = 0;
  double tolerance = 0;
  int word_length = 0;
  std::optional<expr::Rational> c;
  bool pass = false;
  double max_abs_error = 0;
  double max_rel_error = 0;
  int resampled = 0;
  CheckReport worst;
  std::vector<CheckReport> failures;  // at most kMaxReportedFailures
};

inline constexpr std::size_t kMaxReportedFailures = 10;

/// Seed of trial `index` of a suite, derived from the root seed and the check.
[[nodiscard]] std::uint64_t trial_seed(std::uint64_t root, CheckKind kind, int index);

/// Runs one trial from its own seed, resampling badly conditioned draws.
[[nodiscard]] CheckReport run_trial(CheckKind kind, std::uint64_t seed, int word_length,
                                    const expr::Rational& c, double tolerance,
                                    const CheckOptions& options = {});

[[nodiscard]] SuiteReport run_suite(CheckKind kind, const SuiteConfig& config);

[[nodiscard]] nlohmann::ordered_json to_json(const CheckReport& report);
[[nodiscard]] nlohmann::ordered_json to_json(const SuiteReport& report);

}  // namespace g2vir::modular
