#include "g2vir/cli/run.hpp"

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "g2vir/graphs/census.hpp"
#include "g2vir/graphs/json.hpp"
#include "g2vir/graphs/virasoro_graph.hpp"
#include "g2vir/modular/psi.hpp"
#include "g2vir/modular/siegel.hpp"
#include "g2vir/modular/trials.hpp"
#include "g2vir/ward/render.hpp"
#include "g2vir/ward/verify.hpp"

namespace g2vir::cli {

namespace {

using json = nlohmann::ordered_json;

// Thrown for configuration problems that CLI11 cannot see.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int n = 1;
  std::string format = "json";
  std::uint64_t seed = 42;
  std::optional<int> trials;
  std::optional<double> tol;
  int word_length = modular::kDefaultWordLength;
  std::optional<std::string> c;
  std::string check = "all";
  std::optional<int> label;
  std::string out;
};

// Central charges exercised when --c is absent.
const std::vector<std::string> kDefaultCharges{"0", "2", "-22/5"};

void require_range(int value, int lo, int hi, const std::string& what) {
  if (value < lo || value > hi)
    throw UsageError(what + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

expr::Rational parse_charge(const std::string& text) {
  try {
    return expr::Rational::parse(text);
  } catch (const std::exception&) {
    throw UsageError("--c must be an exact rational such as -22/5, got '" + text + "'");
  }
}

struct Output {
  std::ostringstream lines;
  bool pass = true;
  void emit(const json& j) { lines << j.dump() << '\n'; }
  void emit_report(const json& j) {
    emit(j);
    pass = pass && j.at("pass").get<bool>();
  }
};

void cmd_graphs(const RunConfig& cfg, Output& o) {
  require_range(cfg.n, 0, graphs::kDefaultGraphCap, "--n");
  graphs::for_each_graph(cfg.n, [&](const graphs::VirasoroGraph& g) { o.emit(graphs::to_json(g)); });
}

void cmd_census(const RunConfig& cfg, Output& o) {
  require_range(cfg.n, 0, graphs::kDefaultGraphCap, "--n");
  const graphs::Census table = graphs::census(cfg.n);
  const graphs::CountingPolynomial poly = graphs::counting_polynomial(cfg.n);
  json j = graphs::to_json(table);
  j["counting_polynomial"] = poly.str();
  j["pass"] = graphs::matches(table, poly) && table.total() == graphs::partial_permutation_count(cfg.n);
  o.emit_report(j);
}

void cmd_op(const RunConfig& cfg, Output& o) {
  require_range(cfg.n, 0, ward::kOperatorCap, "--n");
  ward::Format format{};
  try {
    format = ward::parse_format(cfg.format);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  o.lines << ward::render_operator(ward::build_operator(cfg.n), format) << '\n';
}

void cmd_verify_ward(const RunConfig& cfg, Output& o) {
  require_range(cfg.n, 1, ward::kOperatorCap, "--n");
  o.emit_report(ward::to_json(ward::verify_ward(cfg.n)));
}

void cmd_verify_symmetry(const RunConfig& cfg, Output& o) {
  require_range(cfg.n, 1, ward::kOperatorCap, "--n");
  o.emit_report(ward::to_json(ward::verify_symmetry(cfg.n)));
}

void cmd_verify_schwarzian(const RunConfig& cfg, Output& o) {
  require_range(cfg.n, 1, ward::kOperatorCap, "--n");
  if (cfg.label) {
    require_range(*cfg.label, 1, cfg.n, "--label");
    o.emit_report(ward::to_json(ward::verify_schwarzian(cfg.n, *cfg.label)));
    return;
  }
  for (int i = 1; i <= cfg.n; ++i) o.emit_report(ward::to_json(ward::verify_schwarzian(cfg.n, i)));
}

void cmd_verify_modular(const RunConfig& cfg, Output& o) {
  require_range(cfg.word_length, 0, modular::kMaxWordLength, "--word-length");
  if (cfg.trials && *cfg.trials <= 0) throw UsageError("--trials must be positive");
  if (cfg.tol && !(*cfg.tol > 0)) throw UsageError("--tol must be positive");
  std::vector<modular::CheckKind> kinds;
  if (cfg.check == "all") {
    // The default gate leaves out the second-order covariance check.
    for (modular::CheckKind k : modular::kAllChecks)
      if (k != modular::CheckKind::o2) kinds.push_back(k);
  } else {
    try {
      kinds.push_back(modular::parse_check(cfg.check));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  std::vector<expr::Rational> charges;
  if (cfg.c) {
    charges.push_back(parse_charge(*cfg.c));
  } else {
    for (const std::string& text : kDefaultCharges) charges.push_back(parse_charge(text));
  }
  for (modular::CheckKind kind : kinds) {
    modular::SuiteConfig suite;
    suite.seed = cfg.seed;
    suite.trials = cfg.trials;
    suite.tolerance = cfg.tol;
    suite.word_length = cfg.word_length;
    if (!modular::uses_central_charge(kind)) {
      o.emit_report(modular::to_json(modular::run_suite(kind, suite)));
      continue;
    }
    for (const expr::Rational& c : charges) {
      suite.c = c;
      o.emit_report(modular::to_json(modular::run_suite(kind, suite)));
    }
  }
}

json complex_json(modular::Complex z) { return json::array({z.real(), z.imag()}); }

// Psi and its pole normalisation on a seeded sample.
void cmd_psi(const RunConfig& cfg, Output& o) {
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> box(-0.5, 0.5);
  const modular::SiegelPoint omega(modular::Complex(0.1, 1.1), modular::Complex(0.05, 0.2),
                                   modular::Complex(-0.1, 0.9));
  const std::uint64_t geometry_seed = rng();
  const modular::ModelGeometry geometry(geometry_seed);
  const double x_re = box(rng);
  const modular::Complex x(x_re, box(rng));
  const double y_re = box(rng);
  const modular::Complex y(y_re, box(rng));
  const modular::DiffOptions opt{1e-5, true};
  json j;
  j["check"] = "psi";
  j["seed"] = cfg.seed;
  j["geometry_seed"] = geometry_seed;
  j["omega"] = json::array({complex_json(omega.coords()(0)), complex_json(omega.coords()(1)),
                            complex_json(omega.coords()(2))});
  j["x"] = complex_json(x);
  j["y"] = complex_json(y);
  try {
    j["psi"] = complex_json(modular::evaluate_psi(geometry, omega.matrix(), x, y, opt));
    const modular::PoleCheck pole = modular::pole_check(geometry, omega.matrix(), y, 1e-3, opt);
    j["pole_limit"] = complex_json(pole.extrapolated);
    j["pole_error"] = pole.error;
    j["tolerance"] = 1e-6;
    j["pass"] = pole.error <= 1e-6;
  } catch (const modular::ConditioningError& e) {
    j["note"] = e.what();
    j["pass"] = false;
  }
  o.emit_report(j);
}

void add_n(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--n", cfg.n, "Order / label count")->envname("G2VIR_N");
}

void add_modular_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--seed", cfg.seed, "Root seed")->envname("G2VIR_SEED");
  cmd->add_option("--trials", cfg.trials, "Trials per check")->envname("G2VIR_TRIALS");
  cmd->add_option("--tol", cfg.tol, "Relative tolerance")->envname("G2VIR_TOL");
  cmd->add_option("--word-length", cfg.word_length, "Generator word length")
      ->envname("G2VIR_WORD_LENGTH");
  cmd->add_option("--c", cfg.c, "Central charge as an exact rational")->envname("G2VIR_C");
  cmd->add_option("--check", cfg.check,
                  "sp4|nc|logdet|nablaN|det|psi|pole|ode|o1|o2|all (all omits o2)")
      ->envname("G2VIR_CHECK");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Genus-two Virasoro operator engine and modular verifier", "g2vir"};
  app.require_subcommand(1);
  app.add_option("--out", cfg.out, "Write reports to this file instead of stdout");

  auto* graphs_cmd = app.add_subcommand("graphs", "List order-n Virasoro graphs");
  add_n(graphs_cmd, cfg);
  auto* census_cmd = app.add_subcommand("census", "Cycle/chain census against the counting polynomial");
  add_n(census_cmd, cfg);
  auto* op_cmd = app.add_subcommand("op", "Render the operator O_n");
  add_n(op_cmd, cfg);
  op_cmd->add_option("--format", cfg.format, "sexpr|latex|json")->envname("G2VIR_FORMAT");

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->require_subcommand(1);
  auto* ward_cmd = verify_cmd->add_subcommand("ward", "Recursion against graph enumeration");
  add_n(ward_cmd, cfg);
  auto* sym_cmd = verify_cmd->add_subcommand("symmetry", "Invariance under label transpositions");
  add_n(sym_cmd, cfg);
  auto* sch_cmd = verify_cmd->add_subcommand("schwarzian", "Schwarzian substitution law");
  add_n(sch_cmd, cfg);
  sch_cmd->add_option("--label", cfg.label, "Single label to check (default: all)");
  auto* mod_cmd = verify_cmd->add_subcommand("modular", "Randomized Sp(4,Z) checks");
  add_modular_options(mod_cmd, cfg);

  auto* psi_cmd = app.add_subcommand("psi", "Evaluate Psi and its pole on a seeded sample");
  psi_cmd->add_option("--seed", cfg.seed, "Sample seed")->envname("G2VIR_SEED");

  for (auto* cmd : {graphs_cmd, census_cmd, op_cmd, ward_cmd, sym_cmd, sch_cmd, mod_cmd, psi_cmd})
    cmd->add_option("--out", cfg.out, "Write reports to this file instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  Output o;
  try {
    if (graphs_cmd->parsed()) cmd_graphs(cfg, o);
    else if (census_cmd->parsed()) cmd_census(cfg, o);
    else if (op_cmd->parsed()) cmd_op(cfg, o);
    else if (ward_cmd->parsed()) cmd_verify_ward(cfg, o);
    else if (sym_cmd->parsed()) cmd_verify_symmetry(cfg, o);
    else if (sch_cmd->parsed()) cmd_verify_schwarzian(cfg, o);
    else if (mod_cmd->parsed()) cmd_verify_modular(cfg, o);
    else if (psi_cmd->parsed()) cmd_psi(cfg, o);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }

  if (cfg.out.empty()) {
    out << o.lines.str();
  } else {
    std::ofstream file(cfg.out);
    if (!(file << o.lines.str())) {
      err << "error: cannot write " << cfg.out << '\n';
      return kExitUsage;
    }
  }
  return o.pass ? kExitPass : kExitCheckFailed;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace g2vir::cli
