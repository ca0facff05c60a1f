#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "g2vir/cli/run.hpp"

using g2vir::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> lines(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(nlohmann::json::parse(line));
  return out;
}

}  // namespace

TEST_CASE("census golden run") {
  const Result r = invoke({"census", "--n", "2"});
  CHECK(r.code == g2vir::cli::kExitPass);
  const auto j = lines(r.out).at(0);
  CHECK(j["total"] == 7);
  CHECK(j["pass"] == true);
  CHECK(j["counting_polynomial"].is_string());
}

TEST_CASE("graphs emits one object per graph") {
  const Result r = invoke({"graphs", "--n", "2"});
  CHECK(r.code == 0);
  const auto all = lines(r.out);
  CHECK(all.size() == 7);
  CHECK(all.front().dump() == R"({"edges":[],"n":2})");
}

TEST_CASE("operator rendering") {
  CHECK(invoke({"op", "--n", "0", "--format", "sexpr"}).out == "(+ (* (q 1)))\n");
  const Result json = invoke({"op", "--n", "1", "--format", "json"});
  CHECK(lines(json.out).at(0)["monomials"] == 4);
  CHECK(invoke({"op", "--n", "1", "--format", "latex"}).out.find("\\frac{c}{12}") != std::string::npos);
  CHECK(invoke({"op", "--n", "1", "--format", "xml"}).code == g2vir::cli::kExitUsage);
}

TEST_CASE("exact verification subcommands") {
  const Result ward = invoke({"verify", "ward", "--n", "1"});
  CHECK(ward.code == 0);
  CHECK(lines(ward.out).at(0)["check"] == "ward");
  CHECK(invoke({"verify", "symmetry", "--n", "3"}).code == 0);
  const Result sch = invoke({"verify", "schwarzian", "--n", "3"});
  CHECK(sch.code == 0);
  CHECK(lines(sch.out).size() == 3);
  CHECK(lines(invoke({"verify", "schwarzian", "--n", "3", "--label", "2"}).out).size() == 1);
}

TEST_CASE("modular suite exit codes") {
  const Result psi = invoke({"verify", "modular", "--check", "psi", "--trials", "100", "--seed", "42",
                             "--tol", "1e-6"});
  CHECK(psi.code == g2vir::cli::kExitPass);
  const auto j = lines(psi.out).at(0);
  CHECK(j["check"] == "psi");
  CHECK(j["trials"] == 100);
  CHECK(j["pass"] == true);

  const Result strict = invoke({"verify", "modular", "--check", "det", "--trials", "3", "--tol", "1e-300"});
  CHECK(strict.code == g2vir::cli::kExitCheckFailed);
  CHECK(lines(strict.out).at(0)["pass"] == false);

  const Result o1 = invoke({"verify", "modular", "--check", "o1", "--trials", "3"});
  CHECK(o1.code == 0);
  CHECK(lines(o1.out).size() == 3);
  CHECK(lines(invoke({"verify", "modular", "--check", "o1", "--trials", "3", "--c", "-22/5"}).out)
            .at(0)["c"] == "-22/5");
}

TEST_CASE("usage errors exit 2 with help on stderr") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"nonsense"},
           {"census", "--bogus"},
           {"census", "--n", "9"},
           {"verify", "ward", "--n", "6"},
           {"verify", "modular", "--check", "bogus"},
           {"verify", "modular", "--word-length", "13"},
           {"verify", "modular", "--tol", "-1"},
           {"verify", "modular", "--c", "1/0"},
           {"verify", "schwarzian", "--n", "2", "--label", "3"}}) {
    const Result r = invoke(args);
    INFO(r.err);
    CHECK(r.code == g2vir::cli::kExitUsage);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("fixed-seed runs are byte identical") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"verify", "modular", "--trials", "4", "--seed", "7"},
           {"psi", "--seed", "5"},
           {"graphs", "--n", "3"}}) {
    CHECK(invoke(args).out == invoke(args).out);
  }
  CHECK(invoke({"psi", "--seed", "5"}).out != invoke({"psi", "--seed", "6"}).out);
}

TEST_CASE("reports can be written to a file") {
  const auto path = std::filesystem::temp_directory_path() / "g2vir_cli_test_out.jsonl";
  std::filesystem::remove(path);
  const Result r = invoke({"census", "--n", "3", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(lines(content.str()).at(0)["total"] == 34);
  std::filesystem::remove(path);
}

TEST_CASE("environment variables supply defaults") {
  ::setenv("G2VIR_TRIALS", "2", 1);
  const Result r = invoke({"verify", "modular", "--check", "nc"});
  ::unsetenv("G2VIR_TRIALS");
  CHECK(lines(r.out).at(0)["trials"] == 2);
}
