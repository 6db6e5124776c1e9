// Command-line front end: minimal sets, matrices, proofs and verification
// for entropy problems with functional dependencies.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "shannonfd/commands.hpp"
#include "shannonfd/error.hpp"
#include "shannonfd/problem.hpp"

namespace {

shannonfd::ProblemFile load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw shannonfd::Error(shannonfd::ErrorKind::kIo, "cannot read '" + path + "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return shannonfd::parse_problem(buffer.str());
}

}  // namespace

int main(int argc, char** argv) {
  using namespace shannonfd;

  CLI::App app{"Minimal Shannon-type inequalities under functional dependencies"};
  app.require_subcommand(1);

  CommandOptions options;
  std::string format = "text";
  app.add_option("--cap", options.cap, "Largest n for full subset enumeration")
      ->check(CLI::Range(1, kMaxVariables));
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string problem_path;
  std::string expression;
  std::string mode = "reduced";
  std::string out_path;
  std::string system = "reduced";
  std::string set_text;
  std::optional<std::size_t> drop_row;
  int count_n = 0;

  auto* minimal = app.add_subcommand("minimal", "Print the minimal inequality set");
  minimal->add_option("problem", problem_path, "Problem file")->required();

  auto* prove = app.add_subcommand("prove", "Decide whether an inequality holds");
  prove->add_option("problem", problem_path, "Problem file")->required();
  prove->add_option("expression", expression,
                    "Inequality such as \"I(A;B|C) >= 0\" (default: the file's queries)");
  prove->add_option("--system", system, "Constraint system to prove against")
      ->check(CLI::IsMember({"reduced", "full"}));

  auto* matrix = app.add_subcommand("matrix", "Export a constraint matrix");
  matrix->add_option("problem", problem_path, "Problem file")->required();
  matrix->add_option("--mode", mode, "Which matrix")
      ->check(CLI::IsMember({"full", "reduced"}));
  matrix->add_option("--out", out_path, "Output file (default: standard output)");

  auto* verify = app.add_subcommand("verify", "Check witnesses and system equivalence");
  verify->add_option("problem", problem_path, "Problem file")->required();
  verify->add_option("--oracle-cap", options.oracle_cap, "Largest n for LP checks")
      ->check(CLI::Range(1, kMaxVariables));
  verify->add_option("--drop-row", drop_row, "Drop this reduced row first (0-based)");
  verify->add_option("--threads", options.threads, "Worker threads for LP checks");

  auto* closure_cmd = app.add_subcommand("closure", "Print the closure of a set");
  closure_cmd->add_option("problem", problem_path, "Problem file")->required();
  closure_cmd->add_option("set", set_text, "Comma-separated names")->required();

  auto* count = app.add_subcommand("count", "Number of elemental inequalities");
  count->add_option("n", count_n, "Number of variables")
      ->required()
      ->check(CLI::Range(1, kMaxVariables));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }
  options.format = format == "json" ? OutputFormat::kJson : OutputFormat::kText;
  options.prove_on_full_system = system == "full";

  try {
    if (*count) return cmd_count(count_n, options, std::cout);
    const ProblemFile problem = load(problem_path);
    if (*minimal) return cmd_minimal(problem, options, std::cout);
    if (*prove) return cmd_prove(problem, expression, options, std::cout);
    if (*matrix) {
      return cmd_matrix(problem, mode == "full" ? MatrixMode::kFull : MatrixMode::kReduced,
                        out_path, options, std::cout);
    }
    if (*verify) return cmd_verify(problem, options, std::cout, drop_row);
    if (*closure_cmd) return cmd_closure(problem, set_text, options, std::cout);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
