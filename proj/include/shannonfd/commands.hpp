#ifndef SHANNONFD_COMMANDS_HPP
#define SHANNONFD_COMMANDS_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "shannonfd/problem.hpp"
#include "shannonfd/varset.hpp"

namespace shannonfd {

// Process exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;      // proven / PASS
inline constexpr int kExitFalse = 1;   // disproven / FAIL
inline constexpr int kExitInput = 2;   // bad input

enum class MatrixMode { kFull, kReduced };

struct CommandOptions {
  int cap = kDefaultEnumerationCap;
  int oracle_cap = kDefaultOracleCap;
  OutputFormat format = OutputFormat::kText;
  // The prover works on the reduced system unless this is set.
  bool prove_on_full_system = false;
  unsigned threads = 1;
};

// Each command writes its report to `out` and returns the exit code. Input
// problems surface as exceptions derived from Error.

int cmd_minimal(const ProblemFile& problem, const CommandOptions& options,
                std::ostream& out);

int cmd_prove(const ProblemFile& problem, std::string_view expression,
              const CommandOptions& options, std::ostream& out);

// Writes the matrix to out_path and the "R rows x C cols" summary to `out`.
// An empty out_path writes the matrix itself to `out` instead.
int cmd_matrix(const ProblemFile& problem, MatrixMode mode,
               const std::string& out_path, const CommandOptions& options,
               std::ostream& out);

// Witness checks for every minimal inequality plus the full-vs-reduced
// equivalence. drop_row removes that reduced row first (a negative control).
int cmd_verify(const ProblemFile& problem, const CommandOptions& options,
               std::ostream& out,
               std::optional<std::size_t> drop_row = std::nullopt);

// set_text is a comma-separated name list; empty means the empty set.
int cmd_closure(const ProblemFile& problem, std::string_view set_text,
                const CommandOptions& options, std::ostream& out);

int cmd_count(int n, const CommandOptions& options, std::ostream& out);

}  // namespace shannonfd

#endif  // SHANNONFD_COMMANDS_HPP
