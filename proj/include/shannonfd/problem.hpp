#ifndef SHANNONFD_PROBLEM_HPP
#define SHANNONFD_PROBLEM_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "shannonfd/constraint_matrix.hpp"
#include "shannonfd/entropy_lattice.hpp"
#include "shannonfd/fd_closure.hpp"

namespace shannonfd {

// One "SRC... -> TGT..." line. An empty source means the targets are
// constant.
struct FdDeclaration {
  std::vector<std::string> source;
  std::vector<std::string> target;

  friend bool operator==(const FdDeclaration&, const FdDeclaration&) = default;
};

/// A parsed problem file.
///
///     # comment
///     vars A B C
///     A B -> C
///     -> K
///     query H(A,B) - H(C) >= 0
///
/// The first statement declares the variables, in ground-set order. Each
/// dependency line says the names left of "->" determine the names right of
/// it. "query" lines hold inequality expressions for the prover.
struct ProblemFile {
  std::vector<std::string> variables;
  std::vector<FdDeclaration> fds;
  std::vector<std::string> queries;

  int n() const { return static_cast<int>(variables.size()); }

  // Index of a declared name; throws kInvalidArgument for unknown names.
  int index_of(std::string_view name) const;
  VarSet set_of(const std::vector<std::string>& names) const;

  // Normalized FD system over the declared variables.
  FdSystem fd_system() const;

  friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

// Throws ParseError (with line and column) on unknown or duplicate names,
// malformed lines and a missing "vars" declaration. Query expressions are
// checked as well.
ProblemFile parse_problem(std::string_view text);

// Canonical text form; parse_problem(render_problem(p)) == p.
std::string render_problem(const ProblemFile& problem);

// Parses "<sum of terms> >= 0" into a form over full entropy coordinates.
// Terms are H(L), H(L|M) and I(L;M) or I(L;M|N) with comma-separated name
// lists, each with an optional integer or p/q coefficient ("2 H(A)",
// "1/2*I(A;B)"). Throws ParseError with line 1 and the column of the
// problem.
LinForm parse_expression(std::string_view text, const ProblemFile& problem);

// Subset names joined by ',' ("A,B"); the empty set renders as "{}".
std::string subset_name(VarSet s, const std::vector<std::string>& names);

enum class OutputFormat { kText, kJson };

// Text layout:
//   cols: A|B|A,B|...
//   ge0 1 0 -1 ...
//   eq0 ...
// JSON: {"cols": [["A"], ...], "rows": [{"relation": "ge0", "entries":
// ["1", ...]}, ...]}.
void write_matrix(std::ostream& out, const ConstraintMatrix& matrix,
                  const std::vector<std::string>& names, OutputFormat format);

}  // namespace shannonfd

#endif  // SHANNONFD_PROBLEM_HPP
