#include "shannonfd/commands.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "shannonfd/error.hpp"
#include "shannonfd/lp_engine.hpp"
#include "shannonfd/minimal_generator.hpp"

namespace shannonfd {

namespace {

using nlohmann::ordered_json;

std::string percent(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", value);
  return buf;
}

std::vector<std::string> split_names(std::string_view text) {
  std::vector<std::string> names;
  std::string current;
  for (char ch : text) {
    if (ch == ',' || ch == ' ') {
      if (!current.empty()) names.push_back(std::move(current));
      current.clear();
    } else {
      current += ch;
    }
  }
  if (!current.empty()) names.push_back(std::move(current));
  return names;
}

// Full-coordinate h induced by a reduced-column vector: h(s) is the value at
// s's reduced column, or 0 when s is identified with the empty set.
EntropyVector expand_point(const ConstraintMatrix& reduced,
                           const std::vector<Rational>& values,
                           const FdSystem& phi) {
  EntropyVector h(phi.n);
  const std::uint32_t full = VarSet::full(phi.n).bits();
  for (std::uint32_t bits = 1; bits <= full; ++bits) {
    const auto col = reduced_column(VarSet(bits), phi);
    if (!col) continue;
    for (std::size_t i = 0; i < reduced.columns.size(); ++i) {
      if (reduced.columns[i] == *col) {
        h.set(VarSet(bits), values[i]);
        break;
      }
    }
  }
  return h;
}

bool satisfies(const ConstraintMatrix& system, const EntropyVector& h) {
  for (const ConstraintRow& row : system.rows) {
    const Rational v = row.form.evaluate(h);
    if (row.relation == Relation::kNonNegative ? v < 0 : v != 0) return false;
  }
  return true;
}

struct ProveResult {
  bool implied;
  ordered_json json;
  std::string text;
};

ProveResult prove_one(const ProblemFile& problem, std::string_view expression,
                      const CommandOptions& options) {
  const FdSystem phi = problem.fd_system();
  const auto& names = problem.variables;
  const LinForm target = parse_expression(expression, problem);

  ConstraintMatrix system;
  LinForm objective;
  if (options.prove_on_full_system) {
    system = full_matrix(phi, options.cap, names);
    objective = target;
  } else {
    system = reduced_matrix(phi, options.cap, names);
    objective = reduce_form(target, phi);
  }
  const Implication result = is_implied(objective, system);

  ProveResult out{result.implied, ordered_json::object(), {}};
  out.json["expression"] = std::string(expression);
  out.json["verdict"] = result.implied ? "TRUE" : "FALSE";
  std::string text = std::string(expression) + "\n" +
                     (result.implied ? "TRUE\n" : "FALSE\n");
  if (result.implied) {
    text += "certificate:\n";
    ordered_json cert = ordered_json::array();
    for (std::size_t r = 0; r < system.rows.size(); ++r) {
      const Rational& lambda = result.multipliers[r];
      if (lambda == 0) continue;
      const ConstraintRow& row = system.rows[r];
      const std::string relation =
          row.relation == Relation::kNonNegative ? " >= 0" : " = 0";
      text += "  " + to_string(lambda) + " * " + row.provenance + relation + "\n";
      cert.push_back({{"multiplier", to_string(lambda)},
                      {"row", row.provenance + relation}});
    }
    out.json["certificate"] = cert;
  } else {
    const EntropyVector h =
        options.prove_on_full_system
            ? EntropyVector(phi.n, result.ray)
            : expand_point(system, result.ray, phi);
    // The counterexample must hold up against the uncompressed system.
    if (target.evaluate(h) >= 0 ||
        !satisfies(full_matrix(phi, options.cap), h)) {
      throw std::logic_error("counterexample failed the full-system check");
    }
    text += "counterexample:\n";
    ordered_json point = ordered_json::array();
    const std::uint32_t full = VarSet::full(phi.n).bits();
    for (std::uint32_t bits = 1; bits <= full; ++bits) {
      const VarSet s(bits);
      text += "  h(" + subset_name(s, names) + ") = " + to_string(h[s]) + "\n";
      point.push_back({{"set", subset_name(s, names)}, {"value", to_string(h[s])}});
    }
    out.json["counterexample"] = point;
  }
  out.text = std::move(text);
  return out;
}

}  // namespace

int cmd_minimal(const ProblemFile& problem, const CommandOptions& options,
                std::ostream& out) {
  const FdSystem phi = problem.fd_system();
  const auto& names = problem.variables;
  const std::vector<Inequality> minimal = generate_minimal(phi, options.cap);
  const std::size_t closed = enumerate_closed_sets(phi, options.cap).size();
  const std::uint64_t elemental = count_elemental(phi.n);
  const double reduction =
      100.0 * (static_cast<double>(elemental) - static_cast<double>(minimal.size())) /
      static_cast<double>(elemental);

  if (options.format == OutputFormat::kJson) {
    ordered_json doc;
    doc["inequalities"] = ordered_json::array();
    for (const Inequality& ineq : minimal) doc["inequalities"].push_back(ineq.to_string(names));
    doc["closed_sets"] = closed;
    doc["minimal_inequalities"] = minimal.size();
    doc["elemental_inequalities"] = elemental;
    doc["reduction_percent"] = percent(reduction);
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  for (const Inequality& ineq : minimal) out << ineq.to_string(names) << '\n';
  out << "closed sets: " << closed << '\n'
      << "minimal inequalities: " << minimal.size() << '\n'
      << "elemental inequalities: " << elemental << '\n'
      << "reduction: " << percent(reduction) << "%\n";
  return kExitOk;
}

int cmd_prove(const ProblemFile& problem, std::string_view expression,
              const CommandOptions& options, std::ostream& out) {
  std::vector<std::string> queries;
  if (expression.empty()) {
    queries = problem.queries;
  } else {
    queries.emplace_back(expression);
  }
  if (queries.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "no expression given and no query lines in the file");
  }
  bool all_true = true;
  ordered_json results = ordered_json::array();
  for (const std::string& q : queries) {
    ProveResult r = prove_one(problem, q, options);
    all_true = all_true && r.implied;
    if (options.format == OutputFormat::kJson) {
      results.push_back(std::move(r.json));
    } else {
      out << r.text;
    }
  }
  if (options.format == OutputFormat::kJson) out << results.dump(2) << '\n';
  return all_true ? kExitOk : kExitFalse;
}

int cmd_matrix(const ProblemFile& problem, MatrixMode mode,
               const std::string& out_path, const CommandOptions& options,
               std::ostream& out) {
  const FdSystem phi = problem.fd_system();
  const ConstraintMatrix matrix = mode == MatrixMode::kFull
                                      ? full_matrix(phi, options.cap, problem.variables)
                                      : reduced_matrix(phi, options.cap, problem.variables);
  if (out_path.empty()) {
    write_matrix(out, matrix, problem.variables, options.format);
    return kExitOk;
  }
  std::ofstream file(out_path);
  if (!file) throw Error(ErrorKind::kIo, "cannot open '" + out_path + "' for writing");
  write_matrix(file, matrix, problem.variables, options.format);
  file.close();
  if (!file) throw Error(ErrorKind::kIo, "failed writing '" + out_path + "'");

  if (options.format == OutputFormat::kJson) {
    ordered_json doc;
    doc["rows"] = matrix.rows.size();
    doc["cols"] = matrix.columns.size();
    out << doc.dump() << '\n';
  } else {
    out << matrix.rows.size() << " rows x " << matrix.columns.size() << " cols\n";
  }
  return kExitOk;
}

int cmd_verify(const ProblemFile& problem, const CommandOptions& options,
               std::ostream& out, std::optional<std::size_t> drop_row) {
  const FdSystem phi = problem.fd_system();
  check_enumeration_cap(phi.n, options.oracle_cap);
  const auto& names = problem.variables;

  const std::vector<Inequality> minimal = generate_minimal(phi, options.cap);
  const ConstraintMatrix full = full_matrix(phi, options.cap, names);
  ConstraintMatrix reduced = reduced_matrix(phi, options.cap, names);

  ordered_json checks = ordered_json::array();
  std::size_t failed = 0;
  auto report = [&](bool pass, const std::string& what, const std::string& detail) {
    if (!pass) ++failed;
    if (options.format == OutputFormat::kJson) {
      ordered_json entry{{"status", pass ? "PASS" : "FAIL"}, {"check", what}};
      if (!detail.empty()) entry["detail"] = detail;
      checks.push_back(std::move(entry));
    } else {
      out << (pass ? "PASS " : "FAIL ") << what;
      if (!detail.empty()) out << ": " << detail;
      out << '\n';
    }
  };

  std::vector<LinForm> fd_rows;
  for (const ConstraintRow& row : full.rows) {
    if (row.relation == Relation::kZero) fd_rows.push_back(row.form);
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    const Inequality& target = minimal[i];
    const AtomVector t = target.kind() == InequalityKind::kMutualInformation
                             ? witness_type1(target, phi)
                             : witness_type2(target, phi);
    const EntropyVector h = h_from_atoms(t);
    bool ok = target.form(phi.n).evaluate(h) == -1;
    for (std::size_t j = 0; ok && j < minimal.size(); ++j) {
      if (j != i && minimal[j].form(phi.n).evaluate(h) < 0) ok = false;
    }
    for (const LinForm& fd : fd_rows) {
      if (fd.evaluate(h) != 0) ok = false;
    }
    report(ok, "witness " + target.to_string(names), "");
  }

  std::optional<ConstraintRow> dropped;
  if (drop_row) {
    if (*drop_row >= reduced.rows.size()) {
      throw Error(ErrorKind::kInvalidArgument,
                  "drop row " + std::to_string(*drop_row) + " out of range");
    }
    dropped = reduced.rows[*drop_row];
    reduced.rows.erase(reduced.rows.begin() + static_cast<std::ptrdiff_t>(*drop_row));
  }
  const ConstraintMatrix expanded = expand_reduced(reduced, phi, names);
  const EquivalenceReport eq = cone_equivalence(full, expanded, options.threads);
  if (eq.equivalent) {
    report(true, "equivalence of full and reduced systems", "");
  }
  for (const EquivalenceFailure& f : eq.failures) {
    std::string detail;
    if (f.side == SystemSide::kFirst) {
      detail = "full row " + f.provenance + " not implied by the reduced system";
      // The ray satisfies the reduced rows, so it breaks a minimal inequality
      // that is no longer present.
      const EntropyVector h(phi.n, f.ray);
      for (const Inequality& ineq : minimal) {
        if (ineq.form(phi.n).evaluate(h) < 0) {
          detail += "; violated minimal inequality " + ineq.to_string(names);
        }
      }
    } else {
      detail = "reduced row " + f.provenance + " not implied by the full system";
    }
    report(false, "equivalence of full and reduced systems", detail);
  }

  const std::size_t total = minimal.size() + std::max<std::size_t>(1, eq.failures.size());
  if (options.format == OutputFormat::kJson) {
    ordered_json doc;
    doc["checks"] = checks;
    doc["passed"] = total - failed;
    doc["failed"] = failed;
    out << doc.dump(2) << '\n';
  } else {
    out << "checks: " << (total - failed) << " passed, " << failed << " failed\n";
  }
  return failed == 0 ? kExitOk : kExitFalse;
}

int cmd_closure(const ProblemFile& problem, std::string_view set_text,
                const CommandOptions& options, std::ostream& out) {
  const FdSystem phi = problem.fd_system();
  const VarSet s = problem.set_of(split_names(set_text));
  const VarSet cl = closure(s, phi);
  if (options.format == OutputFormat::kJson) {
    auto members = [&](VarSet v) {
      ordered_json arr = ordered_json::array();
      for (int i : v.members()) arr.push_back(problem.variables[i]);
      return arr;
    };
    ordered_json doc;
    doc["set"] = members(s);
    doc["closure"] = members(cl);
    out << doc.dump() << '\n';
  } else {
    out << "cl(" << format_set(s, problem.variables) << ") = "
        << subset_name(cl, problem.variables) << '\n';
  }
  return kExitOk;
}

int cmd_count(int n, const CommandOptions& options, std::ostream& out) {
  const std::uint64_t m = count_elemental(n);
  if (options.format == OutputFormat::kJson) {
    ordered_json doc;
    doc["n"] = n;
    doc["elemental_inequalities"] = m;
    out << doc.dump() << '\n';
  } else {
    out << "elemental inequalities for n = " << n << ": " << m << '\n';
  }
  return kExitOk;
}

}  // namespace shannonfd
