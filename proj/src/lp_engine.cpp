#include "shannonfd/lp_engine.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>

#include "shannonfd/error.hpp"
#include "shannonfd/minimal_generator.hpp"

namespace shannonfd {

namespace {

class ColumnIndex {
 public:
  explicit ColumnIndex(const std::vector<VarSet>& columns) {
    entries_.reserve(columns.size());
    for (std::size_t i = 0; i < columns.size(); ++i) {
      entries_.emplace_back(columns[i], i);
    }
    std::sort(entries_.begin(), entries_.end());
    for (std::size_t i = 1; i < entries_.size(); ++i) {
      if (entries_[i].first == entries_[i - 1].first) {
        throw Error(ErrorKind::kLabelMismatch, "duplicate column label");
      }
    }
  }

  std::size_t at(VarSet label) const {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), label,
        [](const auto& entry, VarSet key) { return entry.first < key; });
    if (it == entries_.end() || it->first != label) {
      throw Error(ErrorKind::kLabelMismatch,
                  "form references a label that is not a column: {" +
                      format_set(label) + "}");
    }
    return it->second;
  }

 private:
  std::vector<std::pair<VarSet, std::size_t>> entries_;
};

std::vector<Rational> dense(const LinForm& form, const ColumnIndex& index,
                            std::size_t width) {
  std::vector<Rational> out(width);
  for (const auto& [label, coeff] : form.terms()) out[index.at(label)] = coeff;
  return out;
}

Rational dot(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  Rational sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0 && y[i] != 0) sum += x[i] * y[i];
  }
  return sum;
}

// Scales a nonzero vector by a positive rational so that its entries become
// coprime integers.
void normalize_ray(std::vector<Rational>& ray) {
  mpz_class den_lcm = 1;
  for (const Rational& v : ray) {
    if (v != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                        v.get_den_mpz_t());
  }
  mpz_class num_gcd = 0;
  for (Rational& v : ray) {
    v *= den_lcm;
    if (v != 0) mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
                        v.get_num_mpz_t());
  }
  if (num_gcd == 0) return;
  for (Rational& v : ray) v /= num_gcd;
}

// Phase-1 simplex for: find x >= 0 with A x = b, b >= 0, starting from an
// all-artificial basis. Columns 0..structural-1 are structural; artificial i
// is column structural + i.
class Phase1Tableau {
 public:
  Phase1Tableau(std::size_t structural, std::vector<std::vector<Rational>> a,
                std::vector<Rational> b)
      : rows_(a.size()),
        structural_(structural),
        width_(structural_ + rows_),
        t_(std::move(a)),
        rhs_(std::move(b)),
        cost_(width_),
        basis_(rows_) {
    for (std::size_t i = 0; i < rows_; ++i) {
      t_[i].resize(width_);
      t_[i][structural_ + i] = 1;
      basis_[i] = structural_ + i;
    }
    // Reduced costs of the phase-1 objective sum(artificials).
    for (std::size_t v = 0; v < structural_; ++v) {
      for (std::size_t i = 0; i < rows_; ++i) {
        if (t_[i][v] != 0) cost_[v] -= t_[i][v];
      }
    }
    for (std::size_t i = 0; i < rows_; ++i) value_ += rhs_[i];
  }

  void run() {
    while (true) {
      // Bland: lowest-index improving column.
      std::size_t enter = width_;
      for (std::size_t v = 0; v < width_; ++v) {
        if (cost_[v] < 0) {
          enter = v;
          break;
        }
      }
      if (enter == width_) return;

      std::size_t leave = rows_;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (t_[i][enter] <= 0) continue;
        Rational ratio = rhs_[i] / t_[i][enter];
        if (leave == rows_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = std::move(ratio);
        }
      }
      // Phase 1 is bounded below by 0, so some row always limits the step.
      if (leave == rows_) throw std::logic_error("phase 1 unbounded");
      pivot(leave, enter);
    }
  }

  const Rational& objective_value() const { return value_; }
  const Rational& reduced_cost(std::size_t v) const { return cost_[v]; }
  std::size_t structural() const { return structural_; }

  std::vector<Rational> structural_solution() const {
    std::vector<Rational> x(structural_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < structural_) x[basis_[i]] = rhs_[i];
    }
    return x;
  }

 private:
  void pivot(std::size_t row, std::size_t col) {
    const Rational inv = 1 / t_[row][col];
    std::vector<std::size_t> support;
    for (std::size_t v = 0; v < width_; ++v) {
      if (t_[row][v] != 0) {
        t_[row][v] *= inv;
        support.push_back(v);
      }
    }
    rhs_[row] *= inv;

    auto eliminate = [&](std::vector<Rational>& target, Rational& target_rhs) {
      const Rational factor = target[col];
      if (factor == 0) return;
      for (std::size_t v : support) target[v] -= factor * t_[row][v];
      target_rhs -= factor * rhs_[row];
    };
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i != row) eliminate(t_[i], rhs_[i]);
    }
    // The objective row stores -value in its right-hand side.
    Rational neg_value = -value_;
    eliminate(cost_, neg_value);
    value_ = -neg_value;
    basis_[row] = col;
  }

  std::size_t rows_;
  std::size_t structural_;
  std::size_t width_;
  std::vector<std::vector<Rational>> t_;
  std::vector<Rational> rhs_;
  std::vector<Rational> cost_;
  Rational value_ = 0;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpOutcome solve(const LpProblem& problem) {
  const std::size_t d = problem.columns.size();
  const ColumnIndex index(problem.columns);
  const std::size_t m = problem.ineq_rows.size();
  const std::size_t k = problem.eq_rows.size();

  std::vector<Rational> target = dense(problem.objective, index, d);
  if (problem.sense == Sense::kMaximize) {
    for (Rational& v : target) v = -v;
  }
  std::vector<std::vector<Rational>> ineq(m), eq(k);
  for (std::size_t i = 0; i < m; ++i) ineq[i] = dense(problem.ineq_rows[i], index, d);
  for (std::size_t j = 0; j < k; ++j) eq[j] = dense(problem.eq_rows[j], index, d);

  // Dual feasibility: sum lambda_i ineq_i + sum (mu+_j - mu-_j) eq_j = target
  // with every unknown >= 0. One equation per column, each flipped so that
  // its right-hand side is nonnegative.
  std::vector<int> sign(d, 1);
  std::vector<std::vector<Rational>> a(d, std::vector<Rational>(m + 2 * k));
  std::vector<Rational> b(d);
  for (std::size_t col = 0; col < d; ++col) {
    if (target[col] < 0) sign[col] = -1;
    b[col] = sign[col] * target[col];
    for (std::size_t i = 0; i < m; ++i) {
      if (ineq[i][col] != 0) a[col][i] = sign[col] * ineq[i][col];
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (eq[j][col] != 0) {
        a[col][m + j] = sign[col] * eq[j][col];
        a[col][m + k + j] = -a[col][m + j];
      }
    }
  }

  Phase1Tableau tableau(m + 2 * k, std::move(a), std::move(b));
  tableau.run();

  LpOutcome outcome{LpStatus::kOptimalZero, DualCertificate{}};
  if (tableau.objective_value() == 0) {
    const std::vector<Rational> x = tableau.structural_solution();
    DualCertificate cert;
    cert.ineq_multipliers.assign(x.begin(), x.begin() + m);
    cert.eq_multipliers.resize(k);
    for (std::size_t j = 0; j < k; ++j) {
      cert.eq_multipliers[j] = x[m + j] - x[m + k + j];
    }
    outcome.certificate = std::move(cert);
  } else {
    // Farkas: the simplex multipliers y (recovered from the artificial
    // reduced costs) satisfy y.A <= 0 and y.b > 0, so -y, unflipped, is a
    // feasible ray with negative objective.
    RayCertificate ray;
    ray.values.resize(d);
    for (std::size_t col = 0; col < d; ++col) {
      const Rational y = 1 - tableau.reduced_cost(tableau.structural() + col);
      ray.values[col] = -sign[col] * y;
    }
    normalize_ray(ray.values);
    outcome.status = LpStatus::kUnbounded;
    outcome.certificate = std::move(ray);
  }
  if (!verify_certificate(problem, outcome)) {
    throw std::logic_error("simplex produced a certificate that does not verify");
  }
  return outcome;
}

bool verify_certificate(const LpProblem& problem, const LpOutcome& outcome) {
  const std::size_t d = problem.columns.size();
  const ColumnIndex index(problem.columns);
  const Rational direction = problem.sense == Sense::kMinimize ? 1 : -1;

  if (outcome.status == LpStatus::kOptimalZero) {
    const auto* cert = std::get_if<DualCertificate>(&outcome.certificate);
    if (cert == nullptr ||
        cert->ineq_multipliers.size() != problem.ineq_rows.size() ||
        cert->eq_multipliers.size() != problem.eq_rows.size()) {
      return false;
    }
    LinForm combined(problem.objective.n());
    for (std::size_t i = 0; i < problem.ineq_rows.size(); ++i) {
      const Rational& lambda = cert->ineq_multipliers[i];
      if (lambda < 0) return false;
      if (lambda != 0) combined += lambda * problem.ineq_rows[i];
    }
    for (std::size_t j = 0; j < problem.eq_rows.size(); ++j) {
      const Rational& mu = cert->eq_multipliers[j];
      if (mu != 0) combined += mu * problem.eq_rows[j];
    }
    const LinForm expected = direction * problem.objective;
    for (const auto& [label, coeff] : combined.terms()) index.at(label);
    return combined.terms() == expected.terms();
  }

  const auto* ray = std::get_if<RayCertificate>(&outcome.certificate);
  if (ray == nullptr || ray->values.size() != d) return false;
  for (const LinForm& row : problem.ineq_rows) {
    if (dot(dense(row, index, d), ray->values) < 0) return false;
  }
  for (const LinForm& row : problem.eq_rows) {
    if (dot(dense(row, index, d), ray->values) != 0) return false;
  }
  return direction * dot(dense(problem.objective, index, d), ray->values) < 0;
}

Implication is_implied(const LinForm& target, const ConstraintMatrix& system) {
  LpProblem problem{system.columns, target, {}, {}, Sense::kMinimize};
  std::vector<std::size_t> ineq_source, eq_source;
  for (std::size_t r = 0; r < system.rows.size(); ++r) {
    const ConstraintRow& row = system.rows[r];
    if (row.relation == Relation::kNonNegative) {
      problem.ineq_rows.push_back(row.form);
      ineq_source.push_back(r);
    } else {
      problem.eq_rows.push_back(row.form);
      eq_source.push_back(r);
    }
  }
  const LpOutcome outcome = solve(problem);
  Implication result;
  if (outcome.status == LpStatus::kOptimalZero) {
    result.implied = true;
    result.multipliers.resize(system.rows.size());
    const DualCertificate& cert = outcome.dual();
    for (std::size_t i = 0; i < ineq_source.size(); ++i) {
      result.multipliers[ineq_source[i]] = cert.ineq_multipliers[i];
    }
    for (std::size_t j = 0; j < eq_source.size(); ++j) {
      result.multipliers[eq_source[j]] = cert.eq_multipliers[j];
    }
  } else {
    result.ray = outcome.ray().values;
  }
  return result;
}

bool closure_oracle(VarSet c, int d, const FdSystem& phi, int cap) {
  check_enumeration_cap(phi.n, cap);
  return closure_oracle(c, d, full_matrix(phi, cap));
}

bool closure_oracle(VarSet c, int d, const ConstraintMatrix& full) {
  check_within(c, full.n);
  if (d < 0 || d >= full.n) {
    throw Error(ErrorKind::kOutOfRange, "variable outside the ground set");
  }
  if (c.contains(d)) return true;
  LpProblem problem{full.columns,
                    cond_entropy_form(VarSet::singleton(d), c, full.n),
                    {},
                    {},
                    Sense::kMaximize};
  for (const ConstraintRow& row : full.rows) {
    (row.relation == Relation::kNonNegative ? problem.ineq_rows
                                            : problem.eq_rows)
        .push_back(row.form);
  }
  return solve(problem).status == LpStatus::kOptimalZero;
}

bool vanishing_oracle(VarSet alpha, const ConstraintMatrix& full) {
  const LinForm atom = atom_form(alpha, full.n);
  return is_implied(atom, full).implied && is_implied(-atom, full).implied;
}

EquivalenceReport cone_equivalence(const ConstraintMatrix& first,
                                   const ConstraintMatrix& second,
                                   unsigned threads) {
  if (first.columns != second.columns) {
    throw Error(ErrorKind::kLabelMismatch,
                "systems are over different column sets");
  }
  struct Job {
    SystemSide side;
    std::size_t row;
  };
  std::vector<Job> jobs;
  for (std::size_t r = 0; r < first.rows.size(); ++r) {
    jobs.push_back({SystemSide::kFirst, r});
  }
  for (std::size_t r = 0; r < second.rows.size(); ++r) {
    jobs.push_back({SystemSide::kSecond, r});
  }

  auto check = [&](const Job& job) -> std::optional<EquivalenceFailure> {
    const ConstraintMatrix& own =
        job.side == SystemSide::kFirst ? first : second;
    const ConstraintMatrix& other =
        job.side == SystemSide::kFirst ? second : first;
    const ConstraintRow& row = own.rows[job.row];
    Implication up = is_implied(row.form, other);
    if (up.implied && row.relation == Relation::kZero) {
      up = is_implied(-row.form, other);
    }
    if (up.implied) return std::nullopt;
    return EquivalenceFailure{job.side, job.row, row.provenance,
                              std::move(up.ray)};
  };

  std::vector<std::optional<EquivalenceFailure>> results(jobs.size());
  const unsigned workers =
      std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(jobs.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) results[i] = check(jobs[i]);
  } else {
    std::vector<std::future<void>> pending;
    for (unsigned w = 0; w < workers; ++w) {
      pending.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = w; i < jobs.size(); i += workers) {
          results[i] = check(jobs[i]);
        }
      }));
    }
    for (auto& p : pending) p.get();
  }

  EquivalenceReport report;
  for (auto& r : results) {
    if (r) report.failures.push_back(std::move(*r));
  }
  report.equivalent = report.failures.empty();
  return report;
}

}  // namespace shannonfd
