#ifndef SHANNONFD_LP_ENGINE_HPP
#define SHANNONFD_LP_ENGINE_HPP

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "shannonfd/constraint_matrix.hpp"
#include "shannonfd/entropy_lattice.hpp"
#include "shannonfd/fd_closure.hpp"

namespace shannonfd {

enum class Sense { kMinimize, kMaximize };

/// Optimize objective(h) over the cone {h : ineq(h) >= 0, eq(h) = 0}, with h
/// indexed by `columns`. The feasible region always contains 0, so the
/// optimum is either exactly 0 or unbounded.
struct LpProblem {
  std::vector<VarSet> columns;
  LinForm objective;
  std::vector<LinForm> ineq_rows;
  std::vector<LinForm> eq_rows;
  Sense sense = Sense::kMinimize;
};

enum class LpStatus { kOptimalZero, kUnbounded };

// s * objective = sum lambda_i ineq_i + sum mu_j eq_j with lambda >= 0, where
// s = +1 for minimization and -1 for maximization.
struct DualCertificate {
  std::vector<Rational> ineq_multipliers;
  std::vector<Rational> eq_multipliers;
};

// A feasible direction, one value per column, along which the objective
// improves without bound. Scaled to coprime integers.
struct RayCertificate {
  std::vector<Rational> values;
};

struct LpOutcome {
  LpStatus status;
  std::variant<DualCertificate, RayCertificate> certificate;

  const DualCertificate& dual() const { return std::get<DualCertificate>(certificate); }
  const RayCertificate& ray() const { return std::get<RayCertificate>(certificate); }
};

// Exact simplex (Bland's rule) on the dual feasibility problem. Throws
// kLabelMismatch if a form mentions a label outside `columns`.
LpOutcome solve(const LpProblem& problem);

// Rechecks a certificate from scratch: the multiplier identity coefficient
// by coefficient, or ray feasibility and strict improvement.
bool verify_certificate(const LpProblem& problem, const LpOutcome& outcome);

struct Implication {
  bool implied = false;
  // When implied: one multiplier per system row (>= 0 on inequality rows).
  std::vector<Rational> multipliers;
  // When not implied: h over the system's columns that satisfies every row
  // and makes the target negative.
  std::vector<Rational> ray;
};

// Whether target(h) >= 0 holds on the whole region cut out by `system`.
Implication is_implied(const LinForm& target, const ConstraintMatrix& system);

// Whether H(d | c) = 0 on every polymatroid satisfying phi, decided by
// maximizing H(d|c) over full_matrix(phi).
bool closure_oracle(VarSet c, int d, const FdSystem& phi,
                    int cap = kDefaultOracleCap);
// Same question against a prebuilt full_matrix(phi).
bool closure_oracle(VarSet c, int d, const ConstraintMatrix& full);

// Whether T(alpha) is pinned to 0 (both its max and min are 0) over `full`.
bool vanishing_oracle(VarSet alpha, const ConstraintMatrix& full);

enum class SystemSide { kFirst, kSecond };

struct EquivalenceFailure {
  // The row belongs to this side and is not implied by the other side.
  SystemSide side;
  std::size_t row;
  std::string provenance;
  std::vector<Rational> ray;
};

struct EquivalenceReport {
  bool equivalent = true;
  std::vector<EquivalenceFailure> failures;
};

// Mutual implication of two systems over identical columns. An equality row
// counts as implied when both its form and its negation are. `threads` > 1
// splits the per-row checks across worker threads; the report is the same.
EquivalenceReport cone_equivalence(const ConstraintMatrix& first,
                                   const ConstraintMatrix& second,
                                   unsigned threads = 1);

}  // namespace shannonfd

#endif  // SHANNONFD_LP_ENGINE_HPP
