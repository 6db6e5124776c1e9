#include "shannonfd/lp_engine.hpp"

#include <random>

#include <gtest/gtest.h>

#include "shannonfd/error.hpp"
#include "shannonfd/minimal_generator.hpp"
#include "test_support.hpp"

namespace shannonfd {
namespace {

using testing::Phi;
using testing::V;

const FdSystem kRunning = Phi(3, {{V({3}), V({1, 2})}});

LpProblem over_matrix(const ConstraintMatrix& m, LinForm objective) {
  LpProblem p{m.columns, std::move(objective), {}, {}, Sense::kMinimize};
  for (const ConstraintRow& row : m.rows) {
    (row.relation == Relation::kNonNegative ? p.ineq_rows : p.eq_rows).push_back(row.form);
  }
  return p;
}

EntropyVector point(int n, const std::vector<Rational>& values) {
  return EntropyVector(n, values);
}

TEST(Solve, ObjectiveIsARow) {
  LinForm target(2);
  target.add(V({1, 2}), 1);
  target.add(V({1}), -1);
  const LpProblem p = over_matrix(full_matrix(FdSystem{2, {}}), target);
  const LpOutcome out = solve(p);
  ASSERT_EQ(out.status, LpStatus::kOptimalZero);
  EXPECT_TRUE(verify_certificate(p, out));
  // The only combination is the unit multiplier on H(2|1).
  const Inequality h2_given_1 = Inequality::conditional_entropy(1, V({1}));
  const std::vector<Inequality> rows = enumerate_elemental(2);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(out.dual().ineq_multipliers[i], rows[i] == h2_given_1 ? 1 : 0);
  }
}

TEST(Solve, MutualInformationUnboundedUnderMonotonicityOnly) {
  LpProblem p;
  p.columns = {V({1}), V({2}), V({1, 2})};
  p.objective = mutual_info_form(V({1}), V({2}), VarSet(), 2);
  p.ineq_rows = {cond_entropy_form(V({1}), V({2}), 2), cond_entropy_form(V({2}), V({1}), 2)};
  const LpOutcome out = solve(p);
  ASSERT_EQ(out.status, LpStatus::kUnbounded);
  EXPECT_TRUE(verify_certificate(p, out));
  // The (1,1,3) witness is a valid ray for the same problem.
  const LpOutcome witness{LpStatus::kUnbounded, RayCertificate{{1, 1, 3}}};
  EXPECT_TRUE(verify_certificate(p, witness));
}

TEST(Solve, FdMakesJointEntropyDominate) {
  LinForm target(3);
  target.add(V({1, 2}), 1);
  target.add(V({3}), -1);
  const LpProblem p = over_matrix(full_matrix(kRunning), target);
  const LpOutcome out = solve(p);
  ASSERT_EQ(out.status, LpStatus::kOptimalZero);
  EXPECT_TRUE(verify_certificate(p, out));
}

TEST(Solve, MaximizeUsesNegatedObjective) {
  LpProblem p = over_matrix(full_matrix(kRunning), cond_entropy_form(V({3}), V({1, 2}), 3));
  p.sense = Sense::kMaximize;
  const LpOutcome zero = solve(p);
  EXPECT_EQ(zero.status, LpStatus::kOptimalZero);
  EXPECT_TRUE(verify_certificate(p, zero));
  p.objective = cond_entropy_form(V({1}), V({2}), 3);
  const LpOutcome up = solve(p);
  EXPECT_EQ(up.status, LpStatus::kUnbounded);
  EXPECT_TRUE(verify_certificate(p, up));
}

TEST(Solve, EmptySystemAndZeroObjective) {
  LpProblem p;
  p.columns = {V({1})};
  p.objective = LinForm(1);
  EXPECT_EQ(solve(p).status, LpStatus::kOptimalZero);
  p.objective = entropy_form(V({1}), 1);
  const LpOutcome out = solve(p);
  EXPECT_EQ(out.status, LpStatus::kUnbounded);
  EXPECT_TRUE(verify_certificate(p, out));
}

TEST(Solve, RejectsUnknownLabels) {
  LpProblem p;
  p.columns = {V({1})};
  p.objective = entropy_form(V({2}), 2);
  EXPECT_THROW(solve(p), Error);
}

TEST(VerifyCertificate, RejectsBadCertificates) {
  const LpProblem p = over_matrix(full_matrix(FdSystem{2, {}}), entropy_form(V({1}), 2));
  LpOutcome out = solve(p);
  ASSERT_EQ(out.status, LpStatus::kOptimalZero);
  std::get<DualCertificate>(out.certificate).ineq_multipliers[0] += 1;
  EXPECT_FALSE(verify_certificate(p, out));
  // A ray that violates a constraint.
  EXPECT_FALSE(verify_certificate(
      p, LpOutcome{LpStatus::kUnbounded, RayCertificate{{-1, 0, 0}}}));
  // A feasible direction that does not improve the objective.
  EXPECT_FALSE(verify_certificate(
      p, LpOutcome{LpStatus::kUnbounded, RayCertificate{{1, 1, 2}}}));
}

TEST(Solve, PropertiesOnRandomObjectives) {
  std::mt19937 rng(61);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + trial % 3;
    const FdSystem phi = testing::random_fd_system(rng, n, 3);
    LinForm target(n);
    for (int k = 0; k < 4; ++k) target.add(testing::random_subset(rng, n), coef(rng));
    const LpProblem p = over_matrix(full_matrix(phi), target);
    const LpOutcome out = solve(p);
    ASSERT_TRUE(verify_certificate(p, out));

    // Deterministic.
    const LpOutcome again = solve(p);
    ASSERT_EQ(again.status, out.status);
    if (out.status == LpStatus::kOptimalZero) {
      ASSERT_EQ(again.dual().ineq_multipliers, out.dual().ineq_multipliers);
      ASSERT_EQ(again.dual().eq_multipliers, out.dual().eq_multipliers);
    } else {
      ASSERT_EQ(again.ray().values, out.ray().values);
    }

    // Scaling rows by positive rationals changes no outcome.
    LpProblem scaled = p;
    for (LinForm& row : scaled.ineq_rows) row *= testing::random_nonnegative(rng) + 1;
    for (LinForm& row : scaled.eq_rows) row *= Rational(3, 2);
    const LpOutcome scaled_out = solve(scaled);
    ASSERT_EQ(scaled_out.status, out.status);
    ASSERT_TRUE(verify_certificate(scaled, scaled_out));

    // Duplicated rows (degenerate bases) still terminate with the same answer.
    LpProblem doubled = p;
    for (const LinForm& row : p.ineq_rows) doubled.ineq_rows.push_back(row);
    for (const LinForm& row : p.ineq_rows) doubled.ineq_rows.push_back(2 * row);
    for (const LinForm& row : p.eq_rows) doubled.eq_rows.push_back(-row);
    const LpOutcome doubled_out = solve(doubled);
    ASSERT_EQ(doubled_out.status, out.status);
    ASSERT_TRUE(verify_certificate(doubled, doubled_out));
  }
}

TEST(IsImplied, Examples) {
  const ConstraintMatrix system = expand_reduced(reduced_matrix(kRunning), kRunning);
  const Implication member =
      is_implied(mutual_info_form(V({1}), V({2}), V({3}), 3), system);
  EXPECT_TRUE(member.implied);
  ASSERT_EQ(member.multipliers.size(), system.rows.size());

  const LinForm target = mutual_info_form(V({2}), V({3}), V({1}), 3);
  const Implication combined = is_implied(target, system);
  ASSERT_TRUE(combined.implied);
  // Recombine the rows by hand.
  LinForm sum(3);
  for (std::size_t r = 0; r < system.rows.size(); ++r) {
    if (system.rows[r].relation == Relation::kNonNegative) {
      EXPECT_GE(combined.multipliers[r], 0);
    }
    sum += combined.multipliers[r] * system.rows[r].form;
  }
  EXPECT_EQ(sum, target);

  const ConstraintMatrix two = full_matrix(FdSystem{2, {}});
  const Implication negated = is_implied(-entropy_form(V({1}), 2), two);
  ASSERT_FALSE(negated.implied);
  const EntropyVector h = point(2, negated.ray);
  EXPECT_LT((-entropy_form(V({1}), 2)).evaluate(h), 0);
  for (const ConstraintRow& row : two.rows) EXPECT_GE(row.form.evaluate(h), 0);
}

TEST(ClosureOracle, Examples) {
  EXPECT_TRUE(closure_oracle(V({1, 2}), 2, kRunning));
  const FdSystem chain = Phi(4, {{V({3}), V({1, 2})}, {V({4}), V({3})}});
  EXPECT_TRUE(closure_oracle(V({1, 2}), 3, chain));
  EXPECT_FALSE(closure_oracle(V({1}), 3, chain));
  EXPECT_FALSE(closure_oracle(V({1}), 1, FdSystem{2, {}}));
  EXPECT_THROW(closure_oracle(V({1}), 1, FdSystem{5, {}}), Error);
  EXPECT_FALSE(closure_oracle(V({1}), 1, FdSystem{5, {}}, 5));
}

TEST(VanishingOracle, Examples) {
  const ConstraintMatrix full = full_matrix(kRunning);
  EXPECT_TRUE(vanishing_oracle(V({1, 2}), full));
  EXPECT_FALSE(vanishing_oracle(VarSet(), full));
  EXPECT_FALSE(vanishing_oracle(V({3}), full));
}

TEST(ConeEquivalence, FullVersusReduced) {
  const ConstraintMatrix full = full_matrix(kRunning);
  const ConstraintMatrix reduced = reduced_matrix(kRunning);
  EXPECT_TRUE(cone_equivalence(full, expand_reduced(reduced, kRunning)).equivalent);
  EXPECT_TRUE(cone_equivalence(full, full).equivalent);
}

TEST(ConeEquivalence, DroppedRowIsReported) {
  const ConstraintMatrix full = full_matrix(kRunning);
  const std::vector<Inequality> minimal = generate_minimal(kRunning);
  for (std::size_t drop = 0; drop < minimal.size(); ++drop) {
    ConstraintMatrix reduced = reduced_matrix(kRunning);
    reduced.rows.erase(reduced.rows.begin() + static_cast<std::ptrdiff_t>(drop));
    const EquivalenceReport report =
        cone_equivalence(full, expand_reduced(reduced, kRunning));
    ASSERT_FALSE(report.equivalent);
    ASSERT_FALSE(report.failures.empty());
    for (const EquivalenceFailure& f : report.failures) {
      EXPECT_EQ(f.side, SystemSide::kFirst);
      // The ray keeps every remaining row but breaks the dropped inequality.
      const EntropyVector h = point(3, f.ray);
      EXPECT_LT(minimal[drop].form(3).evaluate(h), 0) << minimal[drop].to_string();
      for (std::size_t k = 0; k < minimal.size(); ++k) {
        if (k != drop) EXPECT_GE(minimal[k].form(3).evaluate(h), 0);
      }
      EXPECT_EQ(cond_entropy_form(V({3}), V({1, 2}), 3).evaluate(h), 0);
    }
    // The witness for the dropped inequality is an equally valid ray.
    const Inequality& q = minimal[drop];
    const EntropyVector w = h_from_atoms(q.kind() == InequalityKind::kMutualInformation
                                             ? witness_type1(q, kRunning)
                                             : witness_type2(q, kRunning));
    const ConstraintMatrix expanded = expand_reduced(reduced, kRunning);
    for (const ConstraintRow& row : expanded.rows) {
      const Rational v = row.form.evaluate(w);
      EXPECT_TRUE(row.relation == Relation::kNonNegative ? v >= 0 : v == 0);
    }
    EXPECT_EQ(q.form(3).evaluate(w), -1);
  }
}

TEST(ConeEquivalence, ThreadsGiveTheSameReport) {
  ConstraintMatrix reduced = reduced_matrix(kRunning);
  reduced.rows.erase(reduced.rows.begin());
  const ConstraintMatrix full = full_matrix(kRunning);
  const ConstraintMatrix expanded = expand_reduced(reduced, kRunning);
  const EquivalenceReport one = cone_equivalence(full, expanded, 1);
  const EquivalenceReport four = cone_equivalence(full, expanded, 4);
  ASSERT_EQ(one.failures.size(), four.failures.size());
  for (std::size_t i = 0; i < one.failures.size(); ++i) {
    EXPECT_EQ(one.failures[i].row, four.failures[i].row);
    EXPECT_EQ(one.failures[i].ray, four.failures[i].ray);
  }
}

TEST(ConeEquivalence, RejectsDifferentColumns) {
  EXPECT_THROW(cone_equivalence(full_matrix(kRunning), reduced_matrix(kRunning)), Error);
}

}  // namespace
}  // namespace shannonfd
