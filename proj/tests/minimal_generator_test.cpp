#include "shannonfd/minimal_generator.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <tuple>

#include <gtest/gtest.h>

#include "shannonfd/error.hpp"
#include "shannonfd/lp_engine.hpp"
#include "test_support.hpp"

namespace shannonfd {
namespace {

using testing::Phi;
using testing::V;

const FdSystem kEmpty3{3, {}};
const FdSystem kRunning = Phi(3, {{V({3}), V({1, 2})}});
const FdSystem kPair2 = Phi(2, {{V({2}), V({1})}, {V({1}), V({2})}});

// 1-based shorthands.
Inequality I(int a, int b, VarSet c = {}) {
  return Inequality::mutual_information(a - 1, b - 1, c);
}
Inequality H(int a, VarSet c = {}) { return Inequality::conditional_entropy(a - 1, c); }

std::set<CanonicalKey> keys(const std::vector<Inequality>& list) {
  std::set<CanonicalKey> out;
  for (const Inequality& q : list) out.insert(q.key());
  return out;
}

// Checks the witness contract against the generated set and phi's FD rows.
void expect_witness_separates(const Inequality& target, const AtomVector& t,
                              const FdSystem& phi) {
  const EntropyVector h = h_from_atoms(t);
  EXPECT_EQ(target.form(phi.n).evaluate(h), -1) << target.to_string();
  for (const Inequality& other : generate_minimal(phi)) {
    if (other == target.canonicalized(phi)) continue;
    EXPECT_GE(other.form(phi.n).evaluate(h), 0)
        << "witness for " << target.to_string() << " breaks " << other.to_string();
  }
  for (const FunctionalDependency& dep : phi.deps) {
    EXPECT_EQ(cond_entropy_form(dep.target, dep.source, phi.n).evaluate(h), 0);
  }
}

TEST(CountElemental, Formula) {
  EXPECT_EQ(count_elemental(1), 1u);
  EXPECT_EQ(count_elemental(2), 3u);
  EXPECT_EQ(count_elemental(3), 9u);
  EXPECT_EQ(count_elemental(4), 28u);
  EXPECT_EQ(count_elemental(5), 85u);
  EXPECT_EQ(count_elemental(20), 20u + 190u * (1u << 18));
  EXPECT_THROW(count_elemental(0), Error);
  EXPECT_THROW(count_elemental(21), Error);
}

TEST(EnumerateElemental, SmallCases) {
  EXPECT_EQ(keys(enumerate_elemental(2)), keys({H(1, V({2})), H(2, V({1})), I(1, 2)}));
  const std::vector<Inequality> three = enumerate_elemental(3);
  EXPECT_EQ(std::count_if(three.begin(), three.end(),
                          [](const Inequality& q) {
                            return q.kind() == InequalityKind::kConditionalEntropy;
                          }),
            3);
  EXPECT_EQ(three.size(), 9u);
  EXPECT_EQ(keys(enumerate_elemental(1)), keys({H(1)}));
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(enumerate_elemental(n).size(), count_elemental(n));
  EXPECT_THROW(enumerate_elemental(5, 4), Error);
}

TEST(EnumerateElemental, SortedAndDistinct) {
  const std::vector<Inequality> list = enumerate_elemental(5);
  EXPECT_TRUE(std::is_sorted(list.begin(), list.end()));
  EXPECT_EQ(keys(list).size(), list.size());
}

TEST(GenerateMinimal, UnconstrainedIsElemental) {
  for (int n = 1; n <= 5; ++n) {
    const std::vector<Inequality> gen = generate_minimal(FdSystem{n, {}});
    EXPECT_EQ(keys(gen), keys(enumerate_elemental(n))) << "n=" << n;
    EXPECT_EQ(gen.size(), count_elemental(n));
  }
}

TEST(GenerateMinimal, RunningExample) {
  const std::vector<Inequality> gen = generate_minimal(kRunning);
  EXPECT_EQ(keys(gen), keys({I(1, 2), I(1, 3), I(2, 3), I(1, 2, V({3})), H(3, V({1})),
                             H(3, V({2})), H(2, V({1, 3})), H(1, V({2, 3}))}));
  EXPECT_TRUE(std::is_sorted(gen.begin(), gen.end()));
}

TEST(GenerateMinimal, MutualPairCollapsesToOneEntropy) {
  EXPECT_EQ(keys(generate_minimal(kPair2)), keys({H(1)}));
}

TEST(GenerateMinimal, ConstantVariable) {
  // With 1 constant, the closed sets are {1} and {1,2}; only H(2|1) remains.
  EXPECT_EQ(keys(generate_minimal(Phi(2, {{V({1}), VarSet()}}))), keys({H(2, V({1}))}));
}

TEST(Inequality, CanonicalizationUsesClassRepresentatives) {
  const FdSystem pair3 = Phi(3, {{V({2}), V({1})}, {V({1}), V({2})}});
  EXPECT_EQ(I(2, 3).canonicalized(pair3), I(1, 3));
  EXPECT_EQ(I(3, 2).canonicalized(pair3).key(), I(1, 3).key());
  // The condition is replaced by its closure.
  EXPECT_EQ(H(3, V({1})).canonicalized(pair3).c(), V({1}));
  EXPECT_EQ(H(3, V({1})).canonicalized(pair3).key().condition, V({1, 2}));
}

TEST(Inequality, RejectsInvalidArguments) {
  EXPECT_THROW(I(1, 1), Error);
  EXPECT_THROW(I(1, 2, V({2})), Error);
  EXPECT_THROW(H(1, V({1})), Error);
  EXPECT_THROW(Inequality::conditional_entropy(-1, VarSet()), Error);
}

TEST(Inequality, Rendering) {
  EXPECT_EQ(I(1, 2, V({3})).to_string(), "I(1;2|3) >= 0");
  EXPECT_EQ(H(1, V({2, 3})).measure_string({"A", "B", "C"}), "H(A|B,C)");
  EXPECT_EQ(I(1, 2).measure_string({"A", "B"}), "I(A;B)");
}

TEST(WitnessType1, UnconstrainedPair) {
  const FdSystem phi{2, {}};
  const AtomVector t = witness_type1(I(1, 2), phi);
  EXPECT_EQ(t[VarSet()], -1);
  EXPECT_EQ(t[V({1})], 2);
  EXPECT_EQ(t[V({2})], 2);
  const EntropyVector h = h_from_atoms(t);
  EXPECT_EQ(h[V({1})], 1);
  EXPECT_EQ(h[V({2})], 1);
  EXPECT_EQ(h[V({1, 2})], 3);
  EXPECT_EQ(H(1, V({2})).form(2).evaluate(h), 2);
  EXPECT_EQ(H(2, V({1})).form(2).evaluate(h), 2);
  expect_witness_separates(I(1, 2), t, phi);
}

TEST(WitnessType1, UnconstrainedConditional) {
  const AtomVector t = witness_type1(I(1, 2, V({3})), kEmpty3);
  EXPECT_EQ(t[V({3})], -1);
  expect_witness_separates(I(1, 2, V({3})), t, kEmpty3);
}

TEST(WitnessType1, RunningExample) {
  const AtomVector t = witness_type1(I(1, 2), kRunning);
  EXPECT_EQ(t[VarSet()], -1);
  EXPECT_EQ(t[V({3})], 0);
  EXPECT_EQ(t[V({1, 2})], 0);
  for (VarSet other : {V({1}), V({2}), V({1, 3}), V({2, 3})}) EXPECT_EQ(t[other], 2);
  expect_witness_separates(I(1, 2), t, kRunning);
}

TEST(WitnessType2, UnconstrainedPair) {
  const FdSystem phi{2, {}};
  const AtomVector t = witness_type2(H(1, V({2})), phi);
  EXPECT_EQ(t[V({2})], -1);
  EXPECT_EQ(t[VarSet()], 2);
  EXPECT_EQ(t[V({1})], 2);
  const EntropyVector h = h_from_atoms(t);
  EXPECT_EQ(h[V({1})], 1);
  EXPECT_EQ(h[V({2})], 4);
  EXPECT_EQ(h[V({1, 2})], 3);
  expect_witness_separates(H(1, V({2})), t, phi);
}

TEST(WitnessType2, RunningExample) {
  const AtomVector t = witness_type2(H(3, V({1})), kRunning);
  EXPECT_EQ(t[V({1})], -1);
  EXPECT_EQ(t[V({1, 2})], 0);
  expect_witness_separates(H(3, V({1})), t, kRunning);
}

TEST(WitnessType2, MutualPair) {
  const AtomVector t = witness_type2(H(1), kPair2);
  EXPECT_EQ(t[VarSet()], -1);
  EXPECT_EQ(t[V({1})], 0);
  EXPECT_EQ(t[V({2})], 0);
  const EntropyVector h = h_from_atoms(t);
  for (VarSet s : {V({1}), V({2}), V({1, 2})}) EXPECT_EQ(h[s], -1);
  // H(2) is the same inequality up to equivalence.
  EXPECT_EQ(witness_type2(H(2), kPair2), t);
}

TEST(Witness, RejectsInequalitiesOutsideTheMinimalSet) {
  // Under 1 -> 3, variable 1 is not minimal over the empty set.
  EXPECT_THROW(witness_type1(I(1, 3), Phi(3, {{V({3}), V({1})}})), Error);
  EXPECT_THROW(witness_type2(H(3, V({1, 2})), kRunning), Error);
  EXPECT_THROW(witness_type1(H(3, V({1})), kRunning), Error);
  EXPECT_THROW(witness_type2(I(1, 2), kRunning), Error);
}

TEST(Witness, SeparatesOnRandomSystems) {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 4;
    const FdSystem phi = testing::random_fd_system(rng, n, 5);
    for (const Inequality& q : generate_minimal(phi)) {
      const AtomVector t = q.kind() == InequalityKind::kMutualInformation
                               ? witness_type1(q, phi)
                               : witness_type2(q, phi);
      expect_witness_separates(q, t, phi);
      if (HasFailure()) return;
    }
  }
}

TEST(FullMatrix, Shapes) {
  const ConstraintMatrix empty = full_matrix(kEmpty3);
  EXPECT_EQ(empty.rows.size(), 9u);
  EXPECT_EQ(empty.columns.size(), 7u);
  const ConstraintMatrix running = full_matrix(kRunning);
  EXPECT_EQ(running.rows.size(), 10u);
  EXPECT_EQ(running.rows.back().relation, Relation::kZero);
  EXPECT_EQ(running.rows.back().provenance, "FD 1: H(3|1,2)");
  const ConstraintMatrix two = full_matrix(FdSystem{2, {}});
  EXPECT_EQ(two.rows.size(), 3u);
  EXPECT_EQ(two.columns.size(), 3u);
  for (const ConstraintRow& row : two.rows) {
    for (const auto& [s, coeff] : row.form.terms()) {
      EXPECT_TRUE(coeff == 1 || coeff == -1);
    }
  }
}

TEST(ReducedMatrix, RunningExample) {
  const ConstraintMatrix m = reduced_matrix(kRunning);
  EXPECT_EQ(m.columns, (std::vector<VarSet>{V({1}), V({2}), V({3}), V({1, 3}), V({2, 3}),
                                            V({1, 2, 3})}));
  EXPECT_EQ(m.rows.size(), 8u);
  for (const ConstraintRow& row : m.rows) {
    EXPECT_EQ(row.relation, Relation::kNonNegative);
    for (const auto& [s, coeff] : row.form.terms()) {
      EXPECT_TRUE(std::count(m.columns.begin(), m.columns.end(), s) == 1);
      EXPECT_TRUE(coeff == 1 || coeff == -1);
    }
  }
}

TEST(ReducedMatrix, UnconstrainedIsFull) {
  const ConstraintMatrix m = reduced_matrix(kEmpty3);
  EXPECT_EQ(m.columns.size(), 7u);
  EXPECT_EQ(m.rows.size(), 9u);
}

TEST(ReducedMatrix, MutualPairSingleColumn) {
  const ConstraintMatrix m = reduced_matrix(kPair2);
  EXPECT_EQ(m.columns, (std::vector<VarSet>{V({1, 2})}));
  ASSERT_EQ(m.rows.size(), 1u);
  LinForm expect(2);
  expect.add(V({1, 2}), 1);
  EXPECT_EQ(m.rows[0].form, expect);
}

TEST(ReducedMatrix, EquivalentToFullOnRandomSystems) {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 2 + trial % 3;
    const FdSystem phi = testing::random_fd_system(rng, n, 4);
    const ConstraintMatrix expanded = expand_reduced(reduced_matrix(phi), phi);
    EXPECT_TRUE(cone_equivalence(full_matrix(phi), expanded).equivalent);
  }
}

TEST(AtomEqualityMatrix, MatchesFdSystem) {
  EXPECT_TRUE(cone_equivalence(full_matrix(kRunning), atom_equality_matrix(kRunning))
                  .equivalent);
  EXPECT_EQ(atom_equality_matrix(kRunning).rows.size(), 9u + 1u);
}

// Mutual informations with matching closures of C, A u C and B u C agree on
// the whole constrained region.
TEST(ClosureInvariance, MatchingClosuresGiveEqualMeasures) {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + trial % 2;
    const FdSystem phi = testing::random_fd_system(rng, n, 4);
    std::vector<EntropyVector> points;
    for (int k = 0; k < 4; ++k) points.push_back(testing::random_constrained_point(rng, phi));

    std::map<std::tuple<VarSet, VarSet, VarSet>, std::vector<Rational>> seen;
    int total = 1;
    for (int i = 0; i < n; ++i) total *= 4;
    for (int code = 0; code < total; ++code) {
      VarSet a, b, c;
      for (int v = 0, rest = code; v < n; ++v, rest /= 4) {
        if (rest % 4 == 1) a = a.with(v);
        if (rest % 4 == 2) b = b.with(v);
        if (rest % 4 == 3) c = c.with(v);
      }
      if (a.empty() || b.empty()) continue;
      const LinForm f = mutual_info_form(a, b, c, n);
      std::vector<Rational> values;
      for (const EntropyVector& h : points) values.push_back(f.evaluate(h));
      const auto key =
          std::make_tuple(closure(c, phi), closure(a | c, phi), closure(b | c, phi));
      auto [it, inserted] = seen.emplace(key, values);
      if (!inserted) ASSERT_EQ(it->second, values);
    }
  }
}

TEST(ChainRule, DecompositionsAreExactIdentities) {
  std::mt19937 rng(59);
  std::uniform_int_distribution<int> part(0, 4);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 4 + trial % 3;
    VarSet a, b, c, d;
    for (int v = 0; v < n; ++v) {
      switch (part(rng)) {
        case 0: a = a.with(v); break;
        case 1: b = b.with(v); break;
        case 2: c = c.with(v); break;
        case 3: d = d.with(v); break;
        default: break;
      }
    }
    if (a.empty() || b.empty()) continue;
    // H(A|C) = H(A|B,C) + I(A;B|C).
    EXPECT_EQ(cond_entropy_form(a, c, n),
              cond_entropy_form(a, b | c, n) + mutual_info_form(a, b, c, n));
    if (d.empty()) continue;
    // I(A;B|C) = I(D;B|C) + I(A;B|C,D) - H(D|A,C) + H(D|A,B,C). The last two
    // vanish when D is determined by A u C.
    EXPECT_EQ(mutual_info_form(a, b, c, n),
              mutual_info_form(d, b, c, n) + mutual_info_form(a, b, c | d, n) -
                  cond_entropy_form(d, a | c, n) + cond_entropy_form(d, a | b | c, n));
  }
}

TEST(ExpandReduced, AddsIdentificationRows) {
  const ConstraintMatrix expanded = expand_reduced(reduced_matrix(kRunning), kRunning);
  EXPECT_EQ(expanded.columns.size(), 7u);
  ASSERT_EQ(expanded.rows.size(), 9u);
  EXPECT_EQ(expanded.rows.back().relation, Relation::kZero);
  EXPECT_EQ(expanded.rows.back().provenance, "identify {1,2} with {1,2,3}");
  EXPECT_THROW(expand_reduced(reduced_matrix(kEmpty3), FdSystem{2, {}}), Error);
}

}  // namespace
}  // namespace shannonfd
