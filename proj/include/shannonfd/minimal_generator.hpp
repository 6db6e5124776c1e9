#ifndef SHANNONFD_MINIMAL_GENERATOR_HPP
#define SHANNONFD_MINIMAL_GENERATOR_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shannonfd/constraint_matrix.hpp"
#include "shannonfd/entropy_lattice.hpp"
#include "shannonfd/fd_closure.hpp"

namespace shannonfd {

// Type 1 inequalities are I(A;B|C) >= 0, Type 2 are H(A|C) >= 0.
enum class InequalityKind { kConditionalEntropy, kMutualInformation };

// Identity of an inequality up to the equivalence ~_C. For Type 2, second is
// -1.
struct CanonicalKey {
  InequalityKind kind;
  VarSet condition;
  int first;
  int second;

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

/// An elemental-style inequality over single variables A, B and a
/// conditioning set C. Equality and ordering go through the canonical key,
/// which depends on the FD system the inequality was keyed against (the
/// factories key against the empty system).
class Inequality {
 public:
  static Inequality mutual_information(int a, int b, VarSet c);
  static Inequality conditional_entropy(int a, VarSet c);

  InequalityKind kind() const { return kind_; }
  int a() const { return a_; }
  std::optional<int> b() const;
  VarSet c() const { return c_; }
  const CanonicalKey& key() const { return key_; }

  // Re-keyed under phi: the conditioning set is replaced by its closure and
  // each variable by the smallest member of its ~ class.
  Inequality canonicalized(const FdSystem& phi) const;

  LinForm form(int n) const;

  // Human syntax such as "I(A;B|C)" or "H(A|B,C)", with 1-based numbers
  // when names is empty.
  std::string measure_string(const std::vector<std::string>& names = {}) const;
  // measure_string() followed by " >= 0".
  std::string to_string(const std::vector<std::string>& names = {}) const;

  friend bool operator==(const Inequality& x, const Inequality& y) {
    return x.key_ == y.key_;
  }
  friend auto operator<=>(const Inequality& x, const Inequality& y) {
    return x.key_ <=> y.key_;
  }

 private:
  Inequality(InequalityKind kind, int a, int b, VarSet c);

  InequalityKind kind_;
  int a_;
  int b_;
  VarSet c_;
  CanonicalKey key_;
};

// m = n + C(n,2) 2^(n-2).
std::uint64_t count_elemental(int n);

// H(A | V \ A) for every A, then I(A;B|C) for every unordered pair and every
// C avoiding both; sorted by canonical key.
std::vector<Inequality> enumerate_elemental(int n,
                                            int cap = kDefaultEnumerationCap);

// The minimal set of Type 1 and Type 2 inequalities under phi, sorted by
// canonical key. phi must be normalized.
std::vector<Inequality> generate_minimal(const FdSystem& phi,
                                         int cap = kDefaultEnumerationCap);

// Atom vectors whose induced h violates target with value -1 while keeping
// every other generated inequality and every FD. Throw kInvalidArgument when
// target is not a generated inequality of the right type.
AtomVector witness_type1(const Inequality& target, const FdSystem& phi);
AtomVector witness_type2(const Inequality& target, const FdSystem& phi);

// All elemental rows (>= 0) over the 2^n - 1 coordinates plus one row
// H(X|Y) = 0 per dependency.
// Row provenance uses `names` when given.
ConstraintMatrix full_matrix(const FdSystem& phi,
                             int cap = kDefaultEnumerationCap,
                             const std::vector<std::string>& names = {});

// Column identification used by the reduced matrix: every subset maps to its
// closure, except that subsets whose closure equals cl(empty) map to the zero
// coordinate (returned as nullopt).
std::optional<VarSet> reduced_column(VarSet s, const FdSystem& phi);

// Rewrites a form over full coordinates in reduced columns.
LinForm reduce_form(const LinForm& form, const FdSystem& phi);

// The minimal inequalities over the closed-set columns.
ConstraintMatrix reduced_matrix(const FdSystem& phi,
                                int cap = kDefaultEnumerationCap,
                                const std::vector<std::string>& names = {});

// Embeds a reduced system back into full coordinates: the reduced rows are
// kept as they are and the identification h(s) = h(cl(s)) (or h(s) = 0) is
// added as equality rows for every other subset.
ConstraintMatrix expand_reduced(const ConstraintMatrix& reduced,
                                const FdSystem& phi,
                                const std::vector<std::string>& names = {});

// Same rows as full_matrix, but the FD equalities are replaced by
// T(alpha) = 0 for every vanishing atom.
ConstraintMatrix atom_equality_matrix(const FdSystem& phi,
                                      int cap = kDefaultEnumerationCap);

}  // namespace shannonfd

#endif  // SHANNONFD_MINIMAL_GENERATOR_HPP
