#ifndef SHANNONFD_ENTROPY_LATTICE_HPP
#define SHANNONFD_ENTROPY_LATTICE_HPP

#include <map>
#include <vector>

#include "shannonfd/rational.hpp"
#include "shannonfd/varset.hpp"

namespace shannonfd {

/// Joint-entropy function h on the nonempty subsets of an n-variable ground
/// set. Holds exactly 2^n - 1 coordinates in ascending bitmask order; h of the
/// empty set is identically zero and has no coordinate.
class EntropyVector {
 public:
  explicit EntropyVector(int n);
  // coords[i] is h of the subset with bitmask i + 1.
  EntropyVector(int n, std::vector<Rational> coords);

  int n() const { return n_; }
  const std::vector<Rational>& coords() const { return coords_; }

  // Reading the empty set yields zero.
  const Rational& operator[](VarSet s) const;
  void set(VarSet s, Rational value);

  friend bool operator==(const EntropyVector&, const EntropyVector&) = default;

 private:
  int n_;
  std::vector<Rational> coords_;
};

/// Signed measure T_h of the atoms of the I-measure. An atom is labelled by a
/// proper subset alpha of the ground set (the empty set included, the full set
/// excluded), so there are 2^n - 1 coordinates, indexed by bitmask.
class AtomVector {
 public:
  explicit AtomVector(int n);
  AtomVector(int n, std::vector<Rational> coords);

  int n() const { return n_; }
  const std::vector<Rational>& coords() const { return coords_; }

  const Rational& operator[](VarSet label) const;
  void set(VarSet label, Rational value);

  friend bool operator==(const AtomVector&, const AtomVector&) = default;

 private:
  int n_;
  std::vector<Rational> coords_;
};

/// Sparse linear functional over entropy coordinates. Terms with a zero
/// coefficient are never stored, and the empty set is never a key (h of the
/// empty set is zero, so such terms are dropped on insertion).
class LinForm {
 public:
  LinForm() = default;
  explicit LinForm(int n) : n_(n) {}

  int n() const { return n_; }
  const std::map<VarSet, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(VarSet s) const;
  void add(VarSet s, const Rational& coeff);

  Rational evaluate(const EntropyVector& h) const;

  // Evaluates against an arbitrary coordinate lookup.
  template <typename Lookup>
  Rational evaluate_with(Lookup&& value_of) const {
    Rational sum = 0;
    for (const auto& [s, coeff] : terms_) sum += coeff * value_of(s);
    return sum;
  }

  LinForm& operator+=(const LinForm& other);
  LinForm& operator-=(const LinForm& other);
  LinForm& operator*=(const Rational& scale);

  friend LinForm operator+(LinForm a, const LinForm& b) { return a += b; }
  friend LinForm operator-(LinForm a, const LinForm& b) { return a -= b; }
  friend LinForm operator-(LinForm a) { return a *= Rational(-1); }
  friend LinForm operator*(const Rational& k, LinForm a) { return a *= k; }

  friend bool operator==(const LinForm&, const LinForm&) = default;

 private:
  int n_ = 0;
  std::map<VarSet, Rational> terms_;
};

// h(beta) = sum of t(alpha) over atom labels alpha with beta \ alpha nonempty.
EntropyVector h_from_atoms(const AtomVector& t);

// Inverse of h_from_atoms (superset Mobius inversion).
AtomVector atoms_from_h(const EntropyVector& h);

// h(a).
LinForm entropy_form(VarSet a, int n);

// H(a|c) = h(a u c) - h(c). Requires a nonempty and disjoint from c.
LinForm cond_entropy_form(VarSet a, VarSet c, int n);

// I(a;b|c) = h(a u c) + h(b u c) - h(a u b u c) - h(c). Requires a, b
// nonempty and a, b, c pairwise disjoint.
LinForm mutual_info_form(VarSet a, VarSet b, VarSet c, int n);

// T_h(alpha) written as a form over entropy coordinates:
//   T_h(alpha) = -sum_{gamma ⊇ alpha} (-1)^{|gamma \ alpha|} h(gamma).
LinForm atom_form(VarSet alpha, int n);

enum class MeasureKind { kConditionalEntropy, kMutualInformation };

// Atom labels whose measures add up to the given Shannon measure. For the
// conditional entropy H(a|c), b is ignored. Labels are in ascending order.
std::vector<VarSet> atom_support_of_form(MeasureKind kind, VarSet a, VarSet b,
                                         VarSet c, int n);

}  // namespace shannonfd

#endif  // SHANNONFD_ENTROPY_LATTICE_HPP
