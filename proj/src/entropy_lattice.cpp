#include "shannonfd/entropy_lattice.hpp"

#include <string>
#include <utility>

#include "shannonfd/error.hpp"

namespace shannonfd {

namespace {

const Rational& zero() {
  static const Rational kZero = 0;
  return kZero;
}

std::size_t coordinate_count(int n) { return (std::size_t{1} << n) - 1; }

void check_coordinate_count(int n, std::size_t got) {
  if (got != coordinate_count(n)) {
    throw Error(ErrorKind::kInvalidArgument,
                "expected " + std::to_string(coordinate_count(n)) +
                    " coordinates, got " + std::to_string(got));
  }
}

// Superset-sum transform: g(s) <- sum_{u ⊇ s} g(u), over all 2^n masks.
void superset_zeta(std::vector<Rational>& g, int n) {
  const std::uint32_t size = 1u << n;
  for (int i = 0; i < n; ++i) {
    const std::uint32_t bit = 1u << i;
    for (std::uint32_t s = 0; s < size; ++s) {
      if ((s & bit) == 0) g[s] += g[s | bit];
    }
  }
}

void superset_mobius(std::vector<Rational>& g, int n) {
  const std::uint32_t size = 1u << n;
  for (int i = 0; i < n; ++i) {
    const std::uint32_t bit = 1u << i;
    for (std::uint32_t s = 0; s < size; ++s) {
      if ((s & bit) == 0) g[s] -= g[s | bit];
    }
  }
}

void require_nonempty(VarSet s, const char* what) {
  if (s.empty()) {
    throw Error(ErrorKind::kEmptySet, std::string(what) + " must be nonempty");
  }
}

void require_disjoint(VarSet a, VarSet b) {
  if (a.intersects(b)) {
    throw Error(ErrorKind::kOverlap, "argument sets must be disjoint");
  }
}

}  // namespace

EntropyVector::EntropyVector(int n) : n_(n) {
  check_ground_size(n);
  coords_.assign(coordinate_count(n), Rational(0));
}

EntropyVector::EntropyVector(int n, std::vector<Rational> coords)
    : n_(n), coords_(std::move(coords)) {
  check_ground_size(n);
  check_coordinate_count(n, coords_.size());
}

const Rational& EntropyVector::operator[](VarSet s) const {
  check_within(s, n_);
  if (s.empty()) return zero();
  return coords_[s.bits() - 1];
}

void EntropyVector::set(VarSet s, Rational value) {
  check_within(s, n_);
  if (s.empty()) {
    throw Error(ErrorKind::kEmptySet, "h of the empty set is fixed at zero");
  }
  coords_[s.bits() - 1] = std::move(value);
}

AtomVector::AtomVector(int n) : n_(n) {
  check_ground_size(n);
  coords_.assign(coordinate_count(n), Rational(0));
}

AtomVector::AtomVector(int n, std::vector<Rational> coords)
    : n_(n), coords_(std::move(coords)) {
  check_ground_size(n);
  check_coordinate_count(n, coords_.size());
}

const Rational& AtomVector::operator[](VarSet label) const {
  check_within(label, n_);
  if (label == VarSet::full(n_)) {
    throw Error(ErrorKind::kInvalidArgument,
                "the full ground set is not an atom label");
  }
  return coords_[label.bits()];
}

void AtomVector::set(VarSet label, Rational value) {
  check_within(label, n_);
  if (label == VarSet::full(n_)) {
    throw Error(ErrorKind::kInvalidArgument,
                "the full ground set is not an atom label");
  }
  coords_[label.bits()] = std::move(value);
}

Rational LinForm::coefficient(VarSet s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LinForm::add(VarSet s, const Rational& coeff) {
  if (s.empty() || coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(s, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

Rational LinForm::evaluate(const EntropyVector& h) const {
  return evaluate_with([&h](VarSet s) -> const Rational& { return h[s]; });
}

LinForm& LinForm::operator+=(const LinForm& other) {
  if (n_ == 0) n_ = other.n_;
  for (const auto& [s, coeff] : other.terms_) add(s, coeff);
  return *this;
}

LinForm& LinForm::operator-=(const LinForm& other) {
  if (n_ == 0) n_ = other.n_;
  for (const auto& [s, coeff] : other.terms_) add(s, -coeff);
  return *this;
}

LinForm& LinForm::operator*=(const Rational& scale) {
  if (scale == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, coeff] : terms_) coeff *= scale;
  return *this;
}

EntropyVector h_from_atoms(const AtomVector& t) {
  const int n = t.n();
  const std::uint32_t full = VarSet::full(n).bits();
  // g(s) = sum over labels alpha ⊇ s of t(alpha), with t(full) = 0.
  std::vector<Rational> g(t.coords());
  g.emplace_back(0);
  superset_zeta(g, n);
  const Rational total = g[0];
  std::vector<Rational> h(coordinate_count(n));
  for (std::uint32_t s = 1; s <= full; ++s) h[s - 1] = total - g[s];
  return EntropyVector(n, std::move(h));
}

AtomVector atoms_from_h(const EntropyVector& h) {
  const int n = h.n();
  const std::uint32_t full = VarSet::full(n).bits();
  const Rational& top = h.coords()[full - 1];
  std::vector<Rational> g(std::size_t{full} + 1);
  g[0] = top;
  for (std::uint32_t s = 1; s <= full; ++s) g[s] = top - h.coords()[s - 1];
  superset_mobius(g, n);
  g.pop_back();
  return AtomVector(n, std::move(g));
}

LinForm entropy_form(VarSet a, int n) {
  check_ground_size(n);
  check_within(a, n);
  LinForm form(n);
  form.add(a, 1);
  return form;
}

LinForm cond_entropy_form(VarSet a, VarSet c, int n) {
  check_ground_size(n);
  check_within(a | c, n);
  require_nonempty(a, "conditioned set");
  require_disjoint(a, c);
  LinForm form(n);
  form.add(a | c, 1);
  form.add(c, -1);
  return form;
}

LinForm mutual_info_form(VarSet a, VarSet b, VarSet c, int n) {
  check_ground_size(n);
  check_within(a | b | c, n);
  require_nonempty(a, "first argument");
  require_nonempty(b, "second argument");
  require_disjoint(a, b);
  require_disjoint(a, c);
  require_disjoint(b, c);
  LinForm form(n);
  form.add(a | c, 1);
  form.add(b | c, 1);
  form.add(a | b | c, -1);
  form.add(c, -1);
  return form;
}

LinForm atom_form(VarSet alpha, int n) {
  check_ground_size(n);
  check_within(alpha, n);
  const VarSet full = VarSet::full(n);
  if (alpha == full) {
    throw Error(ErrorKind::kInvalidArgument,
                "the full ground set is not an atom label");
  }
  LinForm form(n);
  const VarSet rest = full - alpha;
  // Walk every subset of the complement, including the empty one.
  std::uint32_t sub = rest.bits();
  while (true) {
    const VarSet extra(sub);
    form.add(alpha | extra, extra.size() % 2 == 0 ? -1 : 1);
    if (sub == 0) break;
    sub = (sub - 1) & rest.bits();
  }
  return form;
}

std::vector<VarSet> atom_support_of_form(MeasureKind kind, VarSet a, VarSet b,
                                         VarSet c, int n) {
  // The form constructors do the argument validation.
  if (kind == MeasureKind::kMutualInformation) {
    mutual_info_form(a, b, c, n);
  } else {
    cond_entropy_form(a, c, n);
  }
  std::vector<VarSet> support;
  const std::uint32_t full = VarSet::full(n).bits();
  // Atom alpha lies in the set of a exactly when some member of a is
  // missing from alpha. For single variables this is "a avoids alpha".
  for (std::uint32_t bits = 0; bits < full; ++bits) {
    const VarSet alpha(bits);
    if (!c.is_subset_of(alpha) || a.is_subset_of(alpha)) continue;
    if (kind == MeasureKind::kMutualInformation && b.is_subset_of(alpha)) continue;
    support.push_back(alpha);
  }
  return support;
}

}  // namespace shannonfd
