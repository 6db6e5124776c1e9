#include "shannonfd/minimal_generator.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "shannonfd/error.hpp"

namespace shannonfd {

namespace {

// Smallest x outside c with cl(x u c) = cl(v u c); v itself when v is in c.
int class_representative(int v, VarSet c, const FdSystem& phi) {
  if (c.contains(v)) return v;
  const VarSet reach = closure(c.with(v), phi);
  for (int x : (reach - c).members()) {
    if (closure(c.with(x), phi) == reach) return x;
  }
  return v;
}

std::vector<VarSet> nonempty_subsets(int n) {
  std::vector<VarSet> out;
  const std::uint32_t full = VarSet::full(n).bits();
  out.reserve(full);
  for (std::uint32_t bits = 1; bits <= full; ++bits) out.emplace_back(bits);
  return out;
}

std::string braced(VarSet s, const std::vector<std::string>& names = {}) {
  return "{" + format_set(s, names) + "}";
}

Inequality find_generated(const Inequality& target, const FdSystem& phi,
                          InequalityKind kind) {
  if (target.kind() != kind) {
    throw Error(ErrorKind::kInvalidArgument,
                "witness requested for an inequality of the other type");
  }
  const Inequality canon = target.canonicalized(phi);
  const std::vector<Inequality> generated = generate_minimal(phi);
  auto it = std::lower_bound(generated.begin(), generated.end(), canon);
  if (it == generated.end() || !(*it == canon)) {
    throw Error(ErrorKind::kInvalidArgument,
                target.to_string() + " is not in the minimal set");
  }
  return *it;
}

// Shared shape of both witness constructions. `excluded` holds A (and B for
// Type 1); C is the target's conditioning set.
AtomVector build_witness(VarSet c, VarSet excluded, const FdSystem& phi) {
  const int n = phi.n;
  if (is_vanishing_atom(c, phi)) {
    throw std::logic_error("witness conditioning set is not close");
  }
  AtomVector t(n);
  const std::uint32_t full = VarSet::full(n).bits();
  for (std::uint32_t bits = 0; bits < full; ++bits) {
    const VarSet beta(bits);
    if (beta == c) {
      t.set(beta, -1);
    } else if (c.is_subset_of(beta) && !beta.intersects(excluded)) {
      t.set(beta, 0);
    } else if (is_vanishing_atom(beta, phi)) {
      t.set(beta, 0);
    } else {
      t.set(beta, 2);
    }
  }
  return t;
}

}  // namespace

Inequality::Inequality(InequalityKind kind, int a, int b, VarSet c)
    : kind_(kind), a_(a), b_(b), c_(c) {
  if (kind == InequalityKind::kMutualInformation) {
    key_ = {kind, c, std::min(a, b), std::max(a, b)};
  } else {
    key_ = {kind, c, a, -1};
  }
}

Inequality Inequality::mutual_information(int a, int b, VarSet c) {
  if (a < 0 || b < 0 || a >= kMaxVariables || b >= kMaxVariables) {
    throw Error(ErrorKind::kOutOfRange, "variable index out of range");
  }
  if (a == b) {
    throw Error(ErrorKind::kOverlap, "I(A;B|C) needs distinct A and B");
  }
  if (c.contains(a) || c.contains(b)) {
    throw Error(ErrorKind::kOverlap, "A and B must lie outside C");
  }
  return Inequality(InequalityKind::kMutualInformation, a, b, c);
}

Inequality Inequality::conditional_entropy(int a, VarSet c) {
  if (a < 0 || a >= kMaxVariables) {
    throw Error(ErrorKind::kOutOfRange, "variable index out of range");
  }
  if (c.contains(a)) {
    throw Error(ErrorKind::kOverlap, "A must lie outside C");
  }
  return Inequality(InequalityKind::kConditionalEntropy, a, -1, c);
}

std::optional<int> Inequality::b() const {
  if (kind_ == InequalityKind::kConditionalEntropy) return std::nullopt;
  return b_;
}

Inequality Inequality::canonicalized(const FdSystem& phi) const {
  Inequality out = *this;
  const VarSet closed = closure(c_, phi);
  const int ra = class_representative(a_, closed, phi);
  if (kind_ == InequalityKind::kMutualInformation) {
    const int rb = class_representative(b_, closed, phi);
    out.key_ = {kind_, closed, std::min(ra, rb), std::max(ra, rb)};
  } else {
    out.key_ = {kind_, closed, ra, -1};
  }
  return out;
}

LinForm Inequality::form(int n) const {
  if (kind_ == InequalityKind::kMutualInformation) {
    return mutual_info_form(VarSet::singleton(a_), VarSet::singleton(b_), c_, n);
  }
  return cond_entropy_form(VarSet::singleton(a_), c_, n);
}

std::string Inequality::measure_string(
    const std::vector<std::string>& names) const {
  const auto var = [&](int v) {
    return names.empty() ? std::to_string(v + 1) : names.at(v);
  };
  std::string out;
  if (kind_ == InequalityKind::kMutualInformation) {
    out = "I(" + var(a_) + ";" + var(b_);
  } else {
    out = "H(" + var(a_);
  }
  if (!c_.empty()) out += "|" + format_set(c_, names);
  return out + ")";
}

std::string Inequality::to_string(const std::vector<std::string>& names) const {
  return measure_string(names) + " >= 0";
}

std::uint64_t count_elemental(int n) {
  check_ground_size(n);
  const std::uint64_t nn = static_cast<std::uint64_t>(n);
  if (n == 1) return 1;
  return nn + nn * (nn - 1) / 2 * (std::uint64_t{1} << (n - 2));
}

std::vector<Inequality> enumerate_elemental(int n, int cap) {
  check_enumeration_cap(n, cap);
  const VarSet full = VarSet::full(n);
  std::vector<Inequality> out;
  out.reserve(count_elemental(n));
  for (int a = 0; a < n; ++a) {
    out.push_back(Inequality::conditional_entropy(a, full.without(a)));
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const std::uint32_t rest = (full.without(a).without(b)).bits();
      std::uint32_t sub = rest;
      while (true) {
        out.push_back(Inequality::mutual_information(a, b, VarSet(sub)));
        if (sub == 0) break;
        sub = (sub - 1) & rest;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Inequality> generate_minimal(const FdSystem& phi, int cap) {
  check_enumeration_cap(phi.n, cap);
  const VarSet full = VarSet::full(phi.n);
  std::vector<Inequality> out;
  for (VarSet c : enumerate_closed_sets(phi, cap)) {
    if (c == full) continue;
    const std::vector<VarSet> classes = minimal_classes(c, phi);
    if (classes.empty()) {
      throw std::logic_error("no c-minimal variable outside a proper closed set");
    }
    if (classes.size() == 1) {
      out.push_back(Inequality::conditional_entropy(classes[0].lowest(), c));
      continue;
    }
    for (std::size_t i = 0; i < classes.size(); ++i) {
      for (std::size_t j = i + 1; j < classes.size(); ++j) {
        out.push_back(Inequality::mutual_information(classes[i].lowest(),
                                                     classes[j].lowest(), c));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

AtomVector witness_type1(const Inequality& target, const FdSystem& phi) {
  const Inequality gen =
      find_generated(target, phi, InequalityKind::kMutualInformation);
  const VarSet excluded = VarSet::singleton(gen.a()).with(*gen.b());
  return build_witness(gen.c(), excluded, phi);
}

AtomVector witness_type2(const Inequality& target, const FdSystem& phi) {
  const Inequality gen =
      find_generated(target, phi, InequalityKind::kConditionalEntropy);
  return build_witness(gen.c(), VarSet::singleton(gen.a()), phi);
}

ConstraintMatrix full_matrix(const FdSystem& phi, int cap,
                             const std::vector<std::string>& names) {
  check_enumeration_cap(phi.n, cap);
  ConstraintMatrix m{phi.n, nonempty_subsets(phi.n), {}};
  for (const Inequality& ineq : enumerate_elemental(phi.n, cap)) {
    m.rows.push_back({ineq.form(phi.n), Relation::kNonNegative,
                      ineq.measure_string(names)});
  }
  for (std::size_t k = 0; k < phi.deps.size(); ++k) {
    const FunctionalDependency& dep = phi.deps[k];
    LinForm form(phi.n);
    form.add(dep.target | dep.source, 1);
    form.add(dep.source, -1);
    std::string label = "FD " + std::to_string(k + 1) + ": H(" +
                        format_set(dep.target, names);
    if (!dep.source.empty()) label += "|" + format_set(dep.source, names);
    m.rows.push_back({std::move(form), Relation::kZero, label + ")"});
  }
  return m;
}

std::optional<VarSet> reduced_column(VarSet s, const FdSystem& phi) {
  const VarSet cl = closure(s, phi);
  if (cl == closure(VarSet(), phi)) return std::nullopt;
  return cl;
}

LinForm reduce_form(const LinForm& form, const FdSystem& phi) {
  LinForm out(phi.n);
  for (const auto& [s, coeff] : form.terms()) {
    if (auto col = reduced_column(s, phi)) out.add(*col, coeff);
  }
  return out;
}

ConstraintMatrix reduced_matrix(const FdSystem& phi, int cap,
                                const std::vector<std::string>& names) {
  check_enumeration_cap(phi.n, cap);
  ConstraintMatrix m{phi.n, {}, {}};
  const VarSet zero_class = closure(VarSet(), phi);
  for (VarSet c : enumerate_closed_sets(phi, cap)) {
    if (c != zero_class) m.columns.push_back(c);
  }
  for (const Inequality& ineq : generate_minimal(phi, cap)) {
    LinForm form = reduce_form(ineq.form(phi.n), phi);
    if (form.is_zero()) {
      throw std::logic_error(ineq.to_string() + " vanishes in reduced columns");
    }
    const bool duplicate =
        std::any_of(m.rows.begin(), m.rows.end(),
                    [&form](const ConstraintRow& row) { return row.form == form; });
    if (duplicate) continue;
    m.rows.push_back({std::move(form), Relation::kNonNegative,
                      ineq.measure_string(names)});
  }
  return m;
}

ConstraintMatrix expand_reduced(const ConstraintMatrix& reduced,
                                const FdSystem& phi,
                                const std::vector<std::string>& names) {
  if (reduced.n != phi.n) {
    throw Error(ErrorKind::kLabelMismatch, "reduced system has a different n");
  }
  ConstraintMatrix m{phi.n, nonempty_subsets(phi.n), reduced.rows};
  for (VarSet s : m.columns) {
    const std::optional<VarSet> col = reduced_column(s, phi);
    if (col == s) continue;
    LinForm form(phi.n);
    form.add(s, 1);
    if (col) form.add(*col, -1);
    m.rows.push_back({std::move(form), Relation::kZero,
                      "identify " + braced(s, names) + " with " +
                          (col ? braced(*col, names) : std::string("0"))});
  }
  return m;
}

ConstraintMatrix atom_equality_matrix(const FdSystem& phi, int cap) {
  check_enumeration_cap(phi.n, cap);
  ConstraintMatrix m{phi.n, nonempty_subsets(phi.n), {}};
  for (const Inequality& ineq : enumerate_elemental(phi.n, cap)) {
    m.rows.push_back({ineq.form(phi.n), Relation::kNonNegative,
                      ineq.measure_string()});
  }
  const std::uint32_t full = VarSet::full(phi.n).bits();
  for (std::uint32_t bits = 0; bits < full; ++bits) {
    const VarSet alpha(bits);
    if (!is_vanishing_atom(alpha, phi)) continue;
    m.rows.push_back({atom_form(alpha, phi.n), Relation::kZero,
                      "T(" + braced(alpha) + ")"});
  }
  return m;
}

}  // namespace shannonfd
