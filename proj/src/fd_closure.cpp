#include "shannonfd/fd_closure.hpp"

#include <algorithm>
#include <string>

#include "shannonfd/error.hpp"

namespace shannonfd {

namespace {

void check_variable(int v, int n) {
  if (v < 0 || v >= n) {
    throw Error(ErrorKind::kOutOfRange,
                "variable " + std::to_string(v) + " outside the ground set");
  }
}

void require_close(VarSet c, const FdSystem& phi) {
  if (!is_close(c, phi)) {
    throw Error(ErrorKind::kNotClose, "conditioning set is not closed");
  }
}

void require_outside(int v, VarSet c) {
  if (c.contains(v)) {
    throw Error(ErrorKind::kInvalidArgument,
                "variable " + std::to_string(v) + " lies in the conditioning set");
  }
}

}  // namespace

FdSystem normalize(const FdSystem& raw) {
  check_ground_size(raw.n);
  FdSystem out{raw.n, {}};
  for (const FunctionalDependency& dep : raw.deps) {
    check_within(dep.target | dep.source, raw.n);
    const FunctionalDependency fixed{dep.target - dep.source, dep.source};
    if (fixed.target.empty()) continue;
    if (std::find(out.deps.begin(), out.deps.end(), fixed) != out.deps.end()) {
      continue;
    }
    out.deps.push_back(fixed);
  }
  return out;
}

VarSet closure(VarSet c, const FdSystem& phi) {
  check_within(c, phi.n);
  VarSet d = c;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const FunctionalDependency& dep : phi.deps) {
      if (dep.source.is_subset_of(d) && !dep.target.is_subset_of(d)) {
        d = d | dep.target;
        changed = true;
      }
    }
  }
  return d;
}

bool is_close(VarSet c, const FdSystem& phi) { return closure(c, phi) == c; }

bool is_vanishing_atom(VarSet alpha, const FdSystem& phi) {
  check_within(alpha, phi.n);
  if (alpha == VarSet::full(phi.n)) {
    throw Error(ErrorKind::kInvalidArgument,
                "the full ground set is not an atom label");
  }
  return !is_close(alpha, phi);
}

bool equivalent(int a, int b, VarSet c, const FdSystem& phi) {
  check_variable(a, phi.n);
  check_variable(b, phi.n);
  require_close(c, phi);
  require_outside(a, c);
  require_outside(b, c);
  if (a == b) return true;
  return closure(c.with(a), phi).contains(b) &&
         closure(c.with(b), phi).contains(a);
}

bool is_c_minimal(int a, VarSet c, const FdSystem& phi) {
  check_variable(a, phi.n);
  require_close(c, phi);
  require_outside(a, c);
  const VarSet implied = closure(c.with(a), phi) - c;
  for (int b : implied.members()) {
    if (!closure(c.with(b), phi).contains(a)) return false;
  }
  return true;
}

std::vector<VarSet> minimal_classes(VarSet c, const FdSystem& phi) {
  require_close(c, phi);
  std::vector<VarSet> classes;
  VarSet assigned;
  for (int a : (VarSet::full(phi.n) - c).members()) {
    if (assigned.contains(a) || !is_c_minimal(a, c, phi)) continue;
    // For c-minimal a, its class is the set of b with cl(bc) = cl(ac).
    const VarSet reach = closure(c.with(a), phi);
    VarSet cls;
    for (int b : (reach - c).members()) {
      if (closure(c.with(b), phi) == reach) cls = cls.with(b);
    }
    assigned = assigned | cls;
    classes.push_back(cls);
  }
  // Members are visited in ascending order, so classes already sort by their
  // smallest member.
  return classes;
}

std::vector<VarSet> enumerate_closed_sets(const FdSystem& phi, int cap) {
  check_enumeration_cap(phi.n, cap);
  std::vector<VarSet> closed;
  const std::uint32_t full = VarSet::full(phi.n).bits();
  for (std::uint32_t bits = 0;; ++bits) {
    if (is_close(VarSet(bits), phi)) closed.emplace_back(bits);
    if (bits == full) break;
  }
  return closed;
}

}  // namespace shannonfd
