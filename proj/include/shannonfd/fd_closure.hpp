#ifndef SHANNONFD_FD_CLOSURE_HPP
#define SHANNONFD_FD_CLOSURE_HPP

#include <vector>

#include "shannonfd/varset.hpp"

namespace shannonfd {

/// The constraint H(target | source) = 0: the source variables determine the
/// target variables. An empty source declares the target constant.
struct FunctionalDependency {
  VarSet target;
  VarSet source;

  friend bool operator==(const FunctionalDependency&,
                         const FunctionalDependency&) = default;
};

struct FdSystem {
  int n = 0;
  std::vector<FunctionalDependency> deps;

  friend bool operator==(const FdSystem&, const FdSystem&) = default;
};

// Removes source variables from each target, drops dependencies whose target
// becomes empty and removes duplicates (first occurrence kept). Throws
// kOutOfRange if a set leaves the ground set.
FdSystem normalize(const FdSystem& raw);

// Least fixed point D ⊇ c of: source ⊆ D implies target ⊆ D.
VarSet closure(VarSet c, const FdSystem& phi);

// closure(c) == c.
bool is_close(VarSet c, const FdSystem& phi);

// An atom [alpha] is forced to zero exactly when alpha is not close.
bool is_vanishing_atom(VarSet alpha, const FdSystem& phi);

// a ~_c b: each of a, b lies in the closure of the other together with c.
// Reflexive by convention. Requires c close and a, b outside c.
bool equivalent(int a, int b, VarSet c, const FdSystem& phi);

// a is c-minimal when every b outside c implied by {a} u c implies a back.
bool is_c_minimal(int a, VarSet c, const FdSystem& phi);

// The c-minimal variables partitioned into ~_c classes, sorted by their
// smallest member.
std::vector<VarSet> minimal_classes(VarSet c, const FdSystem& phi);

// Every closed subset (empty set and ground set included) in ascending
// bitmask order.
std::vector<VarSet> enumerate_closed_sets(const FdSystem& phi,
                                          int cap = kDefaultEnumerationCap);

}  // namespace shannonfd

#endif  // SHANNONFD_FD_CLOSURE_HPP
