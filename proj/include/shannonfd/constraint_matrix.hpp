#ifndef SHANNONFD_CONSTRAINT_MATRIX_HPP
#define SHANNONFD_CONSTRAINT_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "shannonfd/entropy_lattice.hpp"

namespace shannonfd {

enum class Relation { kNonNegative, kZero };

struct ConstraintRow {
  LinForm form;
  Relation relation = Relation::kNonNegative;
  // Where the row came from, e.g. "I(1;2|3)" or "FD 2" (1-based labels).
  std::string provenance;
};

/// A homogeneous linear system over entropy coordinates: every row reads
/// form(h) >= 0 or form(h) = 0. Column labels are in ascending bitmask order
/// and contain the support of every row.
struct ConstraintMatrix {
  int n = 0;
  std::vector<VarSet> columns;
  std::vector<ConstraintRow> rows;

  std::size_t entry_count() const { return rows.size() * columns.size(); }
};

}  // namespace shannonfd

#endif  // SHANNONFD_CONSTRAINT_MATRIX_HPP
