#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "icherednik/scalar.hpp"

namespace icherednik {

/// Sparse row: (column, value) pairs sorted by column, no zero values.
using SparseRow = std::vector<std::pair<int, Scalar>>;

/// Incremental exact row echelon form. Rows are kept monic at their pivot.
class RowEchelon {
 public:
  explicit RowEchelon(Field field) : field_(field) {}

  /// Reduces `row` against the current pivots; stores it if something is left.
  /// Returns true iff the row was independent of the rows inserted so far.
  bool insert(SparseRow row);
  /// Reduced remainder of `row` (empty iff it lies in the row span).
  SparseRow reduce(SparseRow row) const;

  int rank() const { return static_cast<int>(pivots_.size()); }
  const std::map<int, SparseRow>& pivots() const { return pivots_; }

 private:
  Field field_;
  std::map<int, SparseRow> pivots_;  // pivot column -> monic row
};

/// Solves A x = rhs where A has `ncols` columns and is given by rows.
/// Returns nullopt if the system is inconsistent; free variables are set to 0.
std::optional<std::vector<Scalar>> solve_linear(const std::vector<SparseRow>& rows, const std::vector<Scalar>& rhs,
                                                int ncols, Field field);

int matrix_rank(const std::vector<SparseRow>& rows, Field field);

}  // namespace icherednik
