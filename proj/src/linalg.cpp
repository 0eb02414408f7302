#include "icherednik/linalg.hpp"

namespace icherednik {

namespace {

// a - f * b, both sorted
SparseRow axpy(const SparseRow& a, const Scalar& f, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -(f * b[j].second));
      ++j;
    } else {
      Scalar v = a[i].second - f * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseRow RowEchelon::reduce(SparseRow row) const {
  // Eliminate pivots in increasing column order; the lead only moves right.
  std::size_t scanned = 0;
  while (scanned < row.size()) {
    auto it = pivots_.find(row[scanned].first);
    if (it == pivots_.end()) {
      ++scanned;
      continue;
    }
    Scalar f = row[scanned].second;
    row = axpy(row, f, it->second);
  }
  return row;
}

bool RowEchelon::insert(SparseRow row) {
  // only the leading entry needs to miss every pivot
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) break;
    Scalar f = row.front().second;
    row = axpy(row, f, it->second);
  }
  if (row.empty()) return false;
  Scalar inv = row.front().second.inverse();
  for (auto& [c, v] : row) v *= inv;
  int lead = row.front().first;
  pivots_.emplace(lead, std::move(row));
  return true;
}

std::optional<std::vector<Scalar>> solve_linear(const std::vector<SparseRow>& rows, const std::vector<Scalar>& rhs,
                                                int ncols, Field field) {
  if (rows.size() != rhs.size()) throw std::invalid_argument("solve_linear: rhs length mismatch");
  RowEchelon ech(field);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    SparseRow aug = rows[r];
    if (!rhs[r].is_zero()) aug.emplace_back(ncols, rhs[r]);
    for (std::size_t a = 1; a < aug.size(); ++a)
      if (aug[a - 1].first >= aug[a].first) throw std::invalid_argument("solve_linear: row not sorted");
    ech.insert(std::move(aug));
  }
  if (ech.pivots().count(ncols)) return std::nullopt;

  std::vector<Scalar> x(ncols, field.zero());
  for (auto it = ech.pivots().rbegin(); it != ech.pivots().rend(); ++it) {
    const auto& [pivot, row] = *it;
    Scalar value = field.zero();
    for (std::size_t a = 1; a < row.size(); ++a) {
      const auto& [c, v] = row[a];
      if (c == ncols) value += v;
      else value -= v * x[c];
    }
    x[pivot] = value;
  }
  return x;
}

int matrix_rank(const std::vector<SparseRow>& rows, Field field) {
  RowEchelon ech(field);
  for (const auto& r : rows) ech.insert(r);
  return ech.rank();
}

}  // namespace icherednik
