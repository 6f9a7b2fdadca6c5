#include "partcat/linalg.hpp"

namespace partcat::linalg {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> rref(RationalMatrix& m, size_t cols) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < m.size(); ++col) {
    size_t p = row;
    while (p < m.size() && sgn(m[p][col]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[row], m[p]);
    Rational inv = 1 / m[row][col];
    for (size_t j = col; j < cols; ++j) m[row][j] *= inv;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == row || sgn(m[i][col]) == 0) continue;
      Rational f = m[i][col];
      for (size_t j = col; j < cols; ++j)
        if (sgn(m[row][j]) != 0) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

size_t rank(RationalMatrix rows) {
  if (rows.empty()) return 0;
  return rref(rows, rows[0].size()).size();
}

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& a) {
  if (a.empty()) return {};
  size_t cols = a[0].size();
  RationalMatrix m = a;
  auto pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b) {
  size_t cols = a.empty() ? 0 : a[0].size();
  RationalMatrix m = a;
  for (size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
  auto pivots = rref(m, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  std::vector<Rational> x(cols, Rational(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][cols];
  return x;
}

void RowReducer::reduce(std::vector<Rational>& v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    size_t p = pivots_[r];
    if (sgn(v[p]) == 0) continue;
    Rational f = v[p];
    for (size_t j = p; j < dim_; ++j)
      if (sgn(rows_[r][j]) != 0) v[j] -= f * rows_[r][j];
  }
}

bool RowReducer::add(std::vector<Rational> v) {
  reduce(v);
  size_t p = 0;
  while (p < dim_ && sgn(v[p]) == 0) ++p;
  if (p == dim_) return false;
  Rational inv = 1 / v[p];
  for (size_t j = p; j < dim_; ++j) v[j] *= inv;
  // Keep earlier rows reduced against the new pivot.
  for (auto& row : rows_) {
    if (sgn(row[p]) == 0) continue;
    Rational f = row[p];
    for (size_t j = p; j < dim_; ++j)
      if (sgn(v[j]) != 0) row[j] -= f * v[j];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool RowReducer::contains(std::vector<Rational> v) const {
  reduce(v);
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

}  // namespace partcat::linalg
