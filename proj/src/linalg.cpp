#include "qwitt/matrix.hpp"

namespace qwitt {

namespace {

// In-place reduced row echelon form; returns the pivot column of each row kept.
std::vector<std::size_t> rref(std::vector<std::vector<Scalar>>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Scalar inv = rows[r][c].inverse();
    for (auto& v : rows[r])
      if (!v.is_zero()) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Scalar f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace

std::vector<std::vector<Scalar>> nullspace(const ScalarMatrix& m) {
  std::vector<std::vector<Scalar>> rows(m.rows(), std::vector<Scalar>(m.cols(), m.zero()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  const std::vector<std::size_t> pivots = rref(rows, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols(), m.zero());
    v[free] = Scalar::from_int(m.zero().field(), 1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<Scalar>> row_basis(std::vector<std::vector<Scalar>> rows, const Scalar& zero) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  for (auto& r : rows) r.resize(cols, zero);
  rref(rows, cols);
  return rows;
}

}  // namespace qwitt
