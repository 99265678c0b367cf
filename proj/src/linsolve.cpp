#include "qgauss/linsolve.hpp"

namespace qg {

std::optional<std::vector<Scalar>> solve_linear(std::vector<std::vector<Scalar>> A,
                                                std::vector<Scalar> b,
                                                const ScalarField& field) {
  const size_t rows = A.size();
  const size_t cols = rows ? A[0].size() : 0;
  std::vector<int> pivot_col_of_row;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && A[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(A[p], A[r]);
    std::swap(b[p], b[r]);
    Scalar inv = field.one() / A[r][c];
    for (size_t j = c; j < cols; ++j) A[r][j] = A[r][j] * inv;
    b[r] = b[r] * inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][c].is_zero()) continue;
      Scalar f = A[i][c];
      for (size_t j = c; j < cols; ++j) A[i][j] = A[i][j] - f * A[r][j];
      b[i] = b[i] - f * b[r];
    }
    pivot_col_of_row.push_back(static_cast<int>(c));
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (!b[i].is_zero()) return std::nullopt;
  std::vector<Scalar> x(cols, field.zero());
  for (size_t i = 0; i < pivot_col_of_row.size(); ++i)
    x[static_cast<size_t>(pivot_col_of_row[i])] = b[i];
  return x;
}

}  // namespace qg
