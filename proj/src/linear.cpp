#include "bethe/linear.hpp"

#include <utility>

#include "bethe/errors.hpp"

namespace bethe {

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

EchelonForm rref(Matrix m, std::size_t columns) {
  for (auto& row : m) {
    if (row.size() != columns) throw DimensionError("rref: row length mismatch");
  }
  EchelonForm out;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < columns && lead_row < m.size(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < m.size() && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[lead_row]);
    Rational inv = 1 / m[lead_row][col];
    for (std::size_t c = col; c < columns; ++c) m[lead_row][c] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == lead_row || sgn(m[r][col]) == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = col; c < columns; ++c) {
        if (sgn(m[lead_row][c]) != 0) m[r][c] -= f * m[lead_row][c];
      }
    }
    out.pivots.push_back(col);
    ++lead_row;
  }
  m.resize(lead_row);
  out.rows = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m, std::size_t columns) { return rref(m, columns).pivots.size(); }

Matrix nullspace(const Matrix& m, std::size_t columns) {
  EchelonForm e = rref(m, columns);
  std::vector<int> pivot_row(columns, -1);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) pivot_row[e.pivots[r]] = static_cast<int>(r);
  Matrix basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (pivot_row[free] >= 0) continue;
    Vector v(columns);
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix left_nullspace(const Matrix& m, std::size_t columns) {
  Matrix transposed(columns, Vector(m.size()));
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < columns; ++c) transposed[c][r] = m[r][c];
  }
  return nullspace(transposed, m.size());
}

bool solve_in_rowspace(const Matrix& basis, const Vector& target, std::size_t columns, Vector& y) {
  // Augment transposed system basis^T y^T = target^T.
  const std::size_t k = basis.size();
  Matrix system(columns, Vector(k + 1));
  for (std::size_t c = 0; c < columns; ++c) {
    for (std::size_t r = 0; r < k; ++r) system[c][r] = basis[r][c];
    system[c][k] = target[c];
  }
  EchelonForm e = rref(std::move(system), k + 1);
  y.assign(k, 0);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == k) return false;
    y[e.pivots[r]] = e.rows[r][k];
  }
  return true;
}

Matrix invert(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return {};
  Matrix aug(n, Vector(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    if (m[r].size() != n) throw DimensionError("invert: matrix not square");
    for (std::size_t c = 0; c < n; ++c) aug[r][c] = m[r][c];
    aug[r][n + r] = 1;
  }
  EchelonForm e = rref(std::move(aug), 2 * n);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw ValidationError("matrix is singular");
  Matrix inv(n, Vector(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv[r][c] = e.rows[r][n + c];
  }
  return inv;
}

}  // namespace bethe
