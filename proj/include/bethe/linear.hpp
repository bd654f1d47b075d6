#pragma once

#include <cstddef>
#include <vector>

#include "bethe/rational.hpp"

namespace bethe {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;  // row-major, rows may be empty for 0 columns

struct EchelonForm {
  Matrix rows;                       // reduced row-echelon, nonzero rows only
  std::vector<std::size_t> pivots;   // pivot column of each row
};

/// Reduced row-echelon form over Q. `columns` fixes the width when `m` is empty.
EchelonForm rref(Matrix m, std::size_t columns);

std::size_t rank(const Matrix& m, std::size_t columns);

/// Basis of {x : m x = 0}, returned as rows.
Matrix nullspace(const Matrix& m, std::size_t columns);

/// Basis of {y : y m = 0} (left kernel), returned as rows of length m.size().
Matrix left_nullspace(const Matrix& m, std::size_t columns);

/// Solves y * basis = target for y; returns false when target is not in the row space.
bool solve_in_rowspace(const Matrix& basis, const Vector& target, std::size_t columns, Vector& y);

Matrix invert(const Matrix& m);

bool is_zero(const Vector& v);

}  // namespace bethe
