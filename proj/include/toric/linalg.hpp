#pragma once

#include <vector>

namespace toric {

using Int = long long;
using Matrix = std::vector<std::vector<Int>>;  // row-major

// Exact determinant by fraction-free (Bareiss) elimination.
Int det(Matrix m);

// Rank over the rationals, computed with integer row operations.
int rank(Matrix m);

// Solves a * x = rhs by Cramer's rule when |det a| = 1 (the lattice-basis
// case); returns false if a is singular. Asserts integrality of the solution.
bool solve_unimodular(const Matrix& a, const std::vector<Int>& rhs, std::vector<Int>& x);

// Signs of the Cramer determinants for a point against a square generator
// matrix (columns = generators): det_out = det(a), coord_dets[i] = det of a
// with column i replaced by p. Containment and boundary tests reduce to sign
// checks, so no division is ever needed.
void cramer_signs(const Matrix& columns, const std::vector<Int>& p, Int& det_out,
                  std::vector<Int>& coord_dets);

Matrix matrix_from_columns(const std::vector<std::vector<Int>>& cols);
std::vector<Int> matvec(const Matrix& m, const std::vector<Int>& v);
Int dot(const std::vector<Int>& a, const std::vector<Int>& b);

}  // namespace toric
