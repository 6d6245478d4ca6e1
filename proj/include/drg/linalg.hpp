#pragma once

// Small dense solvers used by several modules: symmetric tridiagonal
// eigenvalues (QL with implicit shifts), Householder reduction for full
// symmetric matrices, exact rational Gaussian elimination, and a pivoted
// double solve. Sizes here are tiny (diameter-plus-one systems) or modest
// (explicit-graph solves in the oracle), so dense algorithms are the right
// tool.

#include "drg/numbers.hpp"

#include <vector>

namespace drg::linalg {

// Eigenvalues of the symmetric tridiagonal matrix with the given diagonal
// (size n) and off-diagonal (size n-1), returned ascending.
std::vector<double> tridiag_eigenvalues(std::vector<double> diag, std::vector<double> off);

// Eigenvalues of a dense symmetric matrix, ascending.
std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a);

// Solves a * x = rhs exactly for every right-hand side column. Throws
// NumericalError when a is singular.
std::vector<std::vector<BigRational>> solve_rational(std::vector<std::vector<BigRational>> a,
                                                     std::vector<std::vector<BigRational>> rhs);

// Solves a * x = rhs in doubles with partial pivoting.
std::vector<double> solve_double(std::vector<std::vector<double>> a, std::vector<double> rhs);

} // namespace drg::linalg
