#pragma once

#include <cstddef>
#include <vector>

#include "matsign/dense_matrix.hpp"

namespace matsign {

// P B = L U from Gaussian elimination with partial pivoting.
//
// growth_factor is max_{i,j,k} |b~(k)_ij| / max_{i,j} |b~_ij|, where the
// numerator ranges over every intermediate Schur-complement entry produced
// during elimination, not just the final U.
struct LUFactorization {
    std::vector<std::size_t> perm;  // (P b)(i, j) == b(perm[i], j)
    DenseMatrix lower;              // unit diagonal, |l_ij| <= 1 below it
    DenseMatrix upper;
    double growth_factor = 1.0;
    double max_abs_initial = 0.0;

    std::size_t n() const { return perm.size(); }
};

// Throws SingularMatrixError when a pivot is exactly zero (matrix singular
// to working precision); tiny nonzero pivots proceed.
LUFactorization lu_factor(const DenseMatrix& b);

// Solves B x = rhs for each column of rhs by permuted forward/back
// substitution, accumulating each inner sum in ascending index order.
DenseMatrix lu_solve(const LUFactorization& f, const DenseMatrix& rhs);

}  // namespace matsign
