#pragma once

#include <cstddef>

#include "matsign/dense_matrix.hpp"

namespace matsign {

struct TwoNormEstimate {
    double value = 0.0;     // sigma_hat <= ||m||_2
    bool converged = false;
    std::size_t iterations = 0;
};

// Power iteration on m^T m with a fixed deterministic start vector. The
// estimate is ||m v||_2 for a unit v, so it never exceeds the true 2-norm.
// On non-convergence the best estimate is returned with converged = false.
TwoNormEstimate two_norm_estimate(const DenseMatrix& m, double tol = 1e-10,
                                  std::size_t max_iter = 200);

}  // namespace matsign
