#pragma once

#include <cstddef>
#include <filesystem>
#include <utility>
#include <vector>

#include "matsign/dense_matrix.hpp"
#include "matsign/lu.hpp"
#include "matsign/quadrature.hpp"

namespace matsign {

struct PointDiagnostics {
    int k;
    double t;
    double weight;
    double growth_factor;
    double norm_y;  // two-norm estimate of Y(t)
};

struct SignResult {
    DenseMatrix sign_matrix;
    QuadratureGrid grid;
    std::vector<PointDiagnostics> per_point;  // ascending k, kept points only
    // ||S^2 - I||_F: recorded as the quality metric, never asserted here.
    double residual_involution = 0.0;
};

// Y(t) = (t^2 I + A^2)^{-1} A. The factorization is returned for growth
// factor diagnostics. a_squared is computed once by the caller and shared.
std::pair<DenseMatrix, LUFactorization> resolvent_solve(const DenseMatrix& a,
                                                        const DenseMatrix& a_squared,
                                                        double t);

// S = (2/pi) h sum_k Y(phi(kh)) phi'(kh). Per-point solves run on `threads`
// workers (0 = hardware concurrency); the weighted accumulation is always
// sequential in ascending k, so output bits are independent of thread count.
// A singular resolvent at any point aborts with the offending (k, t).
SignResult sign_de(const DenseMatrix& a, const QuadratureGrid& grid,
                   unsigned threads = 0);

// Independent cross-check: X_{j+1} = (X_j + X_j^{-1})/2 from X_0 = A until
// ||X_{j+1} - X_j||_F <= tol ||X_{j+1}||_F.
DenseMatrix sign_newton(const DenseMatrix& a, double tol = 1e-13,
                        std::size_t max_iter = 100);

// CSV columns: k, t, weight, growth_factor, norm_Y.
void write_diagnostics_csv(const std::filesystem::path& path, const SignResult& result);

}  // namespace matsign
