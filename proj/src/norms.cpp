#include "matsign/norms.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace matsign {

namespace {

double vec_norm(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

}  // namespace

TwoNormEstimate two_norm_estimate(const DenseMatrix& m, double tol,
                                  std::size_t max_iter) {
    if (m.rows() == 0 || m.cols() == 0)
        throw std::invalid_argument("two_norm_estimate: empty matrix");
    const std::size_t rows = m.rows(), cols = m.cols();

    // Fixed start with a mild index-dependent ramp so it is never orthogonal
    // to the dominant singular vector by symmetry.
    std::vector<double> v(cols);
    for (std::size_t j = 0; j < cols; ++j)
        v[j] = 1.0 + 0.5 * static_cast<double>(j % 7) / 7.0;
    double nv = vec_norm(v);
    for (double& x : v) x /= nv;

    std::vector<double> u(rows), w(cols);
    double sigma = 0.0, prev = -1.0;
    TwoNormEstimate est;
    for (std::size_t it = 1; it <= max_iter; ++it) {
        // u = m v
        for (std::size_t i = 0; i < rows; ++i) {
            const double* ri = m.row_ptr(i);
            double s = 0.0;
            for (std::size_t j = 0; j < cols; ++j) s += ri[j] * v[j];
            u[i] = s;
        }
        sigma = vec_norm(u);
        est.iterations = it;
        if (sigma == 0.0) {  // v in the null space; estimate 0 is a valid lower bound
            est.value = 0.0;
            est.converged = true;
            return est;
        }
        if (prev >= 0.0 && std::fabs(sigma - prev) < tol * sigma) {
            est.value = sigma;
            est.converged = true;
            return est;
        }
        prev = sigma;
        // w = m^T u, traversed row-major
        std::fill(w.begin(), w.end(), 0.0);
        for (std::size_t i = 0; i < rows; ++i) {
            const double* ri = m.row_ptr(i);
            const double ui = u[i];
            for (std::size_t j = 0; j < cols; ++j) w[j] += ri[j] * ui;
        }
        const double nw = vec_norm(w);
        if (nw == 0.0) {
            est.value = sigma;
            est.converged = true;
            return est;
        }
        for (std::size_t j = 0; j < cols; ++j) v[j] = w[j] / nw;
    }
    est.value = sigma;
    est.converged = false;
    return est;
}

}  // namespace matsign
