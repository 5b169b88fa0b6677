#include "matsign/lu.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "matsign/errors.hpp"

namespace matsign {

LUFactorization lu_factor(const DenseMatrix& b) {
    if (b.rows() != b.cols())
        throw std::invalid_argument("lu_factor: matrix must be square");
    const std::size_t n = b.rows();
    if (n == 0) throw std::invalid_argument("lu_factor: empty matrix");

    DenseMatrix a = b;  // working array, multipliers stored below the diagonal
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);

    const double max0 = max_abs(a);
    double max_seen = max0;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        double best = std::fabs(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::fabs(a(i, k));
            if (v > best) {
                best = v;
                p = i;
            }
        }
        if (best == 0.0)
            throw SingularMatrixError("lu_factor: zero pivot column at step " +
                                      std::to_string(k));
        if (p != k) {
            std::swap_ranges(a.row_ptr(k), a.row_ptr(k) + n, a.row_ptr(p));
            std::swap(perm[k], perm[p]);
        }
        const double pivot = a(k, k);
        const double* rk = a.row_ptr(k);
        for (std::size_t i = k + 1; i < n; ++i) {
            double* ri = a.row_ptr(i);
            const double mult = ri[k] / pivot;
            ri[k] = mult;
            for (std::size_t j = k + 1; j < n; ++j) ri[j] -= mult * rk[j];
            // second pass over the freshly updated row keeps the update loop
            // vectorizable while still seeing every Schur-complement entry
            double mx = max_seen;
            for (std::size_t j = k + 1; j < n; ++j) mx = std::max(mx, std::fabs(ri[j]));
            max_seen = mx;
        }
    }

    LUFactorization f;
    f.perm = std::move(perm);
    f.lower = DenseMatrix::identity(n);
    f.upper = DenseMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) f.lower(i, j) = a(i, j);
        for (std::size_t j = i; j < n; ++j) f.upper(i, j) = a(i, j);
    }
    f.max_abs_initial = max0;
    f.growth_factor = max0 > 0.0 ? max_seen / max0 : 1.0;
    return f;
}

DenseMatrix lu_solve(const LUFactorization& f, const DenseMatrix& rhs) {
    const std::size_t n = f.n();
    if (rhs.rows() != n)
        throw std::invalid_argument("lu_solve: rhs row count mismatch");
    const std::size_t m = rhs.cols();

    DenseMatrix z(n, m);
    for (std::size_t i = 0; i < n; ++i) {
        const double* src = rhs.row_ptr(f.perm[i]);
        double* dst = z.row_ptr(i);
        for (std::size_t j = 0; j < m; ++j) dst[j] = src[j];
    }

    // L z' = z, unit diagonal. Row updates apply k in ascending order, so
    // each entry accumulates exactly as in column-at-a-time substitution.
    for (std::size_t i = 1; i < n; ++i) {
        double* zi = z.row_ptr(i);
        const double* li = f.lower.row_ptr(i);
        for (std::size_t k = 0; k < i; ++k) {
            const double lik = li[k];
            const double* zk = z.row_ptr(k);
            for (std::size_t j = 0; j < m; ++j) zi[j] -= lik * zk[j];
        }
    }

    // U x = z'
    for (std::size_t ii = n; ii-- > 0;) {
        double* zi = z.row_ptr(ii);
        const double* ui = f.upper.row_ptr(ii);
        for (std::size_t k = ii + 1; k < n; ++k) {
            const double uik = ui[k];
            const double* zk = z.row_ptr(k);
            for (std::size_t j = 0; j < m; ++j) zi[j] -= uik * zk[j];
        }
        const double d = ui[ii];
        if (d == 0.0)
            throw SingularMatrixError("lu_solve: zero diagonal in U at row " +
                                      std::to_string(ii));
        for (std::size_t j = 0; j < m; ++j) zi[j] /= d;
    }
    return z;
}

}  // namespace matsign
