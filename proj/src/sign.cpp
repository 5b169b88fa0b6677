#include "matsign/sign.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <string>

#include "matsign/errors.hpp"
#include "matsign/norms.hpp"
#include "matsign/parallel.hpp"
#include "matsign/text_format.hpp"

namespace matsign {

std::pair<DenseMatrix, LUFactorization> resolvent_solve(const DenseMatrix& a,
                                                        const DenseMatrix& a_squared,
                                                        double t) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("resolvent_solve: matrix must be square");
    if (!a.same_shape(a_squared))
        throw std::invalid_argument("resolvent_solve: a_squared shape mismatch");
    const std::size_t n = a.rows();

    DenseMatrix b = a_squared;
    const double t2 = t * t;
    for (std::size_t i = 0; i < n; ++i) b(i, i) += t2;

    LUFactorization f = lu_factor(b);
    DenseMatrix y = lu_solve(f, a);
    return {std::move(y), std::move(f)};
}

SignResult sign_de(const DenseMatrix& a, const QuadratureGrid& grid, unsigned threads) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("sign_de: matrix must be square");
    const std::size_t n = a.rows();
    const std::size_t n_points = grid.points.size();

    const DenseMatrix a_squared = matmul(a, a);

    SignResult result;
    result.grid = grid;
    result.per_point.resize(n_points);

    DenseMatrix sum(n, n);
    const unsigned workers = resolve_thread_count(threads);

    // Solves run chunk by chunk so at most `workers` Y matrices are alive;
    // after each chunk the weighted terms are folded in ascending k.
    std::vector<DenseMatrix> slots(std::min<std::size_t>(workers, std::max<std::size_t>(n_points, 1)));
    for (std::size_t chunk = 0; chunk < n_points; chunk += slots.size()) {
        const std::size_t len = std::min(slots.size(), n_points - chunk);
        parallel_for_slots(len, workers, [&](std::size_t s) {
            const GridPoint& gp = grid.points[chunk + s];
            std::pair<DenseMatrix, LUFactorization> solved;
            try {
                solved = resolvent_solve(a, a_squared, gp.t);
            } catch (const SingularMatrixError& e) {
                throw SingularMatrixError(
                    "sign_de: singular resolvent at k=" + std::to_string(gp.k) +
                        ", t=" + format_g17(gp.t) + " (" + e.what() + ")",
                    gp.k, gp.t);
            }
            const TwoNormEstimate ny = two_norm_estimate(solved.first, 1e-4, 60);
            result.per_point[chunk + s] = {gp.k, gp.t, gp.weight,
                                           solved.second.growth_factor, ny.value};
            slots[s] = std::move(solved.first);
        });
        for (std::size_t s = 0; s < len; ++s) {
            const double w = grid.points[chunk + s].weight;
            const DenseMatrix& y = slots[s];
            auto se = sum.entries();
            auto ye = y.entries();
            for (std::size_t i = 0; i < se.size(); ++i) se[i] += ye[i] * w;
        }
    }

    result.sign_matrix = scale(sum, 2.0 / std::numbers::pi * grid.h);

    const DenseMatrix s2 = matmul(result.sign_matrix, result.sign_matrix);
    result.residual_involution = frobenius_norm(subtract(s2, DenseMatrix::identity(n)));
    return result;
}

DenseMatrix sign_newton(const DenseMatrix& a, double tol, std::size_t max_iter) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("sign_newton: matrix must be square");
    const std::size_t n = a.rows();
    const DenseMatrix eye = DenseMatrix::identity(n);

    DenseMatrix x = a;
    for (std::size_t it = 0; it < max_iter; ++it) {
        const LUFactorization f = lu_factor(x);
        const DenseMatrix x_inv = lu_solve(f, eye);
        const DenseMatrix x_next = scale(add(x, x_inv), 0.5);
        const double delta = frobenius_norm(subtract(x_next, x));
        x = x_next;
        if (delta <= tol * frobenius_norm(x)) return x;
    }
    throw NonConvergenceError("sign_newton: no convergence in " +
                              std::to_string(max_iter) + " iterations");
}

void write_diagnostics_csv(const std::filesystem::path& path, const SignResult& result) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << "k,t,weight,growth_factor,norm_Y\n";
    for (const PointDiagnostics& p : result.per_point) {
        out << p.k << ',' << format_g17(p.t) << ',' << format_g17(p.weight) << ','
            << format_g17(p.growth_factor) << ',' << format_g17(p.norm_y) << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace matsign
