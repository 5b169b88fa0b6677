#include "matsign/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace matsign {

namespace {
constexpr double kTMax = 1e150;
constexpr double kTMin = 1e-150;
}  // namespace

double de_phi(double x) {
    return std::exp(std::numbers::pi / 2.0 * std::sinh(x));
}

double de_phi_prime(double x) {
    return std::numbers::pi / 2.0 * std::exp(std::numbers::pi / 2.0 * std::sinh(x)) *
           std::cosh(x);
}

QuadratureGrid build_grid(std::size_t n_points, double d_const) {
    if (n_points < 1) throw std::invalid_argument("build_grid: n_points must be >= 1");
    if (!(d_const > 0.0)) throw std::invalid_argument("build_grid: d_const must be > 0");
    const int n = static_cast<int>(n_points);
    const double h = std::log(8.0 * d_const * static_cast<double>(n)) / n;
    if (!(h > 0.0))
        throw std::invalid_argument("build_grid: step rule gives h <= 0 (d too small)");

    QuadratureGrid grid;
    grid.h = h;
    grid.n_neg = -n;
    grid.n_pos = n;
    grid.d_const = d_const;
    grid.points.reserve(2 * n_points + 1);
    for (int k = -n; k <= n; ++k) {
        const double x = k * h;
        const double t = de_phi(x);
        if (!(t >= kTMin) || !(t <= kTMax)) {
            ++grid.dropped_points;
            continue;
        }
        grid.points.push_back({k, t, de_phi_prime(x)});
    }
    return grid;
}

}  // namespace matsign
