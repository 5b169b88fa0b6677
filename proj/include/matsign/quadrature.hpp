#pragma once

#include <cstddef>
#include <vector>

namespace matsign {

struct GridPoint {
    int k;
    double t;       // phi(k h)
    double weight;  // phi'(k h)
};

// Symmetric double-exponential grid: k in [-N, N], h = log(8 d N)/N.
// Points whose t leaves [1e-150, 1e150] are dropped (their contribution is
// below the roundoff floor and t^2 would overflow) and counted.
struct QuadratureGrid {
    double h = 0.0;
    int n_neg = 0;  // N^-  (<= 0)
    int n_pos = 0;  // N^+  (>= 0)
    double d_const = 1.0;
    std::vector<GridPoint> points;  // kept points, ascending k
    std::size_t dropped_points = 0;
};

double de_phi(double x);        // exp((pi/2) sinh x)
double de_phi_prime(double x);  // (pi/2) exp((pi/2) sinh x) cosh x

QuadratureGrid build_grid(std::size_t n_points, double d_const = 1.0);

}  // namespace matsign
