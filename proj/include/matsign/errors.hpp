#pragma once

#include <stdexcept>
#include <string>

namespace matsign {

// Exact zero pivot during elimination, or a singular resolvent/iterate.
// When raised inside a quadrature sweep the offending grid point (k, t)
// is attached.
class SingularMatrixError : public std::runtime_error {
public:
    explicit SingularMatrixError(const std::string& what)
        : std::runtime_error(what) {}
    SingularMatrixError(const std::string& what, int grid_k, double grid_t)
        : std::runtime_error(what), grid_k_(grid_k), grid_t_(grid_t), has_point_(true) {}

    bool has_grid_point() const { return has_point_; }
    int grid_k() const { return grid_k_; }
    double grid_t() const { return grid_t_; }

private:
    int grid_k_ = 0;
    double grid_t_ = 0.0;
    bool has_point_ = false;
};

class NonConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace matsign
