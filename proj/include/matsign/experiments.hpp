#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "matsign/matgen.hpp"
#include "matsign/quadrature.hpp"

namespace matsign {

struct ExperimentRecord {
    std::size_t n = 0;
    double kappa2_x = 1.0;
    double kappa2_lambda = 1.0;
    std::uint64_t seed = 0;
    std::size_t n_points = 0;           // quadrature N
    double measured_error_frob = 0.0;   // ||sign_de(A) - reference||_F
    double e1_bound = 0.0;
    double e2_bound = 0.0;
    double rho_hat = 1.0;               // max growth factor across the run
    double wall_time_ms = 0.0;
    bool assumption_ok = false;
    bool ok = true;                     // false: failure recorded, sweep continued
    std::string failure;
};

struct RegressionResult {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    std::size_t n_samples = 0;
};

struct SweepConfig {
    std::size_t n = 100;
    std::size_t trials_per_point = 3;
    std::size_t n_points = 100;  // quadrature N; keeps discretization below
                                 // the roundoff floor for |lambda| <= ~100
    double d_const = 1.0;
    unsigned threads = 0;
    std::uint64_t seed = 1;
    double fixed_kappa_x = 100.0;       // used by the kappa-lambda sweep
    double fixed_kappa_lambda = 100.0;  // used by the kappa-x sweep
    bool include_timing = true;  // false writes 0.0 wall times: byte-stable CSVs
};

// Per-record seeds follow the documented counter scheme seed + record_index,
// with component streams derived via mix_seed. Failed records are kept in the
// output with ok = false; the sweep continues.
std::vector<ExperimentRecord> run_sweep_kappa_x(const SweepConfig& cfg,
                                                std::span<const double> kappa_grid);
std::vector<ExperimentRecord> run_sweep_kappa_lambda(const SweepConfig& cfg,
                                                     std::span<const double> kappa_grid);
std::vector<ExperimentRecord> run_sweep_n(const SweepConfig& cfg,
                                          std::span<const std::size_t> n_grid);

// OLS fit of log10(y) on log10(x); requires >= 2 positive points with at
// least two distinct x values.
RegressionResult loglog_regress(std::span<const double> xs, std::span<const double> ys);

double measure_error(const DenseMatrix& a, const EigenModel& model,
                     const QuadratureGrid& grid, unsigned threads = 0);

enum class SweepAxis { kappa_x, kappa_lambda, size_n };

// Median measured error per distinct grid value among ok records, then a
// log-log fit. Also exposed for plot-data output.
std::vector<std::pair<double, double>> median_curve(
    std::span<const ExperimentRecord> records, SweepAxis axis);
RegressionResult regress_records(std::span<const ExperimentRecord> records,
                                 SweepAxis axis);

// ok records with assumption_ok whose measured error exceeds e1 + e2.
std::size_t count_bound_violations(std::span<const ExperimentRecord> records);

// CSV columns: n, kappa2_x, kappa2_lambda, seed, n_points,
// measured_error_frob, e1_bound, e2_bound, rho_hat, wall_time_ms.
void write_records_csv(const std::filesystem::path& path,
                       std::span<const ExperimentRecord> records);
void write_summary(const std::filesystem::path& path, const std::string& sweep_name,
                   std::span<const ExperimentRecord> records, SweepAxis axis);
void write_plot_data(const std::filesystem::path& path,
                     std::span<const ExperimentRecord> records, SweepAxis axis);

}  // namespace matsign
