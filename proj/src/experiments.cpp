#include "matsign/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <stdexcept>

#include "matsign/bounds.hpp"
#include "matsign/sign.hpp"
#include "matsign/text_format.hpp"

namespace matsign {

namespace {

constexpr std::uint64_t kSaltQ = 0x51;
constexpr std::uint64_t kSaltD = 0xD1;
constexpr std::uint64_t kSaltLambda = 0x1A;

EigenModel model_from_parts(std::size_t n, double kappa_x,
                            std::vector<double> lambda, double kappa_lambda,
                            std::uint64_t seed) {
    const DenseMatrix q = random_orthogonal(n, mix_seed(seed, kSaltQ));
    const std::vector<double> d =
        conditioned_diagonal(n, kappa_x, false, mix_seed(seed, kSaltD));
    std::vector<double> d_inv(n);
    for (std::size_t i = 0; i < n; ++i) d_inv[i] = 1.0 / d[i];
    const DenseMatrix qt = transpose(q);

    EigenModel model;
    model.x = matmul(scale_columns(q, d), qt);
    model.x_inv = matmul(scale_columns(q, d_inv), qt);
    model.lambda = std::move(lambda);
    model.kappa2_x = kappa_x;
    model.kappa2_lambda = kappa_lambda;
    model.seed = seed;
    return model;
}

ExperimentRecord run_record(const EigenModel& model, const QuadratureGrid& grid,
                            const SweepConfig& cfg) {
    ExperimentRecord rec;
    rec.n = model.lambda.size();
    rec.kappa2_x = model.kappa2_x;
    rec.kappa2_lambda = model.kappa2_lambda;
    rec.seed = model.seed;
    rec.n_points = cfg.n_points;
    try {
        const DenseMatrix a = assemble(model);
        const DenseMatrix ref = reference_sign(model);

        const auto t0 = std::chrono::steady_clock::now();
        const SignResult sr = sign_de(a, grid, cfg.threads);
        const auto t1 = std::chrono::steady_clock::now();

        rec.measured_error_frob = frobenius_norm(subtract(sr.sign_matrix, ref));
        double rho = 1.0;
        for (const auto& p : sr.per_point) rho = std::max(rho, p.growth_factor);
        rec.rho_hat = rho;

        const std::size_t m_points =
            static_cast<std::size_t>(grid.n_pos - grid.n_neg);
        const BoundReport rep = bound_report(model, rho, m_points);
        rec.e1_bound = rep.e1_bound;
        rec.e2_bound = rep.e2_bound;
        rec.assumption_ok = rep.assumption_ok;

        if (cfg.include_timing)
            rec.wall_time_ms =
                std::chrono::duration<double, std::milli>(t1 - t0).count();
    } catch (const std::exception& e) {
        rec.ok = false;
        rec.failure = e.what();
    }
    return rec;
}

double axis_value(const ExperimentRecord& rec, SweepAxis axis) {
    switch (axis) {
        case SweepAxis::kappa_x: return rec.kappa2_x;
        case SweepAxis::kappa_lambda: return rec.kappa2_lambda;
        case SweepAxis::size_n: return static_cast<double>(rec.n);
    }
    return 0.0;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size();
    return m % 2 == 1 ? v[m / 2] : 0.5 * (v[m / 2 - 1] + v[m / 2]);
}

}  // namespace

std::vector<ExperimentRecord> run_sweep_kappa_x(const SweepConfig& cfg,
                                                std::span<const double> kappa_grid) {
    if (kappa_grid.empty())
        throw std::invalid_argument("run_sweep_kappa_x: empty grid");
    if (!std::is_sorted(kappa_grid.begin(), kappa_grid.end()))
        throw std::invalid_argument("run_sweep_kappa_x: grid must be ascending");

    // Lambda is drawn once and held fixed across the whole sweep.
    const std::vector<double> lambda = conditioned_diagonal(
        cfg.n, cfg.fixed_kappa_lambda, true, mix_seed(cfg.seed, kSaltLambda));
    const QuadratureGrid grid = build_grid(cfg.n_points, cfg.d_const);

    std::vector<ExperimentRecord> records;
    std::uint64_t index = 0;
    for (const double kappa : kappa_grid) {
        for (std::size_t trial = 0; trial < cfg.trials_per_point; ++trial, ++index) {
            const std::uint64_t rseed = cfg.seed + index;
            const EigenModel model = model_from_parts(
                cfg.n, kappa, lambda, cfg.fixed_kappa_lambda, rseed);
            records.push_back(run_record(model, grid, cfg));
        }
    }
    return records;
}

std::vector<ExperimentRecord> run_sweep_kappa_lambda(const SweepConfig& cfg,
                                                     std::span<const double> kappa_grid) {
    if (kappa_grid.empty())
        throw std::invalid_argument("run_sweep_kappa_lambda: empty grid");
    if (!std::is_sorted(kappa_grid.begin(), kappa_grid.end()))
        throw std::invalid_argument("run_sweep_kappa_lambda: grid must be ascending");

    // X is drawn once and held fixed; only the spectrum varies.
    const DenseMatrix q = random_orthogonal(cfg.n, mix_seed(cfg.seed, kSaltQ));
    const std::vector<double> d =
        conditioned_diagonal(cfg.n, cfg.fixed_kappa_x, false, mix_seed(cfg.seed, kSaltD));
    std::vector<double> d_inv(cfg.n);
    for (std::size_t i = 0; i < cfg.n; ++i) d_inv[i] = 1.0 / d[i];
    const DenseMatrix qt = transpose(q);
    const DenseMatrix x = matmul(scale_columns(q, d), qt);
    const DenseMatrix x_inv = matmul(scale_columns(q, d_inv), qt);

    const QuadratureGrid grid = build_grid(cfg.n_points, cfg.d_const);

    std::vector<ExperimentRecord> records;
    std::uint64_t index = 0;
    for (const double kappa : kappa_grid) {
        for (std::size_t trial = 0; trial < cfg.trials_per_point; ++trial, ++index) {
            const std::uint64_t rseed = cfg.seed + index;
            EigenModel model;
            model.x = x;
            model.x_inv = x_inv;
            model.lambda =
                conditioned_diagonal(cfg.n, kappa, true, mix_seed(rseed, kSaltLambda));
            model.kappa2_x = cfg.fixed_kappa_x;
            model.kappa2_lambda = kappa;
            model.seed = rseed;
            records.push_back(run_record(model, grid, cfg));
        }
    }
    return records;
}

std::vector<ExperimentRecord> run_sweep_n(const SweepConfig& cfg,
                                          std::span<const std::size_t> n_grid) {
    if (n_grid.empty()) throw std::invalid_argument("run_sweep_n: empty grid");
    for (const std::size_t n : n_grid)
        if (n < 2) throw std::invalid_argument("run_sweep_n: sizes must be >= 2");

    const QuadratureGrid grid = build_grid(cfg.n_points, cfg.d_const);

    std::vector<ExperimentRecord> records;
    std::uint64_t index = 0;
    for (const std::size_t n : n_grid) {
        for (std::size_t trial = 0; trial < cfg.trials_per_point; ++trial, ++index) {
            const std::uint64_t rseed = cfg.seed + index;
            const std::vector<double> lambda = conditioned_diagonal(
                n, cfg.fixed_kappa_lambda, true, mix_seed(rseed, kSaltLambda));
            const EigenModel model = model_from_parts(
                n, cfg.fixed_kappa_x, lambda, cfg.fixed_kappa_lambda, rseed);
            records.push_back(run_record(model, grid, cfg));
        }
    }
    return records;
}

RegressionResult loglog_regress(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size())
        throw std::invalid_argument("loglog_regress: length mismatch");
    if (xs.size() < 2) throw std::invalid_argument("loglog_regress: need >= 2 points");
    const std::size_t m = xs.size();

    std::vector<double> lx(m), ly(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (!(xs[i] > 0.0) || !(ys[i] > 0.0))
            throw std::domain_error("loglog_regress: data must be positive");
        lx[i] = std::log10(xs[i]);
        ly[i] = std::log10(ys[i]);
    }
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= static_cast<double>(m);
    my /= static_cast<double>(m);

    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    if (sxx == 0.0)
        throw std::domain_error("loglog_regress: degenerate (all x equal)");

    RegressionResult r;
    r.slope = sxy / sxx;
    r.intercept = my - r.slope * mx;
    r.n_samples = m;

    double ss_res = 0.0, ss_tot = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double fit = r.intercept + r.slope * lx[i];
        ss_res += (ly[i] - fit) * (ly[i] - fit);
        ss_tot += (ly[i] - my) * (ly[i] - my);
    }
    r.r_squared = ss_tot == 0.0 ? 1.0 : std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0);
    return r;
}

double measure_error(const DenseMatrix& a, const EigenModel& model,
                     const QuadratureGrid& grid, unsigned threads) {
    const SignResult sr = sign_de(a, grid, threads);
    return frobenius_norm(subtract(sr.sign_matrix, reference_sign(model)));
}

std::vector<std::pair<double, double>> median_curve(
    std::span<const ExperimentRecord> records, SweepAxis axis) {
    std::map<double, std::vector<double>> groups;
    for (const auto& rec : records)
        if (rec.ok) groups[axis_value(rec, axis)].push_back(rec.measured_error_frob);
    std::vector<std::pair<double, double>> curve;
    curve.reserve(groups.size());
    for (auto& [x, errs] : groups) curve.emplace_back(x, median(std::move(errs)));
    return curve;
}

RegressionResult regress_records(std::span<const ExperimentRecord> records,
                                 SweepAxis axis) {
    const auto curve = median_curve(records, axis);
    std::vector<double> xs, ys;
    xs.reserve(curve.size());
    ys.reserve(curve.size());
    for (const auto& [x, y] : curve) {
        xs.push_back(x);
        ys.push_back(y);
    }
    return loglog_regress(xs, ys);
}

std::size_t count_bound_violations(std::span<const ExperimentRecord> records) {
    std::size_t violations = 0;
    for (const auto& rec : records)
        if (rec.ok && rec.assumption_ok &&
            rec.measured_error_frob > rec.e1_bound + rec.e2_bound)
            ++violations;
    return violations;
}

void write_records_csv(const std::filesystem::path& path,
                       std::span<const ExperimentRecord> records) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << "n,kappa2_x,kappa2_lambda,seed,n_points,measured_error_frob,"
           "e1_bound,e2_bound,rho_hat,wall_time_ms\n";
    for (const auto& rec : records) {
        out << rec.n << ',' << format_g17(rec.kappa2_x) << ','
            << format_g17(rec.kappa2_lambda) << ',' << rec.seed << ','
            << rec.n_points << ',' << format_g17(rec.measured_error_frob) << ','
            << format_g17(rec.e1_bound) << ',' << format_g17(rec.e2_bound) << ','
            << format_g17(rec.rho_hat) << ',' << format_fixed(rec.wall_time_ms, 3)
            << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

void write_summary(const std::filesystem::path& path, const std::string& sweep_name,
                   std::span<const ExperimentRecord> records, SweepAxis axis) {
    std::size_t failed = 0;
    for (const auto& rec : records)
        if (!rec.ok) ++failed;
    const std::size_t violations = count_bound_violations(records);

    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << "sweep=" << sweep_name << '\n'
        << "records=" << records.size() << '\n'
        << "failed_records=" << failed << '\n'
        << "bound_violations=" << violations << '\n';
    try {
        const RegressionResult fit = regress_records(records, axis);
        out << "slope=" << format_g17(fit.slope) << '\n'
            << "intercept=" << format_g17(fit.intercept) << '\n'
            << "r_squared=" << format_g17(fit.r_squared) << '\n'
            << "fit_points=" << fit.n_samples << '\n';
    } catch (const std::exception& e) {
        out << "slope=nan\nfit_error=" << e.what() << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

void write_plot_data(const std::filesystem::path& path,
                     std::span<const ExperimentRecord> records, SweepAxis axis) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << "# x median_error_frob\n";
    for (const auto& [x, y] : median_curve(records, axis))
        out << format_g17(x) << ' ' << format_g17(y) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace matsign
