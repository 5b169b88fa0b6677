#include "matsign/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "matsign/text_format.hpp"

namespace matsign {

namespace {

constexpr double kUnitRoundoff = 0x1p-53;

double abs2(ComplexEigenvalue l) { return l.re * l.re + l.im * l.im; }

// |t^2 + lambda^2| for real t
double shifted_square_abs(double t, ComplexEigenvalue l) {
    const double re = t * t + l.re * l.re - l.im * l.im;
    const double im = 2.0 * l.re * l.im;
    return std::hypot(re, im);
}

void require_off_axis(std::span<const ComplexEigenvalue> lambdas) {
    for (const auto& l : lambdas)
        if (l.re == 0.0)
            throw std::domain_error("eigenvalue on the imaginary axis (Re = 0)");
}

}  // namespace

double gamma_factor(std::size_t m) {
    const double mu = static_cast<double>(m) * kUnitRoundoff;
    if (mu >= 1.0) throw std::domain_error("gamma_factor: m u >= 1");
    return mu / (1.0 - mu);
}

double c_coefficient(std::size_t n, double kappa2_x, double rho_hat) {
    if (n < 1) throw std::invalid_argument("c_coefficient: n must be >= 1");
    if (!(kappa2_x >= 1.0)) throw std::invalid_argument("c_coefficient: kappa2_x < 1");
    if (!(rho_hat >= 1.0)) throw std::invalid_argument("c_coefficient: rho_hat < 1");
    const double k2 = kappa2_x * kappa2_x;
    const double k3 = k2 * kappa2_x;
    const double nd = static_cast<double>(n);
    return gamma_factor(n) * k2 * k2 +
           3.0 * nd * nd * gamma_factor(3 * n) * rho_hat * k3;
}

double e1_bound(std::size_t n, double kappa2_x, double rho_hat,
                std::span<const ComplexEigenvalue> lambdas) {
    require_off_axis(lambdas);
    double frob2 = 0.0, inv_sum = 0.0;
    for (const auto& l : lambdas) {
        const double a2 = abs2(l);
        frob2 += a2;
        inv_sum += 1.0 / (a2 * std::fabs(l.re));
    }
    const double lambda_frob = std::sqrt(frob2);
    const double spectral = lambda_frob * lambda_frob * lambda_frob * inv_sum;
    return c_coefficient(n, kappa2_x, rho_hat) *
           (4.0 * std::numbers::sqrt2 / std::numbers::pi + spectral);
}

double e2_bound(std::size_t n, double kappa2_x, std::size_t m_points,
                std::span<const ComplexEigenvalue> lambdas) {
    require_off_axis(lambdas);
    if (m_points < 1) throw std::invalid_argument("e2_bound: m_points must be >= 1");
    double log_sum = 0.0;
    for (const auto& l : lambdas)
        log_sum += std::log(std::fabs(l.re) / std::sqrt(abs2(l)));
    const double brace = static_cast<double>(n) - 2.0 / std::numbers::pi * log_sum;
    return gamma_factor(m_points) * kappa2_x * brace;
}

double lemma1_integral(ComplexEigenvalue lambda) {
    if (lambda.re == 0.0)
        throw std::domain_error("lemma1_integral: Re(lambda) must be nonzero");
    return std::numbers::pi / (2.0 * abs2(lambda) * std::fabs(lambda.re));
}

double lemma2_integral(double a, double c) {
    if (!(a > 0.0)) throw std::domain_error("lemma2_integral: a must be > 0");
    if (!(std::fabs(c) <= a * a))
        throw std::domain_error("lemma2_integral: |c| must be <= a^2");
    const double k = std::sqrt(a * a - c) / (a * std::numbers::sqrt2);
    return elliptic_k(k) / a;
}

double elliptic_k(double k) {
    if (!(std::fabs(k) < 1.0))
        throw std::domain_error("elliptic_k: |k| must be < 1");
    double a = 1.0;
    double b = std::sqrt((1.0 - k) * (1.0 + k));  // sqrt(1 - k^2) without cancellation
    // quadratic convergence: |a - b| <= 4 u a ends this in <= 8 rounds for
    // |k| <= 0.9999
    while (std::fabs(a - b) > 4.0 * kUnitRoundoff * a) {
        const double am = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = am;
    }
    return std::numbers::pi / (a + b);  // pi / (2 agm)
}

double lemma3_k_bound(double k) {
    if (!(std::fabs(k) < 1.0))
        throw std::domain_error("lemma3_k_bound: |k| must be < 1");
    return std::numbers::pi / 2.0 *
           (1.0 - std::log((1.0 - k) * (1.0 + k)) / std::numbers::pi);
}

BoundReport bound_report(const EigenModel& model, double rho_hat,
                         std::size_t m_points) {
    const std::size_t n = model.lambda.size();
    std::vector<ComplexEigenvalue> lambdas(n);
    for (std::size_t i = 0; i < n; ++i) lambdas[i] = {model.lambda[i], 0.0};
    require_off_axis(lambdas);

    BoundReport r;
    r.rho_hat = rho_hat;
    r.m_points = m_points;
    r.gamma_n = gamma_factor(n);
    r.gamma_3n = gamma_factor(3 * n);
    r.gamma_m = gamma_factor(m_points);
    r.c_nxl = c_coefficient(n, model.kappa2_x, rho_hat);

    double frob2 = 0.0, inv_sum = 0.0, log_sum = 0.0, min_abs = std::numeric_limits<double>::infinity();
    for (const auto& l : lambdas) {
        const double a2 = abs2(l);
        frob2 += a2;
        inv_sum += 1.0 / (a2 * std::fabs(l.re));
        log_sum += std::log(std::fabs(l.re) / std::sqrt(a2));
        min_abs = std::min(min_abs, std::sqrt(a2));
    }
    r.lambda_frob = std::sqrt(frob2);
    r.spectral_sum_e1 = r.lambda_frob * r.lambda_frob * r.lambda_frob * inv_sum;
    r.spectral_sum_e2 = static_cast<double>(n) - 2.0 / std::numbers::pi * log_sum;

    r.e1_bound = e1_bound(n, model.kappa2_x, rho_hat, lambdas);
    r.e2_bound = e2_bound(n, model.kappa2_x, m_points, lambdas);
    r.total_bound = r.e1_bound + r.e2_bound;

    // Worst-case proxy for ||B^{-1}||_2 ||dB_j||_2 <= 1/2, evaluated at
    // t = min |lambda_j| where the resolvent is largest.
    const double t = min_abs;
    double b_inv_norm = 0.0, b_norm = 0.0;
    for (const auto& l : lambdas) {
        const double m_abs = shifted_square_abs(t, l);
        b_inv_norm = std::max(b_inv_norm, 1.0 / m_abs);
        b_norm = std::max(b_norm, m_abs);
    }
    const double kappa = model.kappa2_x;
    const double nd = static_cast<double>(n);
    const double delta = r.gamma_n * frob2 * kappa * kappa +
                         nd * nd * r.gamma_3n * rho_hat * kappa * b_norm;
    r.assumption_ok = 2.0 * b_inv_norm * delta <= 1.0;
    return r;
}

std::string bound_report_key_values(const BoundReport& r) {
    std::ostringstream out;
    out << "e1_bound=" << format_g17(r.e1_bound) << '\n'
        << "e2_bound=" << format_g17(r.e2_bound) << '\n'
        << "total_bound=" << format_g17(r.total_bound) << '\n'
        << "c_nxl=" << format_g17(r.c_nxl) << '\n'
        << "gamma_n=" << format_g17(r.gamma_n) << '\n'
        << "gamma_3n=" << format_g17(r.gamma_3n) << '\n'
        << "gamma_M=" << format_g17(r.gamma_m) << '\n'
        << "rho_hat=" << format_g17(r.rho_hat) << '\n'
        << "m_points=" << r.m_points << '\n'
        << "lambda_frob=" << format_g17(r.lambda_frob) << '\n'
        << "spectral_sum_e1=" << format_g17(r.spectral_sum_e1) << '\n'
        << "spectral_sum_e2=" << format_g17(r.spectral_sum_e2) << '\n'
        << "assumption_ok=" << (r.assumption_ok ? 1 : 0) << '\n';
    return out.str();
}

std::string bound_report_csv_header() {
    return "e1_bound,e2_bound,total_bound,c_nxl,gamma_n,gamma_3n,gamma_M,"
           "rho_hat,m_points,lambda_frob,spectral_sum_e1,spectral_sum_e2,"
           "assumption_ok";
}

std::string bound_report_csv_row(const BoundReport& r) {
    std::ostringstream out;
    out << format_g17(r.e1_bound) << ',' << format_g17(r.e2_bound) << ','
        << format_g17(r.total_bound) << ',' << format_g17(r.c_nxl) << ','
        << format_g17(r.gamma_n) << ',' << format_g17(r.gamma_3n) << ','
        << format_g17(r.gamma_m) << ',' << format_g17(r.rho_hat) << ','
        << r.m_points << ',' << format_g17(r.lambda_frob) << ','
        << format_g17(r.spectral_sum_e1) << ',' << format_g17(r.spectral_sum_e2)
        << ',' << (r.assumption_ok ? 1 : 0);
    return out.str();
}

}  // namespace matsign
