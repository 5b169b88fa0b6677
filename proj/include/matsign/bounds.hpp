#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "matsign/matgen.hpp"

namespace matsign {

struct ComplexEigenvalue {
    double re = 0.0;
    double im = 0.0;
};

// A priori roundoff bound for one DE sign computation. e1 covers the
// per-point resolvent solves, e2 the final weighted summation.
struct BoundReport {
    double e1_bound = 0.0;
    double e2_bound = 0.0;
    double total_bound = 0.0;  // e1 + e2
    double c_nxl = 0.0;        // gamma_n k^4 + 3 n^2 gamma_3n rho k^3
    double gamma_n = 0.0;
    double gamma_3n = 0.0;
    double gamma_m = 0.0;
    double rho_hat = 1.0;
    std::size_t m_points = 0;  // M = N^+ - N^-
    double lambda_frob = 0.0;
    double spectral_sum_e1 = 0.0;  // ||L||_F^3 sum_j 1/(|l_j|^2 |Re l_j|)
    double spectral_sum_e2 = 0.0;  // n - (2/pi) sum_j log(|Re l_j| / |l_j|)
    bool assumption_ok = false;    // ||B^{-1}|| ||dB|| <= 1/2 proxy holds
};

// gamma_m = m u / (1 - m u) with u = 2^-53; requires m u < 1.
double gamma_factor(std::size_t m);

// Overflow saturates to +inf (check with std::isinf) instead of throwing, so
// parameter sweeps never abort.
double c_coefficient(std::size_t n, double kappa2_x, double rho_hat);

double e1_bound(std::size_t n, double kappa2_x, double rho_hat,
                std::span<const ComplexEigenvalue> lambdas);
double e2_bound(std::size_t n, double kappa2_x, std::size_t m_points,
                std::span<const ComplexEigenvalue> lambdas);

// int_{-inf}^{inf} dt / |t^2 + lambda^2|^2 = pi / (2 |lambda|^2 |Re lambda|)
double lemma1_integral(ComplexEigenvalue lambda);

// int_0^inf dx / sqrt(x^4 + 2 c x^2 + a^4) = (1/a) K(sqrt(a^2 - c)/(a sqrt 2))
// for a > 0, |c| <= a^2.
double lemma2_integral(double a, double c);

// Complete elliptic integral of the first kind via the AGM iteration,
// K(k) = pi / (2 agm(1, sqrt(1 - k^2))), |k| < 1.
double elliptic_k(double k);

// Upper bound K(k) <= (pi/2) (1 - log(1 - k^2)/pi).
double lemma3_k_bound(double k);

BoundReport bound_report(const EigenModel& model, double rho_hat,
                         std::size_t m_points);

std::string bound_report_key_values(const BoundReport& r);
std::string bound_report_csv_header();
std::string bound_report_csv_row(const BoundReport& r);

}  // namespace matsign
