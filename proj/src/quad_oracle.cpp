#include "matsign/quad_oracle.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "matsign/errors.hpp"

namespace matsign {

namespace {

constexpr std::size_t kMaxSubintervals = 1000000;

// 4-point Gauss-Legendre nodes/weights on [-1, 1]; interior nodes keep the
// tan-mapped endpoints out of the evaluation set.
constexpr double kNode[2] = {0.3399810435848562648, 0.8611363115940525752};
constexpr double kWeight[2] = {0.6521451548625461426, 0.3478548451374538574};

double composite_gl4(const std::function<double(double)>& f, double lo, double hi,
                     std::size_t m) {
    const double h = (hi - lo) / static_cast<double>(m);
    double sum = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double c = lo + (static_cast<double>(i) + 0.5) * h;
        const double r = 0.5 * h;
        sum += kWeight[0] * (f(c - r * kNode[0]) + f(c + r * kNode[0])) +
               kWeight[1] * (f(c - r * kNode[1]) + f(c + r * kNode[1]));
    }
    return sum * 0.5 * h;
}

double refine_until_stable(const std::function<double(double)>& f, double lo,
                           double hi, double rel_tol) {
    double prev = composite_gl4(f, lo, hi, 1);
    for (std::size_t m = 2; m <= kMaxSubintervals; m *= 2) {
        const double cur = composite_gl4(f, lo, hi, m);
        if (std::fabs(cur - prev) <= rel_tol * std::fabs(cur)) return cur;
        prev = cur;
    }
    throw NonConvergenceError("quad_oracle: no convergence within 10^6 subintervals");
}

}  // namespace

double quad_oracle(OracleKernel kernel, double p1, double p2, double rel_tol) {
    const double half_pi = std::numbers::pi / 2.0;
    switch (kernel) {
        case OracleKernel::constant_one:
            return refine_until_stable([](double) { return 1.0; }, 0.0, half_pi,
                                       rel_tol);
        case OracleKernel::lemma1_quartic: {
            const double re = p1, im = p2;
            if (re == 0.0)
                throw std::domain_error("quad_oracle: lemma1 kernel needs Re != 0");
            auto g = [re, im](double theta) {
                const double t = std::tan(theta);
                const double u = t * t + re * re - im * im;
                const double v = 2.0 * re * im;
                const double sec2 = 1.0 + t * t;  // dt = sec^2 theta dtheta
                return sec2 / (u * u + v * v);
            };
            return refine_until_stable(g, -half_pi, half_pi, rel_tol);
        }
        case OracleKernel::lemma2_biquadratic: {
            const double a = p1, c = p2;
            if (!(a > 0.0))
                throw std::domain_error("quad_oracle: lemma2 kernel needs a > 0");
            auto g = [a, c](double theta) {
                const double x = std::tan(theta);
                const double x2 = x * x;
                const double sec2 = 1.0 + x2;
                return sec2 / std::sqrt(x2 * x2 + 2.0 * c * x2 + a * a * a * a);
            };
            return refine_until_stable(g, 0.0, half_pi, rel_tol);
        }
        case OracleKernel::elliptic_first_kind: {
            const double k = p1;
            if (!(std::fabs(k) < 1.0))
                throw std::domain_error("quad_oracle: elliptic kernel needs |k| < 1");
            auto g = [k](double theta) {
                const double s = std::sin(theta);
                return 1.0 / std::sqrt(1.0 - k * k * s * s);
            };
            return refine_until_stable(g, 0.0, half_pi, rel_tol);
        }
    }
    throw std::invalid_argument("quad_oracle: unknown kernel");
}

}  // namespace matsign
