#pragma once

#include "matsign/bounds.hpp"

namespace matsign {

// Fixed catalog of integrands used to verify the closed forms along an
// independent path. Domains are implicit per kernel; infinite ones are
// mapped by t = tan(theta).
enum class OracleKernel {
    constant_one,         // 1 on [0, pi/2]
    lemma1_quartic,       // 1/|t^2 + lambda^2|^2 on (-inf, inf); p1 = Re, p2 = Im
    lemma2_biquadratic,   // 1/sqrt(x^4 + 2 c x^2 + a^4) on [0, inf); p1 = a, p2 = c
    elliptic_first_kind,  // 1/sqrt(1 - k^2 sin^2 theta) on [0, pi/2]; p1 = k
};

// Composite 4-point Gauss-Legendre quadrature with interval halving until two
// successive refinements agree to rel_tol. Throws NonConvergenceError past
// 10^6 subintervals. Deliberately shares no code with the closed forms it
// checks.
double quad_oracle(OracleKernel kernel, double p1, double p2,
                   double rel_tol = 1e-10);

}  // namespace matsign
