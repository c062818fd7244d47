#pragma once

#include <stdexcept>

namespace linlab {

// Positive solution of phi^2/2 + phi/2 = x; for integers this inverts
// k + C(k,2). Monotone increasing, sqrt(x) <= phi(x) <= sqrt(2x) for x >= 1.
double phi(double x);

// x - phi(x) for x >= 1, 0 below; continuous, nondecreasing, convex.
double psi(double x);

// d psi / dx = (y - 1/2) / (y + 1/2) with y = phi(x), valid for x > 1.
double psi_derivative(double x);

// Floor on soundness for a test with completeness c and average query
// complexity q >= 1: 2^{-q + phi(q)} - (1 - c) = 2^{-psi(q)} - (1 - c).
// May be negative (vacuous); reported as-is.
double theorem_bound(double c, double q);

struct BoundReport {
    double c;
    double q;
    double phi_q;
    double psi_q;
    double s_lower;
};

BoundReport bound_report(double c, double q);

}  // namespace linlab
