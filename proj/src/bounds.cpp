#include "linlab/bounds.hpp"

#include <cmath>

namespace linlab {

double phi(double x) {
    if (x < 0) throw std::invalid_argument("phi: negative argument");
    return (-1.0 + std::sqrt(1.0 + 8.0 * x)) / 2.0;
}

double psi(double x) {
    if (x < 1.0) return 0.0;
    return x - phi(x);
}

double psi_derivative(double x) {
    if (x <= 1.0) throw std::invalid_argument("psi_derivative: needs x > 1");
    double y = phi(x);
    return (y - 0.5) / (y + 0.5);
}

double theorem_bound(double c, double q) {
    if (c < 0.0 || c > 1.0) throw std::invalid_argument("theorem_bound: c outside [0,1]");
    if (q < 1.0) throw std::invalid_argument("theorem_bound: needs q >= 1");
    return std::exp2(-psi(q)) - (1.0 - c);
}

BoundReport bound_report(double c, double q) {
    return BoundReport{c, q, phi(q), psi(q), theorem_bound(c, q)};
}

}  // namespace linlab
