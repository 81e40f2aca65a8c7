#pragma once

// Reference implementations kept deliberately independent of the library:
// plain bisection and direct formula evaluation, no shared solver code.

#include <cmath>
#include <stdexcept>

namespace oracle {

// Root of f(v) = v - (1 + g v)^(-sigma) on (0,1] by bisection only.
inline double clearing_v(double g, double sigma) {
    if (g == 0.0) {
        return 1.0;
    }
    double lo = 0.0;
    double hi = 1.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double f = mid - std::pow(1.0 + g * mid, -sigma);
        if (f > 0.0) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Aggregates evaluated straight from their definitions at a given v.
struct Aggregates {
    double w2, L2, L, Y, W, wbar, wbar1;
};

inline Aggregates aggregates(double alpha, double c, double beta, double gamma,
                             double L1, double B, double A, double v) {
    Aggregates r;
    r.w2 = alpha * c * A * std::pow(L1, alpha - 1.0) * std::pow(v, 1.0 / beta);
    r.L2 = B * std::pow(r.w2, beta);
    r.L = L1 + r.L2;
    r.Y = A * std::pow(L1 + c * r.L2, alpha);
    const double insider_bill = gamma * (r.Y - r.L2 * r.w2);
    r.W = insider_bill + r.L2 * r.w2;
    r.wbar = r.W / r.L;
    r.wbar1 = insider_bill / L1;
    return r;
}

} // namespace oracle
