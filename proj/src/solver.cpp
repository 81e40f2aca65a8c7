#include "dlm/solver.hpp"

#include <cmath>
#include <string>

namespace dlm {

namespace {

double clearing_residual(double v, double g, double sigma) {
    return v - std::pow(1.0 + g * v, -sigma);
}

std::string failure_message(double g, double sigma, double lo, double hi,
                            double residual) {
    return "clearing equation did not converge (g=" + std::to_string(g) +
           ", sigma=" + std::to_string(sigma) + ", bracket=[" +
           std::to_string(lo) + "," + std::to_string(hi) +
           "], residual=" + std::to_string(residual) + ")";
}

} // namespace

double ScaledState::residual() const { return clearing_residual(v, g, sigma); }

SolverFailure::SolverFailure(double g_, double sigma_, double lo, double hi,
                             double residual)
    : std::runtime_error(failure_message(g_, sigma_, lo, hi, residual)),
      g(g_), sigma(sigma_), bracket_lo(lo), bracket_hi(hi),
      last_residual(residual) {}

double composite_g(const ModelParams& p) {
    return p.c * p.B * std::pow(p.alpha * p.c * p.A, p.beta) *
           std::pow(p.L1, -(1.0 + p.sigma()));
}

ScaledState solve_scaled_wage(double g, double sigma, const RootOptions& opts) {
    if (!(g >= 0.0) || !std::isfinite(g)) {
        throw ValidationError("g must be finite and non-negative, got " +
                              std::to_string(g));
    }
    if (!(sigma > 0.0)) {
        throw ValidationError("sigma must be positive, got " +
                              std::to_string(sigma));
    }
    if (g == 0.0) {
        return {0.0, 1.0, sigma};
    }

    double lo = 1e-300;
    double hi = 1.0;
    // residual < 0 near v = 0 and > 0 at v = 1, so (0,1] brackets one root
    if (!(clearing_residual(lo, g, sigma) < 0.0) ||
        !(clearing_residual(hi, g, sigma) > 0.0)) {
        throw std::logic_error("clearing residual does not bracket on (0,1]");
    }

    // a couple of extra Newton steps once converged, so downstream
    // identities (market clearing, wage accounting) sit at machine level
    const auto polish = [&](double v, double r) {
        for (int k = 0; k < 2; ++k) {
            const double slope =
                1.0 + sigma * g * std::pow(1.0 + g * v, -sigma - 1.0);
            const double next = v - r / slope;
            if (!(next > 0.0 && next <= 1.0)) {
                break;
            }
            const double rn = clearing_residual(next, g, sigma);
            if (!(std::abs(rn) < std::abs(r))) {
                break;
            }
            v = next;
            r = rn;
        }
        return ScaledState{g, v, sigma};
    };

    double v = 0.5 * (lo + hi);
    double r = clearing_residual(v, g, sigma);
    for (int it = 0; it < opts.max_iter; ++it) {
        if (std::abs(r) <= opts.rel_tol * v) {
            return polish(v, r);
        }
        if (r > 0.0) {
            hi = v;
        } else {
            lo = v;
        }
        double next;
        if (hi - lo < opts.newton_switch) {
            // r'(v) = 1 + sigma g (1+gv)^(-sigma-1) >= 1, so the step is finite
            const double slope =
                1.0 + sigma * g * std::pow(1.0 + g * v, -sigma - 1.0);
            next = v - r / slope;
            if (!(next > lo && next < hi)) {
                next = 0.5 * (lo + hi);
            }
        } else {
            next = 0.5 * (lo + hi);
        }
        v = next;
        r = clearing_residual(v, g, sigma);
    }
    throw SolverFailure(g, sigma, lo, hi, r);
}

ScaledState scaled_state_at_employment(double L_over_L1, double c,
                                       double sigma) {
    if (!(L_over_L1 >= 1.0)) {
        throw ValidationError("L/L1 must be >= 1, got " +
                              std::to_string(L_over_L1));
    }
    const double t = c * (L_over_L1 - 1.0);
    const double v = std::pow(1.0 + t, -sigma);
    return {t == 0.0 ? 0.0 : t / v, v, sigma};
}

} // namespace dlm
