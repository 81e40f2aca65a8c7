#include "dlm/equilibrium.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace dlm {

double secondary_wage(double v, const ModelParams& p) {
    if (!(v > 0.0 && v <= 1.0)) {
        throw ValidationError("v must lie in (0,1], got " + std::to_string(v));
    }
    return p.alpha * p.c * p.A / std::pow(p.L1, 1.0 - p.alpha) *
           std::pow(v, 1.0 / p.beta);
}

double aggregate_secondary_demand(const ModelParams& p, double w2) {
    const FirmRecord whole{p.A, p.L1};
    return firm_secondary_demand(whole, w2, p.alpha, p.c);
}

double wage_factor_z(double alpha, double c, double beta, double gamma,
                     double g, double v) {
    if (g == 0.0) {
        return 0.0;
    }
    const double sigma = beta * (1.0 - alpha);
    const double insider_part = gamma * std::pow(v, -alpha / sigma);
    const double outsider_part =
        (1.0 - gamma) * alpha * g * std::pow(v, 1.0 + 1.0 / beta);
    return std::pow(g, 1.0 / beta) / (alpha * std::pow(c, 1.0 + 1.0 / beta)) *
           (insider_part + outsider_part) / (1.0 + g / c * v);
}

namespace {

Equilibrium from_state(const ModelParams& p, const ScaledState& s) {
    Equilibrium eq;
    eq.scaled = s;
    eq.w2 = secondary_wage(s.v, p);
    eq.L2 = p.B * std::pow(eq.w2, p.beta);
    eq.L = p.L1 + eq.L2;
    eq.Y = p.A * std::pow(p.alpha * p.c * p.A / eq.w2,
                          p.alpha / (1.0 - p.alpha));
    // W = sum_j L1_j w1_j + L2 w2 = gamma Y + (1-gamma) L2 w2
    eq.W = p.gamma * eq.Y + (1.0 - p.gamma) * eq.L2 * eq.w2;
    eq.wbar = eq.W / eq.L;
    eq.wbar1 = p.gamma * (eq.Y - eq.L2 * eq.w2) / p.L1;
    eq.Z = wage_factor_z(p.alpha, p.c, p.beta, p.gamma, s.g, s.v);
    return eq;
}

} // namespace

Equilibrium solve_equilibrium(const ModelParams& p, const RootOptions& opts) {
    p.validate();
    const double g = composite_g(p);
    return from_state(p, solve_scaled_wage(g, p.sigma(), opts));
}

Equilibrium solve_equilibrium(const ModelParams& p,
                              std::span<const FirmRecord> firms,
                              const RootOptions& opts) {
    ModelParams q = p;
    q.A = aggregate_tfp(firms, p.alpha);
    q.L1 = 0.0;
    for (const FirmRecord& f : firms) {
        if (!(f.insiders > 0.0)) {
            throw ValidationError("insiders must be positive");
        }
        q.L1 += f.insiders;
    }
    q.validate();
    Equilibrium eq = from_state(q, solve_scaled_wage(composite_g(q), q.sigma(),
                                                     opts));
    double insider_bill = 0.0;
    for (const FirmRecord& f : firms) {
        insider_bill += f.insiders * solve_firm(f, eq.w2, q).insider_wage;
    }
    eq.wbar1 = insider_bill / q.L1;
    return eq;
}

void verify_equilibrium(const Equilibrium& eq, const ModelParams& p,
                        double rel_tol) {
    const double demand = aggregate_secondary_demand(p, eq.w2);
    const double clearing = std::abs(eq.L2 - demand) / std::max(eq.L2, 1e-300);
    if (!(clearing <= rel_tol)) {
        throw std::logic_error("market clearing residual " +
                               std::to_string(clearing));
    }
    const double via_z =
        std::pow(p.L1 / p.B, 1.0 / p.beta) * eq.Z;
    const double wbar_gap = std::abs(eq.wbar - via_z) / eq.wbar;
    if (!(wbar_gap <= rel_tol)) {
        throw std::logic_error("wbar path mismatch " + std::to_string(wbar_gap));
    }
}

} // namespace dlm
