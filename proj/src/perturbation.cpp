#include "dlm/perturbation.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dlm {

namespace {

void check_series_args(double g, double sigma, int order) {
    if (!(sigma > 0.0)) {
        throw ValidationError("sigma must be positive, got " +
                              std::to_string(sigma));
    }
    if (!(g >= 0.0) || !std::isfinite(g)) {
        throw ValidationError("g must be finite and non-negative, got " +
                              std::to_string(g));
    }
    if (order < 0 || order > 2) {
        throw ValidationError("order must be 0, 1 or 2, got " +
                              std::to_string(order));
    }
}

double small_g_estimate_order2(double g, double sigma) {
    return sigma * (1.0 + 3.0 * sigma) * g * g * g;
}

double large_g_estimate_order2(double g, double sigma) {
    const double u = std::pow(g, -1.0 / (1.0 + sigma));
    return sigma / (2.0 * (1.0 + sigma) * (1.0 + sigma)) * u * u * u;
}

} // namespace

Regime select_regime(double g, double sigma) {
    if (g == 0.0) {
        return Regime::small_g;
    }
    return small_g_estimate_order2(g, sigma) <= large_g_estimate_order2(g, sigma)
               ? Regime::small_g
               : Regime::large_g;
}

SeriesResult scaled_wage_small_g(double g, double sigma, int order) {
    check_series_args(g, sigma, order);
    SeriesResult res;
    res.order = order;
    res.regime = Regime::small_g;
    res.value = 1.0;
    if (order >= 1) {
        res.value -= sigma * g;
    }
    if (order >= 2) {
        res.value += 0.5 * sigma * (1.0 + 3.0 * sigma) * g * g;
    }
    switch (order) {
    case 0: res.est_error = sigma * g; break;
    case 1: res.est_error = 0.5 * sigma * (1.0 + 3.0 * sigma) * g * g; break;
    default: res.est_error = small_g_estimate_order2(g, sigma); break;
    }
    res.domain_warning = select_regime(g, sigma) != Regime::small_g;
    return res;
}

SeriesResult scaled_wage_large_g(double g, double sigma, int order) {
    check_series_args(g, sigma, order);
    if (g == 0.0) {
        throw ValidationError("large-g expansion needs g > 0");
    }
    const double u = std::pow(g, -1.0 / (1.0 + sigma));
    const double lead = std::pow(g, -sigma / (1.0 + sigma));
    const double b1 = sigma / (1.0 + sigma) * u;
    const double b2 = sigma / (2.0 * (1.0 + sigma) * (1.0 + sigma)) * u * u;
    SeriesResult res;
    res.order = order;
    res.regime = Regime::large_g;
    double bracket = 1.0;
    if (order >= 1) {
        bracket -= b1;
    }
    if (order >= 2) {
        bracket += b2;
    }
    res.value = lead * bracket;
    switch (order) {
    case 0: res.est_error = b1; break;
    case 1: res.est_error = b2; break;
    default: res.est_error = b2 * u; break;
    }
    res.domain_warning = select_regime(g, sigma) != Regime::large_g;
    return res;
}

SeriesResult wage_curve_primary(double L, const ModelParams& p, int order) {
    p.validate();
    if (!(L > p.L1)) {
        throw std::domain_error("L must exceed L1 for the thin-margin curve");
    }
    if (order < 0) {
        throw ValidationError("order must be non-negative");
    }
    const double x = L / p.L1 - 1.0;
    const double k =
        (p.c * (p.alpha + p.gamma - p.alpha * p.gamma) - p.gamma) / p.gamma;
    const double lead = p.gamma / (p.alpha * p.c) *
                        std::pow(p.L1 / p.B, 1.0 / p.beta) *
                        std::pow(x, 1.0 / p.beta);
    SeriesResult res;
    res.order = order > 1 ? 1 : order;
    res.regime = Regime::small_g;
    res.value = res.order >= 1 ? lead * (1.0 + k * x) : lead;
    res.est_error = res.order == 0 ? std::abs(k) * x : std::abs(k) * x * x;
    res.domain_warning = x >= 1.0;
    return res;
}

SeriesResult wage_curve_secondary(double L, const ModelParams& p) {
    p.validate();
    if (!(L > 0.0)) {
        throw std::domain_error("L must be positive");
    }
    SeriesResult res;
    res.order = 0;
    res.regime = Regime::large_g;
    res.value = std::pow(L / p.B, 1.0 / p.beta) *
                (p.alpha + p.gamma - p.alpha * p.gamma) / p.alpha;
    // scale of the first inversion correction
    res.est_error =
        std::abs(1.0 + p.sigma() - p.sigma() / p.c) * p.L1 / L;
    res.domain_warning = L / p.L1 < 10.0;
    return res;
}

double g_primary_inversion(double L, const ModelParams& p) {
    p.validate();
    if (!(L >= p.L1)) {
        throw std::domain_error("L must be at least L1");
    }
    const double x = L / p.L1 - 1.0;
    return p.c * x + p.c * p.c * p.sigma() * x * x;
}

double g_secondary_inversion(double L, const ModelParams& p) {
    p.validate();
    if (!(L > 0.0)) {
        throw std::domain_error("L must be positive");
    }
    const double sigma = p.sigma();
    return std::pow(p.c * L / p.L1, 1.0 + sigma) *
           (1.0 - (1.0 + sigma - sigma / p.c) * p.L1 / L);
}

} // namespace dlm
