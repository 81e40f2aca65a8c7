#pragma once

#include "dlm/params.hpp"

namespace dlm {

// Which end of the g axis an expansion is anchored to.
enum class Regime { small_g, large_g };

// One evaluation of a truncated expansion.  est_error is the magnitude of
// the first omitted term relative to the leading one -- the usual working
// gauge for an asymptotic series, not a guaranteed bound.
struct SeriesResult {
    double value = 0.0;
    int order = 0;        // truncation order actually applied
    Regime regime = Regime::small_g;
    double est_error = 0.0;
    bool domain_warning = false; // input is outside this regime's home turf
};

// v = 1 - sigma g + (1/2) sigma (1 + 3 sigma) g^2 + O(g^3).
// Orders 0..2; domain_warning when the other regime estimates tighter.
SeriesResult scaled_wage_small_g(double g, double sigma, int order);

// v = g^(-sigma/(1+sigma)) [1 - sigma/(1+sigma) u + sigma/(2 (1+sigma)^2) u^2
//     + O(u^3)],  u = g^(-1/(1+sigma)).
// Orders 0..2; requires g > 0.
SeriesResult scaled_wage_large_g(double g, double sigma, int order);

// Wage curve for thin secondary employment, in x = L/L1 - 1:
//   wbar = gamma/(alpha c) (L1/B)^(1/beta) x^(1/beta)
//          [1 + ((c (alpha+gamma-alpha gamma) - gamma)/gamma) x + O(x^2)].
// Orders 0 and 1 (higher requests clamp to 1).  Throws on L <= L1.
SeriesResult wage_curve_primary(double L, const ModelParams& p, int order);

// Leading wage curve for secondary-dominated employment:
//   wbar = (L/B)^(1/beta) (alpha + gamma - alpha gamma)/alpha.
// domain_warning when L/L1 < 10.
SeriesResult wage_curve_secondary(double L, const ModelParams& p);

// Inversions g(L) of the employment relation, one per regime:
//   x small:   g = c x + c^2 sigma x^2,            x = L/L1 - 1
//   L/L1 big:  g = (c L/L1)^(1+sigma) [1 - (1 + sigma - sigma/c) L1/L]
double g_primary_inversion(double L, const ModelParams& p);
double g_secondary_inversion(double L, const ModelParams& p);

// The regime whose order-2 truncation estimate is smaller at this g.
Regime select_regime(double g, double sigma);

} // namespace dlm
