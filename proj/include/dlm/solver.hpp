#pragma once

#include "dlm/params.hpp"

#include <stdexcept>

namespace dlm {

// Options for the market-clearing root finder.
struct RootOptions {
    double rel_tol = 1e-13;      // relative residual target
    int max_iter = 200;
    double newton_switch = 1e-6; // bracket width below which Newton polishes
};

// Dimensionless core of the solved model: sigma = beta (1 - alpha) and the
// scaled secondary wage v = (w2 L1^(1-alpha) / (alpha c A))^beta, which at
// the market-clearing point satisfies v = (1 + g v)^(-sigma).
struct ScaledState {
    double g = 0.0;
    double v = 1.0;
    double sigma = 0.0;

    // v - (1 + g v)^(-sigma); zero at the clearing point.
    double residual() const;
};

// Raised when the root finder cannot reach the residual target; carries the
// last bracket so callers can report how far it got.
class SolverFailure : public std::runtime_error {
public:
    SolverFailure(double g, double sigma, double lo, double hi,
                  double residual);

    double g;
    double sigma;
    double bracket_lo;
    double bracket_hi;
    double last_residual;
};

// The single dimensionless knob of the clearing problem,
//   g = c B (alpha c A)^beta L1^(-(1 + beta (1 - alpha))).
// Invariant under any rescaling of the headcount, value and time units.
double composite_g(const ModelParams& p);

// The unique v in (0,1] with v = (1 + g v)^(-sigma).  Bisection on (0,1]
// (the residual has opposite signs at the ends), switching to Newton once
// the bracket is tight.  g = 0 returns v = 1 without iterating.
ScaledState solve_scaled_wage(double g, double sigma,
                              const RootOptions& opts = {});

// Clearing state pinned to an employment ratio x = L/L1 instead of g:
// with t = c (x - 1), the pair g = t (1 + t)^sigma, v = (1 + t)^(-sigma)
// satisfies the clearing equation identically, so curve tracing on an
// employment grid needs no iteration.
ScaledState scaled_state_at_employment(double L_over_L1, double c,
                                       double sigma);

} // namespace dlm
