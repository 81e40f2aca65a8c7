#pragma once

#include "dlm/firms.hpp"
#include "dlm/params.hpp"
#include "dlm/solver.hpp"

#include <span>

namespace dlm {

// Aggregate outcome at the clearing secondary wage.
struct Equilibrium {
    double w2;    // secondary wage
    double L2;    // secondary employment, B w2^beta
    double L;     // total employment L1 + L2
    double Y;     // aggregate output
    double W;     // total wage bill
    double wbar;  // average wage W / L
    double wbar1; // average insider wage, sum_j L1_j w1_j / L1
    double Z;     // dimensionless wage factor: wbar = (L1/B)^(1/beta) Z
    ScaledState scaled; // the (g, v) pair behind this equilibrium
};

// Inverts the scaled wage: w2 = (alpha c A / L1^(1-alpha)) v^(1/beta).
double secondary_wage(double v, const ModelParams& p);

// Demand for secondary workers aggregated over all firms, expressed with
// the aggregate TFP.  Equals B w2^beta at the clearing wage.
double aggregate_secondary_demand(const ModelParams& p, double w2);

// Z(alpha, c, beta, gamma; g, v).  Z -> 0 as g -> 0: no secondary jobs, so
// insider pay collapses together with the marginal product of outsiders.
double wage_factor_z(double alpha, double c, double beta, double gamma,
                     double g, double v);

// Full equilibrium from parameters: computes g, solves the clearing
// equation, then evaluates every aggregate from the closed forms.
Equilibrium solve_equilibrium(const ModelParams& p,
                              const RootOptions& opts = {});

// As above, but TFP and the insider endowment are rebuilt from the firm
// list (p.A and p.L1 are ignored) and the insider wage is the exact
// employment-weighted sum over firms.
Equilibrium solve_equilibrium(const ModelParams& p,
                              std::span<const FirmRecord> firms,
                              const RootOptions& opts = {});

// Re-checks market clearing and the two wbar evaluation paths on a solved
// equilibrium; throws std::logic_error with the offending magnitude if a
// residual is outside tolerance.  Curve tracing runs this on every sample.
void verify_equilibrium(const Equilibrium& eq, const ModelParams& p,
                        double rel_tol = 1e-10);

} // namespace dlm
