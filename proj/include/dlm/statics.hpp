#pragma once

#include "dlm/equilibrium.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dlm {

// One verified point of a traced wage curve.
struct CurveSample {
    double L_over_L1;
    double wbar;
    double w2;
    double wbar1;
    double g;
    double v;
    double Z;
};

struct PhillipsCurve {
    ModelParams params;
    std::vector<CurveSample> samples; // ordered by increasing L_over_L1
};

enum class SweepVariable { g, A, L_over_L1 };
enum class Spacing { linear, log };

struct SweepSpec {
    SweepVariable variable = SweepVariable::L_over_L1;
    double min = 0.0;
    double max = 0.0;
    int n = 2;
    Spacing spacing = Spacing::linear;

    void validate() const; // min < max (n >= 2), positive range for log
};

// A sweep point the solver gave up on.
struct SweepFailure {
    double value;        // offending sweep value
    std::string message;
};

// Traces the wage curve over the sweep.  Every sample is re-validated
// (market clearing, wbar accounting) before it is accepted.  Solver
// failures throw unless `failures` is given, in which case they are
// collected and the trace continues.  n = 1 evaluates the single point
// at sweep.min.
PhillipsCurve trace_curve(const ModelParams& p, const SweepSpec& sweep,
                          const RootOptions& opts = {},
                          std::vector<SweepFailure>* failures = nullptr);

// The TFP level that produces a given g under otherwise fixed parameters.
double tfp_for_g(const ModelParams& p, double g);

// Supply-side anchoring: B = L1 / w0^beta, which makes L2 = L1 (w2/w0)^beta
// and wbar = w0 Z.  Changing beta at fixed w0 pivots the supply curve
// around the point (L1, w0).
ModelParams reparametrize_supply(ModelParams p, double w0);

// The anchor implied by (L1, B, beta): w0 = (L1/B)^(1/beta).
double supply_anchor(const ModelParams& p);

// A comparative-statics change set.  `beta` is applied holding the supply
// anchor w0 fixed (B is recomputed); `B_percent` then scales B.
struct ParamChanges {
    std::optional<double> c;
    std::optional<double> gamma;
    std::optional<double> beta;
    std::optional<double> B_percent; // +20 means B *= 1.2
};

ModelParams apply_changes(const ModelParams& base, const ParamChanges& ch);

// Finite-difference slopes of base and modified curves at matched
// employment ratios.
struct SlopePoint {
    double L_over_L1;
    double base_slope;
    double modified_slope;
    double ratio; // modified / base
};

struct FlatteningResult {
    PhillipsCurve base;
    PhillipsCurve modified;
    std::vector<SlopePoint> slopes;
};

// Traces base and modified parameter sets on one shared employment grid
// and compares wage-curve slopes point by point.
FlatteningResult flattening_experiment(const ModelParams& base,
                                       const ParamChanges& changes,
                                       double L_over_L1_min,
                                       double L_over_L1_max, int n,
                                       const RootOptions& opts = {});

// Wage-growth scenario for the ratio decomposition: two periods with
// different nominal wage growth at equal employment.
struct RatioScenario {
    double growth_I;  // e.g. 0.03
    double growth_II; // e.g. 0.005
    double beta = 0.5;

    double target() const { return (1.0 + growth_II) / (1.0 + growth_I); }
};

// gamma_ratio / (c_ratio B_ratio^(1/beta)) - target; zero on the surface
// of parameter combinations that reproduce the scenario.
double ratio_residual(double c_ratio, double gamma_ratio, double B_ratio,
                      double beta, double target);

// The equal-ratio solution r = target^(-1/(2 + 1/beta)), i.e. the common
// magnitude when c and B rise by r and gamma falls by 1/r.
// Throws std::domain_error when target >= 1 or target <= 0.
double solve_equal_ratio(const RatioScenario& s);

// One iso-B_ratio line of the surface: gamma_ratio as a function of
// c_ratio.
struct RatioLine {
    double B_ratio;
    std::vector<std::pair<double, double>> points; // (c_ratio, gamma_ratio)
};

std::vector<RatioLine> ratio_surface(const RatioScenario& s,
                                     std::span<const double> B_ratio_grid,
                                     double c_ratio_min, double c_ratio_max,
                                     int n_c);

} // namespace dlm
