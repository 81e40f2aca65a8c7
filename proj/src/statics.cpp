#include "dlm/statics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dlm {

void SweepSpec::validate() const {
    if (n < 1) {
        throw ValidationError("sweep.n must be at least 1, got " +
                              std::to_string(n));
    }
    if (n > 1 && !(min < max)) {
        throw ValidationError("sweep.min must be below sweep.max");
    }
    if (spacing == Spacing::log && !(min > 0.0)) {
        throw ValidationError("log spacing needs sweep.min > 0");
    }
    const double floor = variable == SweepVariable::L_over_L1 ? 1.0 : 0.0;
    if (!(min >= floor)) {
        throw ValidationError("sweep.min must be at least " +
                              std::to_string(floor));
    }
    if (!std::isfinite(min) || !std::isfinite(max)) {
        throw ValidationError("sweep bounds must be finite");
    }
}

namespace {

double grid_point(const SweepSpec& s, int i) {
    if (s.n == 1) {
        return s.min;
    }
    const double f = static_cast<double>(i) / (s.n - 1);
    if (s.spacing == Spacing::log) {
        return std::exp(std::log(s.min) + f * (std::log(s.max) - std::log(s.min)));
    }
    return s.min + f * (s.max - s.min);
}

CurveSample to_sample(const Equilibrium& eq, const ModelParams& p) {
    return {eq.L / p.L1, eq.wbar, eq.w2,  eq.wbar1,
            eq.scaled.g, eq.scaled.v, eq.Z};
}

} // namespace

double tfp_for_g(const ModelParams& p, double g) {
    if (!(g > 0.0)) {
        throw ValidationError("g must be positive, got " + std::to_string(g));
    }
    return std::pow(g * std::pow(p.L1, 1.0 + p.sigma()) / (p.c * p.B),
                    1.0 / p.beta) /
           (p.alpha * p.c);
}

PhillipsCurve trace_curve(const ModelParams& p, const SweepSpec& sweep,
                          const RootOptions& opts,
                          std::vector<SweepFailure>* failures) {
    p.validate();
    sweep.validate();
    PhillipsCurve curve;
    curve.params = p;
    curve.samples.reserve(sweep.n);
    for (int i = 0; i < sweep.n; ++i) {
        const double value = grid_point(sweep, i);
        try {
            ModelParams q = p;
            switch (sweep.variable) {
            case SweepVariable::A:
                q.A = value;
                break;
            case SweepVariable::g:
                q.A = tfp_for_g(p, value);
                break;
            case SweepVariable::L_over_L1:
                if (!(value > 1.0)) {
                    throw ValidationError(
                        "L/L1 sweeps need values above 1 (no secondary "
                        "employment at L = L1)");
                }
                q.A = tfp_for_g(
                    p, scaled_state_at_employment(value, p.c, p.sigma()).g);
                break;
            }
            const Equilibrium eq = solve_equilibrium(q, opts);
            verify_equilibrium(eq, q);
            curve.samples.push_back(to_sample(eq, q));
        } catch (const SolverFailure& e) {
            if (!failures) {
                throw SolverFailure(e.g, e.sigma, e.bracket_lo, e.bracket_hi,
                                    e.last_residual);
            }
            failures->push_back({value, e.what()});
        }
    }
    return curve;
}

ModelParams reparametrize_supply(ModelParams p, double w0) {
    if (!(w0 > 0.0)) {
        throw ValidationError("w0 must be positive, got " + std::to_string(w0));
    }
    p.B = p.L1 / std::pow(w0, p.beta);
    p.validate();
    return p;
}

double supply_anchor(const ModelParams& p) {
    return std::pow(p.L1 / p.B, 1.0 / p.beta);
}

ModelParams apply_changes(const ModelParams& base, const ParamChanges& ch) {
    ModelParams p = base;
    if (ch.c) {
        p.c = *ch.c;
    }
    if (ch.gamma) {
        p.gamma = *ch.gamma;
    }
    if (ch.beta) {
        const double w0 = supply_anchor(base);
        p.beta = *ch.beta;
        p = reparametrize_supply(p, w0);
    }
    if (ch.B_percent) {
        p.B *= 1.0 + *ch.B_percent / 100.0;
    }
    p.validate();
    return p;
}

FlatteningResult flattening_experiment(const ModelParams& base,
                                       const ParamChanges& changes,
                                       double L_over_L1_min,
                                       double L_over_L1_max, int n,
                                       const RootOptions& opts) {
    if (n < 3) {
        throw ValidationError("slope comparison needs at least 3 grid points");
    }
    SweepSpec sweep{SweepVariable::L_over_L1, L_over_L1_min, L_over_L1_max, n,
                    Spacing::linear};
    FlatteningResult res;
    res.base = trace_curve(base, sweep, opts);
    res.modified = trace_curve(apply_changes(base, changes), sweep, opts);

    const auto slope_at = [](const std::vector<CurveSample>& s, int i) {
        const int lo = i == 0 ? 0 : i - 1;
        const int hi = i + 1 == static_cast<int>(s.size()) ? i : i + 1;
        return (s[hi].wbar - s[lo].wbar) / (s[hi].L_over_L1 - s[lo].L_over_L1);
    };
    res.slopes.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double sb = slope_at(res.base.samples, i);
        const double sm = slope_at(res.modified.samples, i);
        res.slopes.push_back(
            {res.base.samples[i].L_over_L1, sb, sm, sm / sb});
    }
    return res;
}

double ratio_residual(double c_ratio, double gamma_ratio, double B_ratio,
                      double beta, double target) {
    return gamma_ratio / (c_ratio * std::pow(B_ratio, 1.0 / beta)) - target;
}

double solve_equal_ratio(const RatioScenario& s) {
    const double target = s.target();
    if (!(target > 0.0) || target >= 1.0) {
        throw std::domain_error(
            "ratio target must lie in (0,1); period II must grow slower");
    }
    if (!(s.beta > 0.0)) {
        throw ValidationError("beta must be positive");
    }
    return std::pow(target, -1.0 / (2.0 + 1.0 / s.beta));
}

std::vector<RatioLine> ratio_surface(const RatioScenario& s,
                                     std::span<const double> B_ratio_grid,
                                     double c_ratio_min, double c_ratio_max,
                                     int n_c) {
    const double target = s.target();
    if (!(target > 0.0)) {
        throw std::domain_error("ratio target must be positive");
    }
    if (n_c < 2 || !(c_ratio_min < c_ratio_max)) {
        throw ValidationError("c_ratio grid needs n >= 2 and min < max");
    }
    std::vector<RatioLine> lines;
    lines.reserve(B_ratio_grid.size());
    for (double b : B_ratio_grid) {
        if (!(b > 0.0)) {
            throw ValidationError("B_ratio must be positive");
        }
        RatioLine line;
        line.B_ratio = b;
        line.points.reserve(n_c);
        for (int i = 0; i < n_c; ++i) {
            const double c = c_ratio_min + (c_ratio_max - c_ratio_min) * i /
                                               (n_c - 1);
            // gamma_ratio on the surface: residual == 0
            line.points.emplace_back(
                c, target * c * std::pow(b, 1.0 / s.beta));
        }
        lines.push_back(std::move(line));
    }
    return lines;
}

} // namespace dlm
