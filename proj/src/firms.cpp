#include "dlm/firms.hpp"

#include <cmath>
#include <string>

namespace dlm {

double aggregate_tfp(std::span<const FirmRecord> firms, double alpha) {
    if (firms.empty()) {
        throw ValidationError("aggregate_tfp needs at least one firm");
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < firms.size(); ++j) {
        if (!(firms[j].tfp > 0.0)) {
            throw ValidationError("firm " + std::to_string(j) +
                                  ": tfp must be positive");
        }
        sum += std::pow(firms[j].tfp, 1.0 / (1.0 - alpha));
    }
    return std::pow(sum, 1.0 - alpha);
}

double firm_secondary_demand(const FirmRecord& firm, double w2, double alpha,
                             double c) {
    const double scale = std::pow(alpha * c * firm.tfp / w2, 1.0 / (1.0 - alpha));
    return (scale - firm.insiders) / c;
}

FirmEquilibrium solve_firm(const FirmRecord& firm, double w2,
                           const ModelParams& p) {
    if (!(w2 > 0.0)) {
        throw ValidationError("w2 must be positive, got " + std::to_string(w2));
    }
    if (!(firm.insiders > 0.0)) {
        throw ValidationError("insiders must be positive");
    }
    FirmEquilibrium eq;
    eq.secondary = firm_secondary_demand(firm, w2, p.alpha, p.c);
    eq.corner = eq.secondary < 0.0;
    eq.output = firm.tfp *
                std::pow(p.alpha * p.c * firm.tfp / w2, p.alpha / (1.0 - p.alpha));
    eq.insider_wage = p.gamma * (eq.output - eq.secondary * w2) / firm.insiders;
    // economic profit; equals ((1-gamma)/gamma) L1_j w1_j by the bargain
    eq.profit =
        eq.output - firm.insiders * eq.insider_wage - eq.secondary * w2;
    return eq;
}

} // namespace dlm
