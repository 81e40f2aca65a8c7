#pragma once

#include "dlm/params.hpp"

#include <span>

namespace dlm {

// Per-firm primitives: TFP and the fixed insider endowment.
struct FirmRecord {
    double tfp;      // A_j > 0
    double insiders; // L1_j > 0
};

// A firm's optimum at a given secondary wage.
struct FirmEquilibrium {
    double secondary;    // L2_j demanded; negative for firms past the corner
    double output;       // Y_j
    double insider_wage; // w1_j from the Nash bargain
    double profit;       // Pi_j
    bool corner;         // secondary < 0 (interior formula reported as-is)
};

// A = (sum_j A_j^(1/(1-alpha)))^(1-alpha).  Satisfies A >= max_j A_j.
// Throws ValidationError on an empty list or a non-positive tfp.
double aggregate_tfp(std::span<const FirmRecord> firms, double alpha);

// Interior demand for secondary workers,
//   L2_j = (1/c) [ -L1_j + (alpha c A_j / w2)^(1/(1-alpha)) ].
// Negative values are returned unclipped; see FirmEquilibrium::corner.
double firm_secondary_demand(const FirmRecord& firm, double w2, double alpha,
                             double c);

// Output, bargained insider wage and profit at the firm optimum:
//   Y_j  = A_j (alpha c A_j / w2)^(alpha/(1-alpha))
//   w1_j = gamma (Y_j - L2_j w2) / L1_j
//   Pi_j = Y_j - L1_j w1_j - L2_j w2   (= ((1-gamma)/gamma) L1_j w1_j)
FirmEquilibrium solve_firm(const FirmRecord& firm, double w2,
                           const ModelParams& p);

} // namespace dlm
