#pragma once

#include <stdexcept>

namespace dlm {

// Thrown when a parameter or config value violates its admissible range.
// The message names the offending field.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The seven free parameters of the dual labor market.
//
//   alpha  output exponent, in (0,1)
//   c      productivity of secondary relative to primary labor, in (0,1]
//   beta   Frisch elasticity of secondary labor supply, > 0
//   gamma  bargaining power of the insiders, in (0,1)
//   L1     total primary workers (headcount), > 0
//   B      supply coefficient of L2 = B w2^beta, > 0
//   A      aggregate TFP, > 0
struct ModelParams {
    double alpha = 0.5;
    double c = 0.5;
    double beta = 0.5;
    double gamma = 0.5;
    double L1 = 1.0;
    double B = 1.0;
    double A = 1.0;

    // sigma = beta (1 - alpha); derived, never stored.
    double sigma() const { return beta * (1.0 - alpha); }

    // Throws ValidationError naming the first violated bound.
    void validate() const;
};

} // namespace dlm
