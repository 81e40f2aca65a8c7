#pragma once

#include "dlm/params.hpp"

#include <cstdint>
#include <string_view>

namespace dlm {

// Exponent of a base dimension.  Stays exact rational as long as every
// operand is exact; decays to floating point otherwise, where comparisons
// use a 1e-12 absolute tolerance.
class Exponent {
public:
    constexpr Exponent() = default;
    Exponent(std::int64_t num, std::int64_t den = 1);

    // Exact when x is, up to representation rounding, a ratio of small
    // integers (e.g. the usual alpha = 1/2); plain floating otherwise.
    static Exponent from_double(double x);

    bool exact() const { return exact_; }
    double value() const;

    Exponent operator-() const;
    Exponent operator+(const Exponent& o) const;
    Exponent operator-(const Exponent& o) const;
    Exponent operator*(const Exponent& o) const;
    bool operator==(const Exponent& o) const;
    bool is_zero() const;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    double approx_ = 0.0;
    bool exact_ = true;
};

// Dimension exponents over headcount H, value V and time T.
struct Dimension {
    Exponent h, v, t;

    Dimension operator*(const Dimension& o) const; // dim of a product
    Dimension pow(const Exponent& e) const;
    bool operator==(const Dimension& o) const;
    bool dimensionless() const;
};

enum class Symbol {
    Y, L1, L2, w1, w2, wbar, A, B, W, g, v, Z, alpha, beta, gamma, c
};

// Dimension table of the model's quantities; alpha and beta feed the
// exponents of A and B.  (dim A = H^-alpha V T^-1, dim B = H^(1+beta)
// V^-beta T^beta; g, v, Z and the shape parameters are dimensionless.)
Dimension dim_of(Symbol s, const ModelParams& p);

// Lookup by field name ("w2", "wbar", ...); unknown -> ValidationError.
Symbol symbol_from_name(std::string_view name);

// Positive scale factors applied to each base unit.
struct UnitRescaling {
    double lambda_h = 1.0;
    double lambda_v = 1.0;
    double lambda_t = 1.0;
};

// Multiplier that a quantity of dimension d picks up under r.
double scale_factor(const Dimension& d, const UnitRescaling& r);

// Transforms every parameter by its dimension.  Model solutions commute
// with this map: solving the rescaled parameters gives each output scaled
// by its own dimension, and g, v, Z do not move.
ModelParams apply_rescaling(const ModelParams& p, const UnitRescaling& r);

} // namespace dlm
