#include "dlm/units.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dlm {

namespace {

constexpr double kFloatEps = 1e-12;

// Acceptance threshold for rational reconstruction: the double must BE the
// rational up to representation rounding, else the exponent stays floating.
constexpr double kReconstructTol = 4.0 * std::numeric_limits<double>::epsilon();

} // namespace

Exponent::Exponent(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) {
        throw ValidationError("exponent denominator must be non-zero");
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    const std::int64_t d = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (d > 1) {
        num_ /= d;
        den_ /= d;
    }
    approx_ = static_cast<double>(num_) / static_cast<double>(den_);
}

Exponent Exponent::from_double(double x) {
    // continued-fraction reconstruction with small denominators
    double r = x;
    std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int i = 0; i < 32; ++i) {
        const double a = std::floor(r);
        if (std::abs(a) > 1e15) {
            break;
        }
        const auto ai = static_cast<std::int64_t>(a);
        const std::int64_t p2 = ai * p1 + p0;
        const std::int64_t q2 = ai * q1 + q0;
        if (q2 > 1000000 || q2 < 0) {
            break;
        }
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        const double err = std::abs(x - static_cast<double>(p1) / q1);
        if (err <= kReconstructTol * std::max(1.0, std::abs(x))) {
            return Exponent(p1, q1);
        }
        const double frac = r - a;
        if (frac < 1e-15) {
            break;
        }
        r = 1.0 / frac;
    }
    Exponent e;
    e.exact_ = false;
    e.approx_ = x;
    return e;
}

double Exponent::value() const {
    return exact_ ? static_cast<double>(num_) / static_cast<double>(den_)
                  : approx_;
}

Exponent Exponent::operator-() const {
    if (exact_) {
        return Exponent(-num_, den_);
    }
    Exponent e;
    e.exact_ = false;
    e.approx_ = -approx_;
    return e;
}

namespace {

bool mul_overflows(std::int64_t a, std::int64_t b, std::int64_t* out) {
    return __builtin_mul_overflow(a, b, out);
}

} // namespace

Exponent Exponent::operator+(const Exponent& o) const {
    if (exact_ && o.exact_) {
        std::int64_t n1, n2, d;
        if (!mul_overflows(num_, o.den_, &n1) &&
            !mul_overflows(o.num_, den_, &n2) &&
            !mul_overflows(den_, o.den_, &d) &&
            !__builtin_add_overflow(n1, n2, &n1)) {
            return Exponent(n1, d);
        }
    }
    Exponent e;
    e.exact_ = false;
    e.approx_ = value() + o.value();
    return e;
}

Exponent Exponent::operator-(const Exponent& o) const { return *this + (-o); }

Exponent Exponent::operator*(const Exponent& o) const {
    if (exact_ && o.exact_) {
        std::int64_t n, d;
        if (!mul_overflows(num_, o.num_, &n) &&
            !mul_overflows(den_, o.den_, &d)) {
            return Exponent(n, d);
        }
    }
    Exponent e;
    e.exact_ = false;
    e.approx_ = value() * o.value();
    return e;
}

bool Exponent::operator==(const Exponent& o) const {
    if (exact_ && o.exact_) {
        return num_ == o.num_ && den_ == o.den_;
    }
    return std::abs(value() - o.value()) <= kFloatEps;
}

bool Exponent::is_zero() const {
    return exact_ ? num_ == 0 : std::abs(approx_) <= kFloatEps;
}

Dimension Dimension::operator*(const Dimension& o) const {
    return {h + o.h, v + o.v, t + o.t};
}

Dimension Dimension::pow(const Exponent& e) const {
    return {h * e, v * e, t * e};
}

bool Dimension::operator==(const Dimension& o) const {
    return h == o.h && v == o.v && t == o.t;
}

bool Dimension::dimensionless() const {
    return h.is_zero() && v.is_zero() && t.is_zero();
}

Dimension dim_of(Symbol s, const ModelParams& p) {
    const Exponent zero;
    const Exponent one(1);
    const Exponent alpha = Exponent::from_double(p.alpha);
    const Exponent beta = Exponent::from_double(p.beta);
    const Dimension output{zero, one, Exponent(-1)};   // V T^-1
    const Dimension head{one, zero, zero};             // H
    const Dimension wage = output * head.pow(Exponent(-1)); // H^-1 V T^-1
    switch (s) {
    case Symbol::Y:
    case Symbol::W:
        return output;
    case Symbol::L1:
    case Symbol::L2:
        return head;
    case Symbol::w1:
    case Symbol::w2:
    case Symbol::wbar:
        return wage;
    case Symbol::A:
        // Y / (headcount)^alpha
        return output * head.pow(-alpha);
    case Symbol::B:
        // L2 / w2^beta
        return head * wage.pow(-beta);
    case Symbol::g:
    case Symbol::v:
    case Symbol::Z:
    case Symbol::alpha:
    case Symbol::beta:
    case Symbol::gamma:
    case Symbol::c:
        return {zero, zero, zero};
    }
    throw ValidationError("unknown symbol");
}

Symbol symbol_from_name(std::string_view name) {
    if (name == "Y") return Symbol::Y;
    if (name == "L1") return Symbol::L1;
    if (name == "L2") return Symbol::L2;
    if (name == "w1") return Symbol::w1;
    if (name == "w2") return Symbol::w2;
    if (name == "wbar") return Symbol::wbar;
    if (name == "A") return Symbol::A;
    if (name == "B") return Symbol::B;
    if (name == "W") return Symbol::W;
    if (name == "g") return Symbol::g;
    if (name == "v") return Symbol::v;
    if (name == "Z") return Symbol::Z;
    if (name == "alpha") return Symbol::alpha;
    if (name == "beta") return Symbol::beta;
    if (name == "gamma") return Symbol::gamma;
    if (name == "c") return Symbol::c;
    throw ValidationError("unknown quantity name: " + std::string(name));
}

double scale_factor(const Dimension& d, const UnitRescaling& r) {
    if (!(r.lambda_h > 0.0 && r.lambda_v > 0.0 && r.lambda_t > 0.0)) {
        throw ValidationError("unit scale factors must be positive");
    }
    return std::pow(r.lambda_h, d.h.value()) *
           std::pow(r.lambda_v, d.v.value()) *
           std::pow(r.lambda_t, d.t.value());
}

ModelParams apply_rescaling(const ModelParams& p, const UnitRescaling& r) {
    p.validate();
    ModelParams q = p;
    q.L1 = p.L1 * scale_factor(dim_of(Symbol::L1, p), r);
    q.A = p.A * scale_factor(dim_of(Symbol::A, p), r);
    q.B = p.B * scale_factor(dim_of(Symbol::B, p), r);
    return q;
}

} // namespace dlm
