#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dlm/equilibrium.hpp"
#include "dlm/units.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace dlm;

constexpr double kPi = std::numbers::pi;

namespace {

double rel(double a, double b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

ModelParams unit_params() {
    return {0.5, 0.5, 0.5, 0.5, 1.0, 1.0, 1.0};
}

} // namespace

TEST_CASE("exponents reconstruct simple rationals exactly") {
    CHECK(Exponent::from_double(0.5).exact());
    CHECK(Exponent::from_double(0.5) == Exponent(1, 2));
    CHECK(Exponent::from_double(-0.75) == Exponent(-3, 4));
    CHECK(Exponent::from_double(3.0 / 7.0) == Exponent(3, 7));
    CHECK(Exponent::from_double(0.0) == Exponent(0));
    CHECK_FALSE(Exponent::from_double(kPi).exact());
    CHECK(Exponent::from_double(kPi).value() ==
          doctest::Approx(kPi).epsilon(1e-15));
}

TEST_CASE("exponent arithmetic stays exact until a float enters") {
    const Exponent half(1, 2);
    const Exponent third(1, 3);
    CHECK((half + third) == Exponent(5, 6));
    CHECK((half + third).exact());
    CHECK((half - third) == Exponent(1, 6));
    CHECK((half * third) == Exponent(1, 6));
    CHECK((-half) == Exponent(-1, 2));
    CHECK((half - half).is_zero());

    const Exponent loose = Exponent::from_double(kPi);
    CHECK_FALSE((half + loose).exact());
    CHECK((half + loose).value() ==
          doctest::Approx(0.5 + kPi).epsilon(1e-14));
    // float-mode comparison tolerates 1e-12
    CHECK((half + loose) == (loose + half));
    CHECK_THROWS_AS(Exponent(1, 0), ValidationError);
}

TEST_CASE("exponent reduction normalizes sign and common factors") {
    CHECK(Exponent(2, 4) == Exponent(1, 2));
    CHECK(Exponent(1, -2) == Exponent(-1, 2));
    CHECK(Exponent(-2, -4) == Exponent(1, 2));
}

TEST_CASE("dimension table matches the accounting of the model") {
    const ModelParams p = unit_params();
    const Dimension wage = dim_of(Symbol::w2, p);
    CHECK(wage.h == Exponent(-1));
    CHECK(wage.v == Exponent(1));
    CHECK(wage.t == Exponent(-1));
    CHECK(dim_of(Symbol::wbar, p) == wage);
    CHECK(dim_of(Symbol::w1, p) == wage);

    const Dimension tfp = dim_of(Symbol::A, p);
    CHECK(tfp.h == Exponent(-1, 2)); // alpha = 1/2 exactly
    CHECK(tfp.v == Exponent(1));
    CHECK(tfp.t == Exponent(-1));

    const Dimension supply = dim_of(Symbol::B, p);
    CHECK(supply.h == Exponent(3, 2)); // 1 + beta
    CHECK(supply.v == Exponent(-1, 2));
    CHECK(supply.t == Exponent(1, 2));

    CHECK(dim_of(Symbol::g, p).dimensionless());
    CHECK(dim_of(Symbol::v, p).dimensionless());
    CHECK(dim_of(Symbol::Z, p).dimensionless());
    CHECK(dim_of(Symbol::alpha, p).dimensionless());
    CHECK(dim_of(Symbol::L1, p) == dim_of(Symbol::L2, p));
    CHECK(dim_of(Symbol::Y, p) == dim_of(Symbol::W, p));
}

TEST_CASE("dimensions compose like the quantities they describe") {
    const ModelParams p = unit_params();
    // Y = wbar * L dimensionally
    CHECK(dim_of(Symbol::Y, p) ==
          dim_of(Symbol::wbar, p) * dim_of(Symbol::L1, p));
    // B = L2 / w2^beta dimensionally
    const Dimension rhs =
        dim_of(Symbol::L2, p) *
        dim_of(Symbol::w2, p).pow(Exponent::from_double(-p.beta));
    CHECK(dim_of(Symbol::B, p) == rhs);
    // A = Y / (L1 + c L2)^alpha dimensionally
    const Dimension prod =
        dim_of(Symbol::Y, p) *
        dim_of(Symbol::L1, p).pow(Exponent::from_double(-p.alpha));
    CHECK(dim_of(Symbol::A, p) == prod);
}

TEST_CASE("odd supply elasticities keep exact rational bookkeeping") {
    ModelParams p = unit_params();
    p.beta = 3.0 / 7.0;
    const Dimension supply = dim_of(Symbol::B, p);
    CHECK(supply.h.exact());
    CHECK(supply.h == Exponent(10, 7));
    CHECK(supply.v == Exponent(-3, 7));
}

TEST_CASE("symbol lookup accepts every field name and nothing else") {
    CHECK(symbol_from_name("w2") == Symbol::w2);
    CHECK(symbol_from_name("wbar") == Symbol::wbar);
    CHECK(symbol_from_name("Z") == Symbol::Z);
    CHECK(symbol_from_name("gamma") == Symbol::gamma);
    CHECK_THROWS_AS(symbol_from_name("q"), ValidationError);
    CHECK_THROWS_AS(symbol_from_name(""), ValidationError);
}

TEST_CASE("identity rescaling is a no-op") {
    const ModelParams p = unit_params();
    const ModelParams q = apply_rescaling(p, {});
    CHECK(q.L1 == p.L1);
    CHECK(q.A == p.A);
    CHECK(q.B == p.B);
}

TEST_CASE("scale factors follow the dimension exponents") {
    const ModelParams p = unit_params();
    const UnitRescaling money{1.0, 1000.0, 1.0};
    CHECK(scale_factor(dim_of(Symbol::wbar, p), money) ==
          doctest::Approx(1000.0).epsilon(1e-15));
    CHECK(scale_factor(dim_of(Symbol::g, p), money) == 1.0);
    const UnitRescaling heads{2.0, 1.0, 1.0};
    CHECK(scale_factor(dim_of(Symbol::B, p), heads) ==
          doctest::Approx(std::pow(2.0, 1.5)).epsilon(1e-15));
    CHECK_THROWS_AS(scale_factor(dim_of(Symbol::g, p), {0.0, 1.0, 1.0}),
                    ValidationError);
}

TEST_CASE("solutions commute with unit rescalings") {
    std::mt19937_64 rng(140914);
    std::uniform_real_distribution<double> log_lambda(std::log(0.1),
                                                      std::log(10.0));
    std::uniform_real_distribution<double> mid(0.15, 0.85);
    std::uniform_real_distribution<double> elast(0.2, 1.5);
    for (int trial = 0; trial < 100; ++trial) {
        ModelParams p = unit_params();
        p.alpha = mid(rng);
        p.gamma = mid(rng);
        p.beta = elast(rng);
        const UnitRescaling r{std::exp(log_lambda(rng)),
                              std::exp(log_lambda(rng)),
                              std::exp(log_lambda(rng))};
        const Equilibrium base = solve_equilibrium(p);
        const Equilibrium moved = solve_equilibrium(apply_rescaling(p, r));

        // pure numbers do not move
        CHECK(rel(moved.scaled.g, base.scaled.g) < 1e-13);
        CHECK(rel(moved.scaled.v, base.scaled.v) < 1e-13);
        CHECK(rel(moved.Z, base.Z) < 1e-13);

        // dimensioned quantities move by exactly their own factors
        const double wage_f = scale_factor(dim_of(Symbol::wbar, p), r);
        const double head_f = scale_factor(dim_of(Symbol::L1, p), r);
        const double out_f = scale_factor(dim_of(Symbol::Y, p), r);
        CHECK(rel(moved.w2, base.w2 * wage_f) < 1e-13);
        CHECK(rel(moved.wbar, base.wbar * wage_f) < 1e-13);
        CHECK(rel(moved.wbar1, base.wbar1 * wage_f) < 1e-13);
        CHECK(rel(moved.L2, base.L2 * head_f) < 1e-13);
        CHECK(rel(moved.L, base.L * head_f) < 1e-13);
        CHECK(rel(moved.Y, base.Y * out_f) < 1e-13);
        CHECK(rel(moved.W, base.W * out_f) < 1e-13);
    }
}

TEST_CASE("money rescaling multiplies every wage a thousandfold") {
    const ModelParams p = unit_params();
    const UnitRescaling money{1.0, 1000.0, 1.0};
    const Equilibrium base = solve_equilibrium(p);
    const Equilibrium rich = solve_equilibrium(apply_rescaling(p, money));
    CHECK(rel(rich.wbar, 1000.0 * base.wbar) < 1e-13);
    CHECK(rel(rich.L2, base.L2) < 1e-13);
    CHECK(rel(rich.Z, base.Z) < 1e-13);
}
