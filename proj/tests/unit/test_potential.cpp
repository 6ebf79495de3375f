#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "khplasma/errors.hpp"
#include "khplasma/potential.hpp"

using namespace khplasma;

namespace {

ModelParams params(double lambda_D, double alpha0, double F = 0.0) {
    return ModelParams::hydrogen(lambda_D, F, alpha0);
}

}  // namespace

TEST(EcscEval, CoulombLimit) {
    EXPECT_NEAR(ecsc_eval(1.0, params(1e12, 0.0)), -1.0, 1e-9);
}

TEST(EcscEval, VanishesAtCosineZero) {
    const double lambda = 3.0;
    EXPECT_NEAR(ecsc_eval(lambda * std::numbers::pi / 2.0, params(lambda, 0.0)), 0.0, 1e-15);
}

TEST(EcscEval, UnitScreeningLength) {
    // -exp(-1) cos(1), 30-digit reference.
    EXPECT_NEAR(ecsc_eval(1.0, params(1.0, 0.0)), -0.198766110346412940628803191344, 1e-15);
}

TEST(EcscEval, RejectsNonPositiveRadius) {
    EXPECT_THROW(ecsc_eval(0.0, params(10.0, 0.0)), DomainError);
    EXPECT_THROW(ecsc_eval(-1.0, params(10.0, 0.0)), DomainError);
}

TEST(DressedPair, UndressedIsTwiceTheScreenedCoulomb) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> radius(1e-3, 50.0);
    std::uniform_real_distribution<double> screening(0.5, 500.0);
    for (int i = 0; i < 200; ++i) {
        const ModelParams p = params(screening(rng), 0.0);
        const double r = radius(rng);
        EXPECT_EQ(dressed_pair_eval(r, p), 2.0 * ecsc_eval(r, p));
    }
}

TEST(DressedPair, SumsTheShiftedTerms) {
    // ecsc(2.001) + ecsc(1.999) at lambda_D = 100, 30-digit reference.
    EXPECT_NEAR(dressed_pair_eval(2.0, params(100.0, 0.001)), -0.98000289010737397173152275014,
                1e-14);
}

TEST(DressedPair, PoleAtAlpha0) {
    const ModelParams p = params(100.0, 0.01);
    const double near = std::abs(dressed_pair_eval(0.01 + 1e-8, p));
    const double nearer = std::abs(dressed_pair_eval(0.01 + 1e-10, p));
    EXPECT_GT(near, 1e7);
    EXPECT_GT(nearer, 50.0 * near);
    EXPECT_THROW(dressed_pair_eval(0.01, p), SingularityError);
    EXPECT_THROW(dressed_pair_eval(0.01 + 1e-15, p), SingularityError);
    EXPECT_THROW(dressed_pair_eval(-0.5, p), DomainError);
}

TEST(DressedPair, InsideThePoleUsesTheSignedArgument) {
    // For r < alpha0 the r - alpha0 term flips sign: -(A/x) with x < 0 is repulsive.
    const ModelParams p = params(1e12, 0.5);
    EXPECT_NEAR(dressed_pair_eval(0.25, p), -1.0 / 0.75 + 1.0 / 0.25, 1e-9);
}

TEST(V0Quadrature, UndressedMatchesThePair) {
    const ModelParams p = params(7.0, 0.0);
    for (int nodes : {8, 64, 200}) {
        EXPECT_NEAR(v0_quadrature(1.3, p, nodes), dressed_pair_eval(1.3, p), 1e-15);
    }
}

TEST(V0Quadrature, CoulombClosedForm) {
    // (1/pi) int 2(-1/(r + a t)) / sqrt(1 - t^2) dt = -2 / sqrt(r^2 - a^2).
    const ModelParams p = params(std::numeric_limits<double>::infinity(), 0.1);
    for (double r : {0.2, 0.5, 1.0, 4.0}) {
        EXPECT_NEAR(v0_quadrature(r, p, 128), -2.0 / std::sqrt(r * r - 0.01), 1e-12) << r;
    }
}

TEST(V0Quadrature, EndpointFormAgreesAtSmallDressing) {
    const ModelParams p = params(100.0, 0.001);
    const double exact = v0_quadrature(2.0, p);
    const double approx = dressed_pair_eval(2.0, p);
    EXPECT_LT(std::abs(exact - approx) / std::abs(approx), 1e-6);
}

TEST(V0Quadrature, EndpointFormGapMatchesTheCoulombFormula) {
    // Relative gap of the endpoint approximation for the Coulomb core:
    // 1 - sqrt(1 - x^2) with x = alpha0 / r; screening only adds O(alpha0^2/lambda_D^2).
    const double alpha0 = 0.01;
    const ModelParams p = params(1e6, alpha0);
    for (double ratio : {10.0, 30.0, 100.0, 300.0}) {
        const double r = ratio * alpha0;
        const double gap = std::abs(v0_quadrature(r, p) / dressed_pair_eval(r, p) - 1.0);
        const double x = 1.0 / ratio;
        EXPECT_NEAR(gap, 1.0 - std::sqrt(1.0 - x * x), 1e-9) << ratio;
    }
}

TEST(V0Quadrature, SelfConvergence) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const double lambda = std::pow(10.0, 3.0 * unit(rng) - 0.5);
        const double alpha0 = 0.2 * unit(rng);
        const double r = 10.0 * alpha0 + 20.0 * unit(rng) + 1e-3;
        const ModelParams p = params(lambda, alpha0);
        const double v64 = v0_quadrature(r, p, 64);
        const double v128 = v0_quadrature(r, p, 128);
        // Scale floor: the integrand magnitude, for results near a zero of the cosine.
        const double scale = std::abs(v128) + 2.0 / r * std::exp(-(r - alpha0) / lambda);
        EXPECT_LT(std::abs(v64 - v128), 1e-10 * scale);
    }
}

TEST(V0Quadrature, Errors) {
    const ModelParams p = params(10.0, 0.1);
    EXPECT_THROW(v0_quadrature(0.1, p), DomainError);
    EXPECT_THROW(v0_quadrature(0.05, p), DomainError);
    EXPECT_THROW(v0_quadrature(1.0, p, 4), InputError);
}

TEST(TaylorCoefficients, UndressedNoField) {
    const EffectiveCoefficients c = taylor_coefficients(params(100.0, 0.0));
    EXPECT_DOUBLE_EQ(c.c_m1, -2.0);
    EXPECT_DOUBLE_EQ(c.c0, 0.02);
    EXPECT_EQ(c.c1, 0.0);
    EXPECT_DOUBLE_EQ(c.c2, -2.0 / 3.0 * 1e-6);
    EXPECT_DOUBLE_EQ(c.c3, 1.0 / 3.0 * 1e-8);
}

TEST(TaylorCoefficients, FieldEntersTheLinearTerm) {
    const EffectiveCoefficients c = taylor_coefficients(params(100.0, 0.0001, 0.01));
    // 0.01 + alpha0^2 / lambda^4 = 0.01 + 1e-16; the alpha0^6 term is ~1e-42.
    EXPECT_NEAR(c.c1, 0.01, 2e-16);
    EXPECT_NEAR(c.c1 - 0.01, 1e-16, 2e-18);
}

TEST(TaylorCoefficients, LeadingTermIsTheDoubledCoulomb) {
    ModelParams p = params(3.0, 0.2, 0.5);
    p.Z = 2.0;
    p.e_charge = 1.5;
    EXPECT_DOUBLE_EQ(taylor_coefficients(p).c_m1, -2.0 * 2.0 * 1.5 * 1.5);
}

TEST(TaylorCoefficients, UnscreenedLimit) {
    const EffectiveCoefficients c =
        taylor_coefficients(params(std::numeric_limits<double>::infinity(), 0.3, 0.2));
    EXPECT_EQ(c.c0, 0.0);
    EXPECT_EQ(c.c1, 0.2);
    EXPECT_EQ(c.c2, 0.0);
    EXPECT_EQ(c.c3, 0.0);
}

TEST(VeffSeries, PolynomialArithmetic) {
    const EffectiveCoefficients c = taylor_coefficients(params(100.0, 0.0));
    EXPECT_NEAR(veff_series_eval(1.0, c), -2.0 + 0.02 - 2.0 / 3.0 * 1e-6 + 1.0 / 3.0 * 1e-8, 1e-15);
    EXPECT_THROW(veff_series_eval(0.0, c), DomainError);
}

TEST(VeffSeries, AgreesWithTheExactPotentialAtSmallRadius) {
    // r >> alpha0 so the dropped alpha0^2/r^3 pole terms stay below 1e-7 relative.
    const ModelParams p = params(100.0, 1e-5, 0.01);
    const EffectiveCoefficients c = taylor_coefficients(p);
    for (double r = 0.05; r <= 0.05 * p.lambda_D; r += 0.05) {
        const double exact = model_potential(r, p);
        EXPECT_LT(std::abs(veff_series_eval(r, c) - exact), 1e-6 * std::abs(exact)) << r;
    }
}

TEST(VeffSeries, BreaksDownOutsideSmallRatio) {
    const ModelParams p = params(1.0, 0.001, 0.1);
    const double exact = model_potential(10.0, p);
    const double series = veff_series_eval(10.0, taylor_coefficients(p));
    EXPECT_GT(std::abs(series - exact), 10.0 * std::abs(exact));
}

TEST(VeffSeries, RegularPartIsACubic) {
    // V - c_m1/r is a cubic: second differences affine, third differences constant.
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const EffectiveCoefficients c{coef(rng), coef(rng), coef(rng), coef(rng), coef(rng)};
        const double h = 0.125;
        auto q = [&](double r) { return veff_series_eval(r, c) - c.c_m1 / r; };
        std::vector<double> third;
        for (int k = 0; k < 12; ++k) {
            const double r = 0.5 + k * h;
            third.push_back(q(r + 3 * h) - 3 * q(r + 2 * h) + 3 * q(r + h) - q(r));
        }
        for (double t : third) EXPECT_NEAR(t, 6.0 * c.c3 * h * h * h, 1e-12);
    }
}
