#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "qcwave/specfun.hpp"
#include "support/oracles.hpp"

using namespace qcwave;

namespace {

constexpr double kFirstZeroJ0 = 2.404825557695773;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(Bessel, ValuesAtOrigin) {
    EXPECT_EQ(bessel_j0(0.0), 1.0);
    EXPECT_EQ(bessel_j1(0.0), 0.0);
}

TEST(Bessel, FirstZeroOfJ0) {
    const long double zero = oracle::bisect([](long double x) { return oracle::j0_series(x); }, 2.0L, 3.0L);
    EXPECT_NEAR(double(zero), kFirstZeroJ0, 1e-15);
    EXPECT_LT(std::abs(bessel_j0(kFirstZeroJ0)), 1e-10);
    EXPECT_LT(std::abs(bessel_j0(double(zero))), 1e-15);
}

TEST(Bessel, SecondKindDomain) {
    for (double x : {0.0, -1.0}) {
        EXPECT_THROW(bessel_y0(x), Error);
        EXPECT_THROW(bessel_y1(x), Error);
        EXPECT_THROW(hankel1_0(x), Error);
        EXPECT_THROW(hankel1_1(x), Error);
        EXPECT_THROW(macdonald_k0_neg_i(x), Error);
        EXPECT_THROW(macdonald_k1_neg_i(x), Error);
    }
    EXPECT_THROW(bessel_j0(-1.0), Error);
    EXPECT_THROW(bessel_j1(-0.5), Error);
    try {
        bessel_y0(0.0);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DomainError);
    }
}

TEST(Bessel, Y0NearOriginIsLogarithmic) {
    const double y = bessel_y0(1e-8);
    EXPECT_TRUE(std::isfinite(y));
    EXPECT_LT(y, -11.0);
    const double leading = 2 / std::numbers::pi * (std::log(0.5e-8) + std::numbers::egamma);
    EXPECT_LT(rel(y, leading), 1e-12);
    EXPECT_LT(rel(y, oracle::y0(1e-8)), 1e-12);
}

TEST(Bessel, MatchesOracleOnGrid) {
    for (int i = 1; i <= 200; ++i) {
        const double x = 12.0 * i / 200;
        EXPECT_LT(rel(bessel_j0(x), oracle::j0(x)), 1e-10) << x;
        EXPECT_LT(rel(bessel_j1(x), oracle::j1(x)), 1e-10) << x;
        EXPECT_LT(rel(bessel_y0(x), oracle::y0(x)), 1e-10) << x;
        EXPECT_LT(rel(bessel_y1(x), oracle::y1(x)), 1e-10) << x;
    }
}

TEST(Bessel, MatchesAsymptoticOracleForLargeArguments) {
    for (double x = 21.0; x < 500.0; x *= 1.37) {
        const double env = std::sqrt(2 / (std::numbers::pi * x));
        EXPECT_LT(std::abs(bessel_j0(x) - oracle::j0(x)), 1e-13 * env) << x;
        EXPECT_LT(std::abs(bessel_j1(x) - oracle::j1(x)), 1e-13 * env) << x;
        EXPECT_LT(std::abs(bessel_y0(x) - oracle::y0(x)), 1e-13 * env) << x;
        EXPECT_LT(std::abs(bessel_y1(x) - oracle::y1(x)), 1e-13 * env) << x;
    }
}

TEST(Bessel, AgreesWithStandardLibraryAcrossSplit) {
    for (double x = 7.5; x < 8.5; x += 0.01) {
        EXPECT_NEAR(bessel_j0(x), std::cyl_bessel_j(0.0, x), 1e-9);
        EXPECT_NEAR(bessel_y1(x), std::cyl_neumann(1.0, x), 1e-9);
    }
}

TEST(Bessel, Wronskian) {
    for (double x : {0.1, 1.0, 10.0, 50.0}) {
        const double w = bessel_j1(x) * bessel_y0(x) - bessel_j0(x) * bessel_y1(x);
        EXPECT_LT(rel(w, 2 / (std::numbers::pi * x)), 1e-9) << x;
    }
}

TEST(Bessel, DerivativeRecurrences) {
    const double h = 1e-5;
    for (double x : {0.3, 1.0, 2.5, 7.9, 8.1, 15.0, 40.0}) {
        EXPECT_NEAR((bessel_j0(x + h) - bessel_j0(x - h)) / (2 * h), -bessel_j1(x), 1e-6) << x;
        EXPECT_NEAR((bessel_y0(x + h) - bessel_y0(x - h)) / (2 * h), -bessel_y1(x), 1e-6) << x;
    }
}

TEST(Hankel, Definition) {
    for (double x : {0.2, 3.0, 8.0, 8.0001, 30.0}) {
        EXPECT_EQ(hankel1_0(x).real(), bessel_j0(x));
        EXPECT_EQ(hankel1_0(x).imag(), bessel_y0(x));
        EXPECT_EQ(hankel1_1(x).real(), bessel_j1(x));
        EXPECT_EQ(hankel1_1(x).imag(), bessel_y1(x));
    }
}

TEST(Hankel, PurelyImaginaryAtZeroOfJ0) {
    const Complex h = hankel1_0(kFirstZeroJ0);
    EXPECT_LT(std::abs(h.real()), 1e-10);
    EXPECT_GT(std::abs(h.imag()), 0.5);
}

TEST(Hankel, LargeArgumentAmplitude) {
    for (double x : {50.0, 100.0}) {
        EXPECT_NEAR(std::abs(hankel1_0(x)) * std::sqrt(x), std::sqrt(2 / std::numbers::pi), 1e-2);
        EXPECT_NEAR(std::abs(hankel1_1(x)) * std::sqrt(x), std::sqrt(2 / std::numbers::pi), 1e-2);
    }
}

TEST(Macdonald, MatchesHankelIdentity) {
    for (double x : {0.5, 1.0, 5.0}) {
        const Complex lhs = macdonald_k0_neg_i(x) / (2 * std::numbers::pi);
        const Complex rhs = Complex(0, 0.25) * hankel1_0(x);
        EXPECT_LT(std::abs(lhs - rhs), 1e-12 * std::abs(rhs)) << x;
    }
}

TEST(Macdonald, MatchesComplexSeries) {
    for (double x : {0.05, 1.0, 3.0, 7.0}) {
        const auto k0 = oracle::k0_series({0.0L, -(long double)x});
        const Complex ref0(double(k0.real()), double(k0.imag()));
        EXPECT_LT(std::abs(macdonald_k0_neg_i(x) - ref0), 1e-12 * std::abs(ref0)) << x;
    }
}

// K1(-ix) = -(pi/2) H1(x): the order-one connection constant checked
// against the ascending series of K1 continued to z = -ix.
TEST(Macdonald, OrderOneConnection) {
    for (double x : {0.05, 0.5, 1.0, 3.0, 7.0}) {
        const auto k1 = oracle::k1_series({0.0L, -(long double)x});
        const Complex ref(double(k1.real()), double(k1.imag()));
        EXPECT_LT(std::abs(macdonald_k1_neg_i(x) - ref), 1e-12 * std::abs(ref)) << x;
    }
}

TEST(Macdonald, DerivativeRule) {
    const double h = 1e-5;
    for (double x : {0.5, 1.0, 4.0, 9.0, 25.0}) {
        const Complex fd = (macdonald_k0_neg_i(x + h) - macdonald_k0_neg_i(x - h)) / (2 * h);
        // d/dx K0(-ix) = -K1(-ix) * (-i)
        const Complex expected = -Complex(0, -1) * macdonald_k1_neg_i(x);
        EXPECT_LT(std::abs(fd - expected), 1e-6) << x;
    }
}
