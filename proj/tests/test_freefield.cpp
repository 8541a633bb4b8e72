#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "qcwave/freefield.hpp"
#include "qcwave/verify.hpp"
#include "support/random_inputs.hpp"

using namespace qcwave;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an Error";
    return ErrorCode::InvalidArgument;
}

IncidentWave random_wave(std::mt19937_64& rng, WaveMode mode) {
    std::uniform_real_distribution<double> angle(0.05, 0.5 * std::numbers::pi - 0.05);
    std::uniform_real_distribution<double> part(-2, 2);
    return {mode, Complex(part(rng), part(rng)), angle(rng)};
}

}  // namespace

TEST(ModeVector, Examples) {
    const ModeVector s1 = mode_vector(QcMaterial{2, 1, 2, 1}, WaveMode::S1);
    EXPECT_NEAR(s1[0], 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(s1[1], 1 / std::sqrt(2.0), 1e-15);
    const QcMaterial decoupled{2, 0, 1, 1};
    EXPECT_EQ(mode_vector(decoupled, WaveMode::S1), (ModeVector{1, 0}));
    EXPECT_EQ(mode_vector(decoupled, WaveMode::S2), (ModeVector{0, 1}));
}

TEST(ModeVector, OrthonormalEigenvectors) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 100; ++i) {
        const QcMaterial m = testing_support::random_material(rng);
        const ModeVector a = mode_vector(m, WaveMode::S1);
        const ModeVector b = mode_vector(m, WaveMode::S2);
        EXPECT_NEAR(std::hypot(a[0], a[1]), 1.0, 1e-15);
        EXPECT_NEAR(std::hypot(b[0], b[1]), 1.0, 1e-15);
        EXPECT_NEAR(a[0] * b[0] + a[1] * b[1], 0.0, 1e-15);
        // C a = a1 a
        const auto d = decompose(m);
        const auto c = coefficient_matrix(m);
        for (int r = 0; r < 2; ++r)
            EXPECT_NEAR(c[r][0] * a[0] + c[r][1] * a[1], d.a1 * a[r], 1e-12 * d.a1);
    }
}

TEST(FullplaneIncident, UnitPhaseAtOrigin) {
    const QcMaterial m{3, 1, 2, 1};
    const IncidentWave wave{WaveMode::S2, Complex(0.5, -1.5), 0.7};
    const FieldValue f = fullplane_incident(m, wave, 2.0, {0, 0});
    const ModeVector p = mode_vector(m, WaveMode::S2);
    EXPECT_EQ(f.u3, wave.amplitude * p[0]);
    EXPECT_EQ(f.w3, wave.amplitude * p[1]);
}

TEST(FullplaneIncident, InvalidWaves) {
    const QcMaterial m{3, 1, 2, 1};
    for (double phi : {0.0, 0.5 * std::numbers::pi, -0.1, 2.0, std::nan("")})
        EXPECT_EQ(code_of([&] { fullplane_incident(m, {WaveMode::S1, 1.0, phi}, 1.0, {0, 0}); }),
                  ErrorCode::InvalidIncidenceAngle);
    EXPECT_EQ(code_of([&] { fullplane_incident(m, {WaveMode::S1, Complex(INFINITY, 0), 0.3}, 1.0, {0, 0}); }),
              ErrorCode::InvalidAmplitude);
    EXPECT_EQ(code_of([&] { fullplane_incident(m, {WaveMode::S1, 1.0, 0.3}, 0.0, {0, 0}); }),
              ErrorCode::NonPositiveFrequency);
}

TEST(FullplaneIncident, PhaseFollowsPropagationDirection) {
    const QcMaterial m{3, 1, 2, 1};
    const double omega = 1.3;
    const IncidentWave wave{WaveMode::S1, 1.0, 0.4};
    const double k1 = wave_parameters(m, omega).k1;
    const Point2 along{std::cos(0.4), std::sin(0.4)};
    const Point2 across{-std::sin(0.4), std::cos(0.4)};
    const FieldValue f0 = fullplane_incident(m, wave, omega, {0, 0});
    const FieldValue fa = fullplane_incident(m, wave, omega, (2 * std::numbers::pi / k1) * along);
    const FieldValue fc = fullplane_incident(m, wave, omega, 3.7 * across);
    EXPECT_NEAR(std::abs(fa.u3 - f0.u3), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(fc.w3 - f0.w3), 0.0, 1e-14);
    const FieldValue quarter = fullplane_incident(m, wave, omega, (0.5 * std::numbers::pi / k1) * along);
    EXPECT_NEAR(std::abs(quarter.u3 - Complex(0, 1) * f0.u3), 0.0, 1e-14);
}

TEST(HalfplaneFreefield, DoublesOnSurface) {
    const QcMaterial m{3, 1, 2, 1};
    const IncidentWave wave{WaveMode::S2, Complex(1, 1), 0.9};
    for (double x1 : {-4.0, 0.0, 1.7}) {
        const FieldValue h = halfplane_freefield(m, wave, 2.0, {x1, 0.0});
        const FieldValue f = fullplane_incident(m, wave, 2.0, {x1, 0.0});
        EXPECT_EQ(h.u3, 2.0 * f.u3);
        EXPECT_EQ(h.w3, 2.0 * f.w3);
    }
    EXPECT_EQ(code_of([&] { halfplane_freefield(m, wave, 2.0, {0, 0.1}); }), ErrorCode::PointOutsideHalfPlane);
}

TEST(FreefieldTraction, VanishesOnSurface) {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 50; ++i) {
        const QcMaterial m = testing_support::random_material(rng);
        const double omega = testing_support::random_omega(rng);
        for (WaveMode mode : {WaveMode::S1, WaveMode::S2}) {
            const IncidentWave wave = random_wave(rng, mode);
            const FieldTraction t = freefield_traction(m, wave, omega, {0.37 / omega, 0.0}, true, {0, 1});
            const FieldStress s = freefield_stress(m, wave, omega, {0.37 / omega, 0.0}, false);
            const double scale = vector_norm(s.sigma[1], s.h[1]);
            EXPECT_LE(vector_norm(t.t3, t.g3), 1e-13 * scale);
        }
    }
}

TEST(FreefieldTraction, DecoupledS1HasNoPhasonTraction) {
    const QcMaterial m{2, 0, 1, 1};
    for (Point2 x : {Point2{0.3, -0.2}, Point2{-1.0, -3.0}}) {
        const FieldTraction t = freefield_traction(m, {WaveMode::S1, 1.0, 0.6}, 1.0, x, true, {0.6, 0.8});
        EXPECT_EQ(t.g3, Complex(0.0));
        EXPECT_NE(t.t3, Complex(0.0));
    }
}

TEST(FreefieldStress, MatchesFiniteDifferences) {
    const QcMaterial m{3, 1.2, 2, 1.5};
    const double omega = 2.0;
    const IncidentWave wave{WaveMode::S1, Complex(0.3, 0.8), 0.5};
    const Point2 x{0.4, -0.9};
    const double h = 1e-5;
    const auto f = [&](Point2 p) { return halfplane_freefield(m, wave, omega, p); };
    const FieldStress s = freefield_stress(m, wave, omega, x, true);
    for (int j = 0; j < 2; ++j) {
        const Point2 step = j == 0 ? Point2{h, 0} : Point2{0, h};
        const FieldValue a = f(x + step);
        const FieldValue b = f(x - step);
        const Complex du = (a.u3 - b.u3) / (2 * h);
        const Complex dw = (a.w3 - b.w3) / (2 * h);
        EXPECT_LT(std::abs(s.sigma[j] - (m.c44 * du + m.R3 * dw)), 1e-8);
        EXPECT_LT(std::abs(s.h[j] - (m.R3 * du + m.K2 * dw)), 1e-8);
    }
}

TEST(PlaneWave, AnalyticResidualIsRoundoff) {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 20; ++i) {
        const QcMaterial m = testing_support::random_material(rng);
        const double omega = testing_support::random_omega(rng);
        for (WaveMode mode : {WaveMode::S1, WaveMode::S2}) {
            const IncidentWave wave = random_wave(rng, mode);
            const Point2 x = testing_support::random_point(rng, 10 / wave_parameters(m, omega).k1);
            EXPECT_LT(plane_wave_analytic_residual(m, wave, omega, x, false).relative_residual, 1e-12);
            const Point2 below{x.x1, -std::abs(x.x2)};
            EXPECT_LT(plane_wave_analytic_residual(m, wave, omega, below, true).relative_residual, 1e-12);
        }
    }
}

TEST(PlaneWave, FiniteDifferenceResidual) {
    const QcMaterial m{2, 1, 2, 1};
    const double omega = 1.0;
    for (WaveMode mode : {WaveMode::S1, WaveMode::S2}) {
        const IncidentWave wave{mode, 1.0, 0.8};
        const double k = mode == WaveMode::S1 ? wave_parameters(m, omega).k1 : wave_parameters(m, omega).k2;
        const double h = 2 * std::numbers::pi / k / 2000;
        EXPECT_LT(pde_residual(plane_wave_field(m, wave, omega, false), m, omega, {1.3, 2.1}, h).relative_residual, 1e-6);
        EXPECT_LT(pde_residual(plane_wave_field(m, wave, omega, true), m, omega, {1.3, -2.1}, h).relative_residual, 1e-6);
    }
}
