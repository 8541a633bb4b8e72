#ifndef QCWAVE_FREEFIELD_HPP
#define QCWAVE_FREEFIELD_HPP

// Time-harmonic plane shear waves. Each mode travels with a fixed
// phonon/phason polarization taken from the columns of Q:
//     S1 (fast, k1): (cos psi, sin psi)
//     S2 (slow, k2): (-sin psi, cos psi)
// and propagation direction (cos phi, sin phi). In the half-plane x2 <= 0 the
// free field adds the reflected wave with the x2 wavevector component flipped.

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qcwave/halfplane.hpp"

namespace qcwave {

enum class WaveMode { S1, S2 };

struct IncidentWave {
    WaveMode mode = WaveMode::S1;
    Complex amplitude{1.0, 0.0};
    double phi = 0.25 * std::numbers::pi;  // strictly inside (0, pi/2)

    friend bool operator==(const IncidentWave&, const IncidentWave&) = default;
};

struct FieldValue {
    Complex u3;  // phonon displacement
    Complex w3;  // phason displacement
};

/// Stresses of a scalar field pair: sigma[j] = sigma_3j, h[j] = H_3j.
struct FieldStress {
    std::array<Complex, 2> sigma{};
    std::array<Complex, 2> h{};
};

struct FieldTraction {
    Complex t3;  // phonon traction
    Complex g3;  // phason traction
};

inline void validate(const IncidentWave& wave) {
    if (!(wave.phi > 0.0 && wave.phi < 0.5 * std::numbers::pi)) {
        std::ostringstream os;
        os.precision(17);
        os << "incidence angle " << wave.phi << " is not inside (0, pi/2)";
        throw Error(ErrorCode::InvalidIncidenceAngle, os.str());
    }
    if (!std::isfinite(wave.amplitude.real()) || !std::isfinite(wave.amplitude.imag()))
        throw Error(ErrorCode::InvalidAmplitude, "amplitude must be finite");
}

using ModeVector = std::array<double, 2>;

inline ModeVector mode_vector(const SpectralDecomposition& d, WaveMode mode) {
    const double c = d.cos_psi();
    const double s = d.sin_psi();
    if (mode == WaveMode::S1) return {c, s};
    return {-s, c};
}

inline ModeVector mode_vector(const QcMaterial& m, WaveMode mode) { return mode_vector(decompose(m), mode); }

namespace detail {

struct PlaneWave {
    ModeVector polarization{};
    double k = 0.0;
    Complex amplitude;
    double cos_phi = 1.0;
    double sin_phi = 0.0;

    PlaneWave(const QcMaterial& m, const IncidentWave& wave, double omega) {
        validate(wave);
        const SpectralDecomposition d = decompose(m);
        const WaveParameters w = wave_parameters(d, m.rho, omega);
        polarization = mode_vector(d, wave.mode);
        k = wave.mode == WaveMode::S1 ? w.k1 : w.k2;
        amplitude = wave.amplitude;
        cos_phi = std::cos(wave.phi);
        sin_phi = std::sin(wave.phi);
    }

    Complex incident_phase(Point2 x) const {
        return std::exp(Complex(0.0, k * (x.x1 * cos_phi + x.x2 * sin_phi)));
    }

    Complex reflected_phase(Point2 x) const {
        return std::exp(Complex(0.0, k * (x.x1 * cos_phi - x.x2 * sin_phi)));
    }

    FieldValue field(Complex scalar) const {
        const Complex a = amplitude * scalar;
        return {a * polarization[0], a * polarization[1]};
    }

    // d/dx_j of the scalar factor for the incident and (optionally) reflected waves.
    std::array<Complex, 2> scalar_gradient(Point2 x, bool half_plane) const {
        const Complex ik(0.0, k);
        const Complex ein = incident_phase(x);
        std::array<Complex, 2> g{ik * cos_phi * ein, ik * sin_phi * ein};
        if (half_plane) {
            const Complex eref = reflected_phase(x);
            g[0] += ik * cos_phi * eref;
            g[1] -= ik * sin_phi * eref;
        }
        return g;
    }

    FieldStress stress(const QcMaterial& m, Point2 x, bool half_plane) const {
        const auto g = scalar_gradient(x, half_plane);
        FieldStress out;
        for (int j = 0; j < 2; ++j) {
            const Complex du = amplitude * polarization[0] * g[j];
            const Complex dw = amplitude * polarization[1] * g[j];
            out.sigma[j] = m.c44 * du + m.R3 * dw;
            out.h[j] = m.R3 * du + m.K2 * dw;
        }
        return out;
    }
};

}  // namespace detail

/// A (mode vector) exp(i k (x1 cos phi + x2 sin phi)).
inline FieldValue fullplane_incident(const QcMaterial& m, const IncidentWave& wave, double omega, Point2 x) {
    const detail::PlaneWave pw(m, wave, omega);
    return pw.field(pw.incident_phase(x));
}

/// The reflected partner of the incident wave: x2 wavevector component flipped.
inline FieldValue fullplane_reflected(const QcMaterial& m, const IncidentWave& wave, double omega, Point2 x) {
    const detail::PlaneWave pw(m, wave, omega);
    return pw.field(pw.reflected_phase(x));
}

/// Incident plus reflected wave in x2 <= 0; traction-free on x2 = 0.
inline FieldValue halfplane_freefield(const QcMaterial& m, const IncidentWave& wave, double omega, Point2 x) {
    require_in_half_plane(x);
    const detail::PlaneWave pw(m, wave, omega);
    return pw.field(pw.incident_phase(x) + pw.reflected_phase(x));
}

inline FieldStress freefield_stress(const QcMaterial& m, const IncidentWave& wave, double omega, Point2 x,
                                    bool half_plane) {
    if (half_plane) require_in_half_plane(x);
    const detail::PlaneWave pw(m, wave, omega);
    return pw.stress(m, x, half_plane);
}

inline FieldTraction freefield_traction(const QcMaterial& m, const IncidentWave& wave, double omega, Point2 x,
                                        bool half_plane, Point2 n) {
    require_unit_normal(n);
    const FieldStress s = freefield_stress(m, wave, omega, x, half_plane);
    return {s.sigma[0] * n.x1 + s.sigma[1] * n.x2, s.h[0] * n.x1 + s.h[1] * n.x2};
}

}  // namespace qcwave

#endif  // QCWAVE_FREEFIELD_HPP
