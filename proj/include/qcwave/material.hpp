#ifndef QCWAVE_MATERIAL_HPP
#define QCWAVE_MATERIAL_HPP

// Material data for a 1D hexagonal quasicrystal in anti-plane motion and the
// rotation that decouples the phonon/phason system.
//
// The coefficient matrix is C = [[c44, R3], [R3, K2]]. Its eigenvalues
// a1 >= a2 > 0 act as effective shear moduli; Q(psi) holds the matching unit
// eigenvectors as columns, so Q^T C Q = diag(a1, a2).

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qcwave/error.hpp"

namespace qcwave {

/// Material constants in SI units: moduli in Pa, density in kg/m^3.
struct QcMaterial {
    double c44 = 0.0;  // phonon shear modulus
    double R3 = 0.0;   // phonon-phason coupling
    double K2 = 0.0;   // phason modulus
    double rho = 0.0;  // mass density

    friend bool operator==(const QcMaterial&, const QcMaterial&) = default;
};

/// Real 2x2 matrix, row-major.
using RealMat2 = std::array<std::array<double, 2>, 2>;

struct SpectralDecomposition {
    double a1 = 0.0;   // larger eigenvalue
    double a2 = 0.0;   // smaller eigenvalue
    double psi = 0.0;  // rotation angle in [0, pi/2]

    double cos_psi() const { return std::cos(psi); }
    double sin_psi() const { return std::sin(psi); }

    /// Q = [[cos psi, -sin psi], [sin psi, cos psi]].
    RealMat2 rotation() const {
        const double c = cos_psi();
        const double s = sin_psi();
        return {{{c, -s}, {s, c}}};
    }
};

struct WaveParameters {
    double omega = 0.0;
    double k1 = 0.0;  // fast (S1) wavenumber
    double k2 = 0.0;  // slow (S2) wavenumber
    double c1 = 0.0;  // fast phase speed
    double c2 = 0.0;  // slow phase speed
};

inline double determinant(const QcMaterial& m) {
    return std::fma(m.c44, m.K2, -m.R3 * m.R3);
}

inline RealMat2 coefficient_matrix(const QcMaterial& m) {
    return {{{m.c44, m.R3}, {m.R3, m.K2}}};
}

/// Throws Error unless all well-posedness conditions hold. NaN fails every
/// comparison and is reported as the first violated condition.
inline void validate(const QcMaterial& m) {
    auto fail = [&](ErrorCode code, const char* what) {
        std::ostringstream os;
        os.precision(17);
        os << what << " (c44=" << m.c44 << ", R3=" << m.R3 << ", K2=" << m.K2
           << ", rho=" << m.rho << ")";
        throw Error(code, os.str());
    };
    if (!(m.c44 > 0.0) || !std::isfinite(m.c44)) fail(ErrorCode::NonPositiveModulus, "c44 must be positive");
    if (!(m.K2 > 0.0) || !std::isfinite(m.K2)) fail(ErrorCode::NonPositiveModulus, "K2 must be positive");
    if (!(m.R3 >= 0.0) || !std::isfinite(m.R3)) fail(ErrorCode::NegativeCoupling, "R3 must be non-negative");
    if (!(m.rho > 0.0) || !std::isfinite(m.rho)) fail(ErrorCode::NonPositiveDensity, "rho must be positive");
    if (!(determinant(m) > 0.0)) fail(ErrorCode::CouplingTooStrong, "c44*K2 - R3^2 must be positive");
}

inline bool is_valid(const QcMaterial& m) {
    try {
        validate(m);
        return true;
    } catch (const Error&) {
        return false;
    }
}

/// Eigen-decomposition of C.
///
/// a1 is the '+' root of the characteristic polynomial. a2 is recovered as
/// det(C)/a1, which avoids cancellation when det(C) is small compared to the
/// trace. The angle uses tan(2 psi) = 2 R3 / (c44 - K2); this is the same
/// angle as arccos(R3 / |(R3, a1 - c44)|) but stays accurate near psi = 0.
/// At R3 = 0 it yields psi = 0 for c44 >= K2 and psi = pi/2 for c44 < K2.
inline SpectralDecomposition decompose(const QcMaterial& m) {
    validate(m);
    const double trace = m.c44 + m.K2;
    const double disc = std::hypot(m.c44 - m.K2, 2.0 * m.R3);
    SpectralDecomposition d;
    d.a1 = 0.5 * (trace + disc);
    d.a2 = determinant(m) / d.a1;
    d.psi = 0.5 * std::atan2(2.0 * m.R3, m.c44 - m.K2);
    if (d.psi < 0.0) d.psi = 0.0;
    if (d.psi > 0.5 * std::numbers::pi) d.psi = 0.5 * std::numbers::pi;
    return d;
}

/// k_i = omega sqrt(rho / a_i), c_i = sqrt(a_i / rho).
inline WaveParameters wave_parameters(const SpectralDecomposition& d, double rho, double omega) {
    if (!(omega > 0.0) || !std::isfinite(omega))
        throw Error(ErrorCode::NonPositiveFrequency, "omega must be positive (the static case is not supported)");
    if (!(rho > 0.0) || !std::isfinite(rho))
        throw Error(ErrorCode::NonPositiveDensity, "rho must be positive");
    WaveParameters w;
    w.omega = omega;
    w.k1 = omega * std::sqrt(rho / d.a1);
    w.k2 = omega * std::sqrt(rho / d.a2);
    w.c1 = std::sqrt(d.a1 / rho);
    w.c2 = std::sqrt(d.a2 / rho);
    return w;
}

inline WaveParameters wave_parameters(const QcMaterial& m, double omega) {
    return wave_parameters(decompose(m), m.rho, omega);
}

inline void require_positive_frequency(double omega) {
    if (!(omega > 0.0) || !std::isfinite(omega))
        throw Error(ErrorCode::NonPositiveFrequency, "omega must be positive (the static case is not supported)");
}

}  // namespace qcwave

#endif  // QCWAVE_MATERIAL_HPP
