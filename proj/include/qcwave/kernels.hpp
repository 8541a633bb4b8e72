#ifndef QCWAVE_KERNELS_HPP
#define QCWAVE_KERNELS_HPP

// Full-plane fundamental solution of
//     [C Laplacian + rho omega^2] v*(x, xi) = -delta(x - xi) I2
// in the form v* = Q diag(K0(-i k1 r)/(2 pi a1), K0(-i k2 r)/(2 pi a2)) Q^T,
// together with its field-point gradient, stresses and tractions.
//
// Row index of every kernel matrix is the field component (0: phonon u3,
// 1: phason w3); column index is the load component. Time dependence is
// exp(-i omega t), so H0^(1) is outgoing.

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qcwave/material.hpp"
#include "qcwave/specfun.hpp"

namespace qcwave {

struct Point2 {
    double x1 = 0.0;
    double x2 = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

inline Point2 operator-(Point2 a, Point2 b) { return {a.x1 - b.x1, a.x2 - b.x2}; }
inline Point2 operator+(Point2 a, Point2 b) { return {a.x1 + b.x1, a.x2 + b.x2}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x1, s * a.x2}; }
inline double norm(Point2 a) { return std::hypot(a.x1, a.x2); }
inline double component(Point2 a, int j) { return j == 0 ? a.x1 : a.x2; }

/// Complex 2x2 matrix, row-major.
struct ComplexMat2 {
    std::array<std::array<Complex, 2>, 2> e{};

    Complex& operator()(int i, int j) { return e[i][j]; }
    const Complex& operator()(int i, int j) const { return e[i][j]; }

    friend bool operator==(const ComplexMat2&, const ComplexMat2&) = default;
};

inline ComplexMat2 operator+(const ComplexMat2& a, const ComplexMat2& b) {
    ComplexMat2 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

inline ComplexMat2 operator-(const ComplexMat2& a, const ComplexMat2& b) {
    ComplexMat2 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
}

inline ComplexMat2 operator*(double s, const ComplexMat2& a) {
    ComplexMat2 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out(i, j) = s * a(i, j);
    return out;
}

inline double frobenius(const ComplexMat2& a) {
    double s = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

inline double max_abs(const ComplexMat2& a) {
    double m = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m = std::max(m, std::abs(a(i, j)));
    return m;
}

/// Displacement kernel: (field component, load component).
using KernelMatrix = ComplexMat2;

/// Rows (t3, G3), columns load component.
using TractionMatrix = ComplexMat2;

/// Gradient kernel indexed (field component, load component, direction).
struct KernelGradient {
    std::array<ComplexMat2, 2> by_direction{};

    Complex& operator()(int field, int load, int dir) { return by_direction[dir](field, load); }
    const Complex& operator()(int field, int load, int dir) const { return by_direction[dir](field, load); }
};

/// sigma(i, j) = sigma_3ij and h(i, j) = H_3ij, with i the load component and
/// j the derivative direction.
struct KernelStress {
    ComplexMat2 sigma;
    ComplexMat2 h;
};

inline constexpr double kUnitNormalTolerance = 1e-12;

/// Separation below which a kernel is declared singular.
inline double singular_radius(Point2 x) { return 1e-12 * (1.0 + norm(x)); }

inline void require_unit_normal(Point2 n) {
    if (!(std::abs(norm(n) - 1.0) <= kUnitNormalTolerance)) {
        std::ostringstream os;
        os.precision(17);
        os << "normal (" << n.x1 << ", " << n.x2 << ") is not of unit length";
        throw Error(ErrorCode::NonUnitNormal, os.str());
    }
}

namespace detail {

inline double checked_separation(Point2 x, Point2 xi) {
    const double r = norm(x - xi);
    if (!std::isfinite(r)) throw Error(ErrorCode::InvalidArgument, "non-finite coordinates");
    if (!(r > singular_radius(x))) {
        std::ostringstream os;
        os.precision(17);
        os << "field point (" << x.x1 << ", " << x.x2 << ") coincides with source (" << xi.x1 << ", "
           << xi.x2 << ")";
        throw Error(ErrorCode::SourceCoincidesWithField, os.str());
    }
    return r;
}

// Q diag(d1, d2) Q^T written out as Q h with h = diag(d1, d2) Q^T.
inline ComplexMat2 rotate_diagonal(double c, double s, Complex d1, Complex d2) {
    const Complex hu1 = c * d1;
    const Complex hu2 = s * d1;
    const Complex hw1 = -s * d2;
    const Complex hw2 = c * d2;
    ComplexMat2 v;
    v(0, 0) = c * hu1 - s * hw1;
    v(0, 1) = c * hu2 - s * hw2;
    v(1, 0) = s * hu1 + c * hw1;
    v(1, 1) = s * hu2 + c * hw2;
    return v;
}

/// Shared per-material, per-frequency state for kernel evaluation.
struct KernelContext {
    QcMaterial material;
    SpectralDecomposition spectral;
    WaveParameters waves;
    double c = 1.0;
    double s = 0.0;

    KernelContext(const QcMaterial& m, double omega)
        : material(m), spectral(decompose(m)), waves(wave_parameters(spectral, m.rho, omega)),
          c(spectral.cos_psi()), s(spectral.sin_psi()) {}

    ComplexMat2 displacement(double r) const {
        const double f1 = 1.0 / (2.0 * std::numbers::pi * spectral.a1);
        const double f2 = 1.0 / (2.0 * std::numbers::pi * spectral.a2);
        return rotate_diagonal(c, s, f1 * macdonald_k0_neg_i(waves.k1 * r),
                               f2 * macdonald_k0_neg_i(waves.k2 * r));
    }

    // d/dr of the displacement kernel: d/dr K0(-i k r) = i k K1(-i k r).
    ComplexMat2 radial_derivative(double r) const {
        const Complex ik1(0.0, waves.k1);
        const Complex ik2(0.0, waves.k2);
        const double f1 = 1.0 / (2.0 * std::numbers::pi * spectral.a1);
        const double f2 = 1.0 / (2.0 * std::numbers::pi * spectral.a2);
        return rotate_diagonal(c, s, f1 * ik1 * macdonald_k1_neg_i(waves.k1 * r),
                               f2 * ik2 * macdonald_k1_neg_i(waves.k2 * r));
    }

    KernelGradient gradient(Point2 x, Point2 xi) const {
        const Point2 d = x - xi;
        const double r = checked_separation(x, xi);
        const ComplexMat2 dr = radial_derivative(r);
        KernelGradient g;
        g.by_direction[0] = (d.x1 / r) * dr;
        g.by_direction[1] = (d.x2 / r) * dr;
        return g;
    }

    KernelStress stress(const KernelGradient& g) const {
        const auto& m = material;
        KernelStress out;
        for (int load = 0; load < 2; ++load) {
            for (int dir = 0; dir < 2; ++dir) {
                out.sigma(load, dir) = m.c44 * g(0, load, dir) + m.R3 * g(1, load, dir);
                out.h(load, dir) = m.R3 * g(0, load, dir) + m.K2 * g(1, load, dir);
            }
        }
        return out;
    }

    static TractionMatrix traction(const KernelStress& st, Point2 n) {
        TractionMatrix t;
        for (int load = 0; load < 2; ++load) {
            t(0, load) = st.sigma(load, 0) * n.x1 + st.sigma(load, 1) * n.x2;
            t(1, load) = st.h(load, 0) * n.x1 + st.h(load, 1) * n.x2;
        }
        return t;
    }
};

}  // namespace detail

/// v*(x, xi, omega).
inline KernelMatrix fundamental_displacement(const QcMaterial& m, Point2 x, Point2 xi, double omega) {
    const detail::KernelContext ctx(m, omega);
    return ctx.displacement(detail::checked_separation(x, xi));
}

/// Gradient with respect to the field point x, using r_j = x_j - xi_j.
inline KernelGradient fundamental_gradient(const QcMaterial& m, Point2 x, Point2 xi, double omega) {
    const detail::KernelContext ctx(m, omega);
    return ctx.gradient(x, xi);
}

/// sigma_3ij = c44 u*_3i,j + R3 w*_3i,j and H_3ij = R3 u*_3i,j + K2 w*_3i,j.
inline KernelStress fundamental_stress(const QcMaterial& m, Point2 x, Point2 xi, double omega) {
    const detail::KernelContext ctx(m, omega);
    return ctx.stress(ctx.gradient(x, xi));
}

/// t_3i = sigma_3ij n_j (row 0) and G_3i = H_3ij n_j (row 1).
inline TractionMatrix fundamental_traction(const QcMaterial& m, Point2 x, Point2 xi, double omega, Point2 n) {
    require_unit_normal(n);
    const detail::KernelContext ctx(m, omega);
    return detail::KernelContext::traction(ctx.stress(ctx.gradient(x, xi)), n);
}

}  // namespace qcwave

#endif  // QCWAVE_KERNELS_HPP
