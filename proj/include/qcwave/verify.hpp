#ifndef QCWAVE_VERIFY_HPP
#define QCWAVE_VERIFY_HPP

// Independent checks on the kernels, the half-plane Green's function and the
// free fields: finite-difference PDE residuals, the Dirac normalization of the
// fundamental solution, reciprocity, the R3 = 0 decoupling limit and the
// traction-free boundary.
//
// Every check that samples randomly takes an explicit seed and evaluates in a
// fixed order, so reports are reproducible.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <numbers>
#include <random>
#include <span>
#include <vector>

#include "qcwave/freefield.hpp"
#include "qcwave/halfplane.hpp"
#include "qcwave/kernels.hpp"

namespace qcwave {

inline constexpr std::uint64_t kDefaultSeed = 20250117;

using FieldEvaluator = std::function<FieldValue(Point2)>;
using KernelFunction = std::function<KernelMatrix(const QcMaterial&, Point2, Point2, double)>;

// ---------------------------------------------------------------------------
// PDE residual

struct ResidualReport {
    Point2 point;
    double step = 0.0;
    double residual_norm = 0.0;
    double reference_norm = 0.0;
    double relative_residual = 0.0;
    bool degenerate_reference = false;
};

inline double vector_norm(Complex a, Complex b) { return std::sqrt(std::norm(a) + std::norm(b)); }

/// C L_h(f) + rho omega^2 f at `at`, with L_h the 5-point Laplacian. The
/// reference is |rho omega^2 f(at)|. A field that throws anywhere on the
/// stencil is reported as StencilOutOfDomain.
inline ResidualReport pde_residual(const FieldEvaluator& field, const QcMaterial& m, double omega, Point2 at,
                                   double h) {
    validate(m);
    require_positive_frequency(omega);
    if (!(h > 0.0) || !std::isfinite(h)) throw Error(ErrorCode::InvalidArgument, "finite-difference step must be positive");

    std::array<FieldValue, 5> f;
    const std::array<Point2, 5> stencil{at, Point2{at.x1 + h, at.x2}, Point2{at.x1 - h, at.x2},
                                        Point2{at.x1, at.x2 + h}, Point2{at.x1, at.x2 - h}};
    for (std::size_t i = 0; i < stencil.size(); ++i) {
        try {
            f[i] = field(stencil[i]);
        } catch (const Error& e) {
            throw Error(ErrorCode::StencilOutOfDomain, e.what());
        }
    }
    const double inv_h2 = 1.0 / (h * h);
    const Complex lap_u = (f[1].u3 + f[2].u3 + f[3].u3 + f[4].u3 - 4.0 * f[0].u3) * inv_h2;
    const Complex lap_w = (f[1].w3 + f[2].w3 + f[3].w3 + f[4].w3 - 4.0 * f[0].w3) * inv_h2;
    const double inertia = m.rho * omega * omega;
    const Complex res_u = m.c44 * lap_u + m.R3 * lap_w + inertia * f[0].u3;
    const Complex res_w = m.R3 * lap_u + m.K2 * lap_w + inertia * f[0].w3;

    ResidualReport rep;
    rep.point = at;
    rep.step = h;
    rep.residual_norm = vector_norm(res_u, res_w);
    rep.reference_norm = inertia * vector_norm(f[0].u3, f[0].w3);
    rep.degenerate_reference = rep.reference_norm == 0.0;
    if (!rep.degenerate_reference)
        rep.relative_residual = rep.residual_norm / rep.reference_norm;
    else
        rep.relative_residual = rep.residual_norm == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return rep;
}

/// Step scaled to the slow wavelength and to the distance from the nearest
/// singular point: min(2 pi / k2, r) / 200.
inline double recommended_step(const QcMaterial& m, double omega, double r) {
    const WaveParameters w = wave_parameters(m, omega);
    return std::min(2.0 * std::numbers::pi / w.k2, r) / 200.0;
}

/// Column `load` of v*(., xi) as a field pair.
inline FieldEvaluator fundamental_column(const QcMaterial& m, Point2 xi, double omega, int load) {
    auto ctx = std::make_shared<const detail::KernelContext>(m, omega);
    return [ctx, xi, load](Point2 x) {
        const KernelMatrix v = ctx->displacement(detail::checked_separation(x, xi));
        return FieldValue{v(0, load), v(1, load)};
    };
}

/// Column `load` of g*(., xi) as a field pair.
inline FieldEvaluator green_column(const QcMaterial& m, Point2 xi, double omega, int load) {
    auto ctx = std::make_shared<const detail::KernelContext>(m, omega);
    const Point2 image = image_point(xi);
    return [ctx, xi, image, load](Point2 x) {
        require_in_half_plane(x);
        const KernelMatrix v = ctx->displacement(detail::checked_separation(x, xi)) +
                               ctx->displacement(detail::checked_separation(x, image));
        return FieldValue{v(0, load), v(1, load)};
    };
}

inline FieldEvaluator plane_wave_field(const QcMaterial& m, const IncidentWave& wave, double omega, bool half_plane) {
    auto pw = std::make_shared<const detail::PlaneWave>(m, wave, omega);
    if (half_plane) {
        return [pw](Point2 x) {
            require_in_half_plane(x);
            return pw->field(pw->incident_phase(x) + pw->reflected_phase(x));
        };
    }
    return [pw](Point2 x) { return pw->field(pw->incident_phase(x)); };
}

/// Residual of the plane-wave field with its second derivatives taken
/// analytically: d^2/dx_j^2 exp(i k d.x) = (i k d_j)^2 exp(i k d.x).
inline ResidualReport plane_wave_analytic_residual(const QcMaterial& m, const IncidentWave& wave, double omega,
                                                   Point2 at, bool half_plane) {
    if (half_plane) require_in_half_plane(at);
    const detail::PlaneWave pw(m, wave, omega);
    const Complex ik(0.0, pw.k);
    const Complex ein = pw.incident_phase(at);
    const Complex eref = pw.reflected_phase(at);
    const Complex din = (ik * pw.cos_phi) * (ik * pw.cos_phi) + (ik * pw.sin_phi) * (ik * pw.sin_phi);
    const Complex dref = (ik * pw.cos_phi) * (ik * pw.cos_phi) + (-ik * pw.sin_phi) * (-ik * pw.sin_phi);
    const Complex scalar = half_plane ? ein + eref : ein;
    const Complex lap_scalar = half_plane ? din * ein + dref * eref : din * ein;
    const FieldValue f = pw.field(scalar);
    const FieldValue lap = pw.field(lap_scalar);

    const double inertia = m.rho * omega * omega;
    const Complex res_u = m.c44 * lap.u3 + m.R3 * lap.w3 + inertia * f.u3;
    const Complex res_w = m.R3 * lap.u3 + m.K2 * lap.w3 + inertia * f.w3;
    ResidualReport rep;
    rep.point = at;
    rep.residual_norm = vector_norm(res_u, res_w);
    rep.reference_norm = inertia * vector_norm(f.u3, f.w3);
    rep.degenerate_reference = rep.reference_norm == 0.0;
    rep.relative_residual = rep.degenerate_reference ? 0.0 : rep.residual_norm / rep.reference_norm;
    return rep;
}

// ---------------------------------------------------------------------------
// Dirac normalization

struct FluxReport {
    double radius = 0.0;
    int nodes = 0;
    ComplexMat2 flux;       // contour integral of the traction, outward normal
    double deviation = 0.0; // |flux + I2|_F
    ComplexMat2 area_term;  // integral of rho omega^2 v* over the disc
    double balance_deviation = 0.0;  // |flux + area_term + I2|_F
};

inline constexpr double kMaxFluxRadiusTimesK = 0.1;
inline constexpr int kMinFluxNodes = 64;

/// Trapezoid rule over the circle |x - xi| = eps. By the divergence theorem
/// flux + area_term = -I2 exactly; the flux alone tends to -I2 like
/// eps^2 log(eps).
inline FluxReport dirac_flux(const QcMaterial& m, Point2 xi, double omega, double eps, int n_nodes) {
    const detail::KernelContext ctx(m, omega);
    if (!(eps > 0.0) || !std::isfinite(eps)) throw Error(ErrorCode::InvalidArgument, "radius must be positive");
    if (!(eps * ctx.waves.k2 < kMaxFluxRadiusTimesK))
        throw Error(ErrorCode::RadiusTooLarge, "radius times k2 must stay below 0.1");
    if (n_nodes < kMinFluxNodes) throw Error(ErrorCode::InvalidArgument, "at least 64 quadrature nodes are required");

    FluxReport rep;
    rep.radius = eps;
    rep.nodes = n_nodes;
    const double dtheta = 2.0 * std::numbers::pi / n_nodes;
    for (int k = 0; k < n_nodes; ++k) {
        const double theta = k * dtheta;
        const Point2 n{std::cos(theta), std::sin(theta)};
        const Point2 x = xi + eps * n;
        const TractionMatrix t = detail::KernelContext::traction(ctx.stress(ctx.gradient(x, xi)), n);
        rep.flux = rep.flux + (eps * dtheta) * t;
    }
    ComplexMat2 deviation = rep.flux;
    deviation(0, 0) += 1.0;
    deviation(1, 1) += 1.0;
    rep.deviation = frobenius(deviation);

    // 2 pi rho omega^2 int_0^eps v*(r) r dr with r = eps t^2 (composite Simpson).
    constexpr int kIntervals = 400;
    const double dt = 1.0 / kIntervals;
    ComplexMat2 radial;
    for (int i = 1; i <= kIntervals; ++i) {
        const double t = i * dt;
        const double w = (i == kIntervals) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        const double r = eps * t * t;
        radial = radial + (w * 2.0 * eps * eps * t * t * t) * ctx.displacement(r);
    }
    rep.area_term = (2.0 * std::numbers::pi * m.rho * omega * omega * dt / 3.0) * radial;
    ComplexMat2 balance = rep.flux + rep.area_term;
    balance(0, 0) += 1.0;
    balance(1, 1) += 1.0;
    rep.balance_deviation = frobenius(balance);
    return rep;
}

// ---------------------------------------------------------------------------
// Reciprocity

struct ReciprocityReport {
    bool passed = false;
    double max_deviation = 0.0;
    std::size_t samples = 0;
    std::uint64_t seed = kDefaultSeed;
    double tolerance = 1e-12;
};

/// Max over random pairs of
///   max(|v12 - v21|, max|v(x, xi) - v(xi, x)|) / max|v(x, xi)|.
/// The kernel is injectable so that broken kernels can be shown to fail.
inline ReciprocityReport reciprocity_check(const QcMaterial& m, double omega, std::size_t sample_count,
                                           std::uint64_t seed = kDefaultSeed,
                                           const KernelFunction& kernel = fundamental_displacement) {
    const WaveParameters w = wave_parameters(m, omega);
    const double half_width = 4.0 * std::numbers::pi / w.k1;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(-half_width, half_width);

    ReciprocityReport rep;
    rep.seed = seed;
    rep.samples = sample_count;
    for (std::size_t i = 0; i < sample_count; ++i) {
        Point2 x;
        Point2 xi;
        do {
            x = {coord(rng), coord(rng)};
            xi = {coord(rng), coord(rng)};
        } while (norm(x - xi) < 1e-3 * half_width);
        const KernelMatrix forward = kernel(m, x, xi, omega);
        const KernelMatrix backward = kernel(m, xi, x, omega);
        const double scale = max_abs(forward);
        const double dev = std::max(std::abs(forward(0, 1) - forward(1, 0)), max_abs(forward - backward)) / scale;
        rep.max_deviation = std::max(rep.max_deviation, dev);
    }
    rep.passed = rep.max_deviation < rep.tolerance;
    return rep;
}

// ---------------------------------------------------------------------------
// Decoupling limit

struct PointPair {
    Point2 x;
    Point2 xi;
};

struct DecouplingReport {
    bool passed = false;
    double max_fundamental_deviation = 0.0;
    double max_green_deviation = 0.0;
    std::size_t fundamental_points = 0;
    std::size_t green_points = 0;
    double tolerance = 1e-12;
};

namespace detail {

// (1 / (2 pi a)) K0(-i k r) = (i / (4 a)) H0^(1)(k r)
inline Complex isotropic_kernel(double modulus, double k, double r) {
    return Complex(0.0, 0.25 / modulus) * hankel1_0(k * r);
}

inline double decoupled_deviation(const KernelMatrix& v, Complex phonon, Complex phason) {
    const double scale = std::max(std::abs(phonon), std::abs(phason));
    return std::max({std::abs(v(0, 0) - phonon) / std::abs(phonon), std::abs(v(1, 1) - phason) / std::abs(phason),
                     std::abs(v(0, 1)) / scale, std::abs(v(1, 0)) / scale});
}

}  // namespace detail

/// Compares the kernels at R3 = 0 with the isotropic anti-plane closed forms,
/// entry by entry. Pairs with xi2 < 0 and x2 <= 0 are also checked against
/// the image-source Green's function.
inline DecouplingReport decoupling_check(const QcMaterial& m, double omega, std::span<const PointPair> pairs) {
    validate(m);
    if (m.R3 != 0.0) throw Error(ErrorCode::PreconditionViolated, "decoupling check requires R3 = 0");
    require_positive_frequency(omega);
    const double k_phonon = omega * std::sqrt(m.rho / m.c44);
    const double k_phason = omega * std::sqrt(m.rho / m.K2);

    DecouplingReport rep;
    for (const auto& [x, xi] : pairs) {
        const double r = norm(x - xi);
        const KernelMatrix v = fundamental_displacement(m, x, xi, omega);
        rep.max_fundamental_deviation =
            std::max(rep.max_fundamental_deviation,
                     detail::decoupled_deviation(v, detail::isotropic_kernel(m.c44, k_phonon, r),
                                                 detail::isotropic_kernel(m.K2, k_phason, r)));
        ++rep.fundamental_points;
        if (xi.x2 < 0.0 && x.x2 <= 0.0) {
            const double r_image = std::hypot(x.x1 - xi.x1, x.x2 + xi.x2);
            const KernelMatrix g = green_displacement(m, x, xi, omega);
            const Complex phonon =
                detail::isotropic_kernel(m.c44, k_phonon, r) + detail::isotropic_kernel(m.c44, k_phonon, r_image);
            const Complex phason =
                detail::isotropic_kernel(m.K2, k_phason, r) + detail::isotropic_kernel(m.K2, k_phason, r_image);
            rep.max_green_deviation = std::max(rep.max_green_deviation, detail::decoupled_deviation(g, phonon, phason));
            ++rep.green_points;
        }
    }
    rep.passed = rep.max_fundamental_deviation < rep.tolerance && rep.max_green_deviation < rep.tolerance;
    return rep;
}

/// Random pairs in the half-plane with separations of the order of `length`;
/// every fourth field point is placed on the boundary x2 = 0.
inline std::vector<PointPair> random_half_plane_pairs(std::size_t count, double length, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> along(-length, length);
    std::uniform_real_distribution<double> depth(0.05 * length, length);
    std::vector<PointPair> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        PointPair p;
        p.xi = {along(rng), -depth(rng)};
        p.x = {along(rng), i % 4 == 3 ? 0.0 : -depth(rng)};
        if (norm(p.x - p.xi) < 1e-3 * length) p.x.x1 += 0.5 * length;
        out.push_back(p);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Traction-free boundary

struct BoundaryScanReport {
    double max_normalized_traction = 0.0;
    std::size_t points = 0;
};

inline constexpr Point2 kBoundaryNormal{0.0, 1.0};

/// Boundary tractions of g*(., xi) on x2 = 0, each divided by the largest
/// traction entry of the real source alone at the same point.
inline BoundaryScanReport boundary_traction_scan(const QcMaterial& m, double omega, Point2 source,
                                                 std::size_t n_points) {
    const detail::KernelContext ctx(m, omega);
    (void)image_point(source);
    if (n_points < 2) throw Error(ErrorCode::InvalidArgument, "boundary scan needs at least two points");
    const double half_width = 3.0 * std::max(-source.x2, 2.0 * std::numbers::pi / ctx.waves.k1);

    BoundaryScanReport rep;
    rep.points = n_points;
    for (std::size_t i = 0; i < n_points; ++i) {
        const double s = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(n_points - 1);
        const Point2 x{source.x1 + s * half_width, 0.0};
        const TractionMatrix single =
            detail::KernelContext::traction(ctx.stress(ctx.gradient(x, source)), kBoundaryNormal);
        const TractionMatrix green =
            detail::KernelContext::traction(ctx.stress(detail::green_gradient(ctx, x, source)), kBoundaryNormal);
        rep.max_normalized_traction = std::max(rep.max_normalized_traction, max_abs(green) / max_abs(single));
    }
    return rep;
}

/// Boundary tractions of the plane-wave field on x2 = 0 normalized by the
/// incident wave alone. With half_plane = false the incident wave is scanned
/// by itself, which does not satisfy the boundary condition.
inline BoundaryScanReport boundary_traction_scan(const QcMaterial& m, double omega, const IncidentWave& wave,
                                                 std::size_t n_points, bool half_plane = true) {
    const detail::PlaneWave pw(m, wave, omega);
    if (n_points < 2) throw Error(ErrorCode::InvalidArgument, "boundary scan needs at least two points");
    const double half_width = 2.0 * 2.0 * std::numbers::pi / pw.k;

    BoundaryScanReport rep;
    rep.points = n_points;
    for (std::size_t i = 0; i < n_points; ++i) {
        const double s = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(n_points - 1);
        const Point2 x{s * half_width, 0.0};
        const FieldStress single = pw.stress(m, x, false);
        const FieldStress field = pw.stress(m, x, half_plane);
        const double scale = vector_norm(single.sigma[1], single.h[1]);
        rep.max_normalized_traction =
            std::max(rep.max_normalized_traction, vector_norm(field.sigma[1], field.h[1]) / scale);
    }
    return rep;
}

}  // namespace qcwave

#endif  // QCWAVE_VERIFY_HPP
