#ifndef QCWAVE_HALFPLANE_HPP
#define QCWAVE_HALFPLANE_HPP

// Green's function of the traction-free half-plane x2 < 0, built by adding
// the fundamental solution of the mirrored source (xi1, -xi2). On x2 = 0 the
// normal derivatives of the two terms cancel, so both the phonon and the
// phason traction vanish there.

#include <sstream>

#include "qcwave/kernels.hpp"

namespace qcwave {

inline Point2 image_point(Point2 xi) {
    if (xi.x2 == 0.0) throw Error(ErrorCode::SourceOnBoundary, "source lies on the boundary x2 = 0");
    if (!(xi.x2 < 0.0)) {
        std::ostringstream os;
        os.precision(17);
        os << "source (" << xi.x1 << ", " << xi.x2 << ") lies outside the half-plane x2 < 0";
        throw Error(ErrorCode::SourceOutsideHalfPlane, os.str());
    }
    return {xi.x1, -xi.x2};
}

inline void require_in_half_plane(Point2 x) {
    if (!(x.x2 <= 0.0)) {
        std::ostringstream os;
        os.precision(17);
        os << "field point (" << x.x1 << ", " << x.x2 << ") lies outside the half-plane x2 <= 0";
        throw Error(ErrorCode::PointOutsideHalfPlane, os.str());
    }
}

/// g*(x, xi) = v*(r) + v*(r~), r~ = |x - image_point(xi)|.
inline KernelMatrix green_displacement(const QcMaterial& m, Point2 x, Point2 xi, double omega) {
    const Point2 image = image_point(xi);
    require_in_half_plane(x);
    const detail::KernelContext ctx(m, omega);
    const double r = detail::checked_separation(x, xi);
    const double r_image = detail::checked_separation(x, image);
    return ctx.displacement(r) + ctx.displacement(r_image);
}

namespace detail {

inline KernelGradient green_gradient(const KernelContext& ctx, Point2 x, Point2 xi) {
    const Point2 image = image_point(xi);
    require_in_half_plane(x);
    const KernelGradient direct = ctx.gradient(x, xi);
    const KernelGradient mirrored = ctx.gradient(x, image);
    KernelGradient g;
    for (int dir = 0; dir < 2; ++dir) g.by_direction[dir] = direct.by_direction[dir] + mirrored.by_direction[dir];
    return g;
}

}  // namespace detail

inline KernelGradient green_gradient(const QcMaterial& m, Point2 x, Point2 xi, double omega) {
    const detail::KernelContext ctx(m, omega);
    return detail::green_gradient(ctx, x, xi);
}

/// Sum of the tractions of the real and the image source.
inline TractionMatrix green_traction(const QcMaterial& m, Point2 x, Point2 xi, double omega, Point2 n) {
    require_unit_normal(n);
    const detail::KernelContext ctx(m, omega);
    return detail::KernelContext::traction(ctx.stress(detail::green_gradient(ctx, x, xi)), n);
}

}  // namespace qcwave

#endif  // QCWAVE_HALFPLANE_HPP
