#ifndef QCWAVE_SPECFUN_HPP
#define QCWAVE_SPECFUN_HPP

// Real-argument cylinder functions of orders 0 and 1, and the Macdonald
// function K evaluated on the negative imaginary axis.
//
// For 0 <= x <= 8 the entire parts of J and Y (after splitting off the
// logarithmic terms of Y) are Chebyshev series in u = x^2/32 - 1. For x > 8
// the Hankel modulus/phase form
//     J = sqrt(2/(pi x)) (P cos chi - Q sin chi)
//     Y = sqrt(2/(pi x)) (P sin chi + Q cos chi),  chi = x - (2 nu + 1) pi/4
// is used with P and Q/(8/x) as Chebyshev series in v = 128/x^2 - 1.
// Accuracy is close to double precision across the whole range.

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <sstream>

#include "qcwave/detail/bessel_tables.hpp"
#include "qcwave/error.hpp"

namespace qcwave {

using Complex = std::complex<double>;

namespace detail {

inline double clenshaw(std::span<const double> c, double t) {
    double b1 = 0.0;
    double b2 = 0.0;
    const double t2 = 2.0 * t;
    for (std::size_t k = c.size(); k-- > 1;) {
        const double b0 = t2 * b1 - b2 + c[k];
        b2 = b1;
        b1 = b0;
    }
    return t * b1 - b2 + c[0];
}

inline constexpr double kSplit = 8.0;
inline constexpr double kTwoOverPi = 2.0 / std::numbers::pi;

inline void require_positive(double x, const char* name) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        std::ostringstream os;
        os.precision(17);
        os << name << " requires a finite argument x > 0, got " << x;
        throw Error(ErrorCode::DomainError, os.str());
    }
}

inline void require_non_negative(double x, const char* name) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
        std::ostringstream os;
        os.precision(17);
        os << name << " requires a finite argument x >= 0, got " << x;
        throw Error(ErrorCode::DomainError, os.str());
    }
}

struct Asymptotic {
    double j;
    double y;
};

// cos(x - pi/4) = (cos x + sin x)/sqrt2, cos(x - 3pi/4) = (sin x - cos x)/sqrt2
inline Asymptotic large_order0(double x) {
    const double v = 128.0 / (x * x) - 1.0;
    const double p = clenshaw(kP0Large, v);
    const double q = clenshaw(kQ0Large, v) * (8.0 / x);
    const double s = std::sin(x);
    const double c = std::cos(x);
    const double cchi = (c + s) * std::numbers::sqrt2 * 0.5;
    const double schi = (s - c) * std::numbers::sqrt2 * 0.5;
    const double amp = std::sqrt(kTwoOverPi / x);
    return {amp * (p * cchi - q * schi), amp * (p * schi + q * cchi)};
}

inline Asymptotic large_order1(double x) {
    const double v = 128.0 / (x * x) - 1.0;
    const double p = clenshaw(kP1Large, v);
    const double q = clenshaw(kQ1Large, v) * (8.0 / x);
    const double s = std::sin(x);
    const double c = std::cos(x);
    const double cchi = (s - c) * std::numbers::sqrt2 * 0.5;
    const double schi = -(s + c) * std::numbers::sqrt2 * 0.5;
    const double amp = std::sqrt(kTwoOverPi / x);
    return {amp * (p * cchi - q * schi), amp * (p * schi + q * cchi)};
}

inline double small_u(double x) { return x * x / 32.0 - 1.0; }

}  // namespace detail

inline double bessel_j0(double x) {
    detail::require_non_negative(x, "bessel_j0");
    if (x == 0.0) return 1.0;
    if (x <= detail::kSplit) return detail::clenshaw(detail::kJ0Small, detail::small_u(x));
    return detail::large_order0(x).j;
}

inline double bessel_j1(double x) {
    detail::require_non_negative(x, "bessel_j1");
    if (x <= detail::kSplit) return x * detail::clenshaw(detail::kJ1Small, detail::small_u(x));
    return detail::large_order1(x).j;
}

inline double bessel_y0(double x) {
    detail::require_positive(x, "bessel_y0");
    if (x <= detail::kSplit) {
        const double u = detail::small_u(x);
        return detail::kTwoOverPi * std::log(0.5 * x) * detail::clenshaw(detail::kJ0Small, u) +
               detail::clenshaw(detail::kY0Small, u);
    }
    return detail::large_order0(x).y;
}

inline double bessel_y1(double x) {
    detail::require_positive(x, "bessel_y1");
    if (x <= detail::kSplit) {
        const double u = detail::small_u(x);
        const double j1 = x * detail::clenshaw(detail::kJ1Small, u);
        return detail::kTwoOverPi * (std::log(0.5 * x) * j1 - 1.0 / x) +
               x * detail::clenshaw(detail::kY1Small, u);
    }
    return detail::large_order1(x).y;
}

/// H0^(1)(x) = J0(x) + i Y0(x), x > 0.
inline Complex hankel1_0(double x) {
    detail::require_positive(x, "hankel1_0");
    if (x <= detail::kSplit) return {bessel_j0(x), bessel_y0(x)};
    const auto a = detail::large_order0(x);
    return {a.j, a.y};
}

/// H1^(1)(x) = J1(x) + i Y1(x), x > 0.
inline Complex hankel1_1(double x) {
    detail::require_positive(x, "hankel1_1");
    if (x <= detail::kSplit) return {bessel_j1(x), bessel_y1(x)};
    const auto a = detail::large_order1(x);
    return {a.j, a.y};
}

/// K0(-ix) = (i pi/2) H0^(1)(x).
inline Complex macdonald_k0_neg_i(double x) {
    detail::require_positive(x, "macdonald_k0_neg_i");
    return Complex(0.0, 0.5 * std::numbers::pi) * hankel1_0(x);
}

/// K1(-ix) = (i pi/2) e^{i pi/2} H1^(1)(x) = -(pi/2) H1^(1)(x).
inline Complex macdonald_k1_neg_i(double x) {
    detail::require_positive(x, "macdonald_k1_neg_i");
    return -0.5 * std::numbers::pi * hankel1_1(x);
}

}  // namespace qcwave

#endif  // QCWAVE_SPECFUN_HPP
