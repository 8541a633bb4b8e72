#ifndef QCWAVE_TESTS_ORACLES_HPP
#define QCWAVE_TESTS_ORACLES_HPP

// Slow reference implementations used only by the tests. They share no code
// with the library: cylinder functions come from their ascending series (in
// long double) or the Stokes asymptotic expansion, K from its complex
// ascending series, and the 2x2 eigenproblem from the characteristic
// polynomial and a null-space vector.

#include <cmath>
#include <complex>
#include <functional>

namespace oracle {

using Real = long double;
using ComplexL = std::complex<long double>;

inline constexpr Real kPi = 3.141592653589793238462643383279502884L;
inline constexpr Real kEulerGamma = 0.577215664901532860606512090082402431L;

inline constexpr Real kSeriesLimit = 20.0L;

// ---- ascending series -------------------------------------------------------

inline Real j0_series(Real x) {
    const Real q = x * x / 4;
    Real term = 1;
    Real sum = 1;
    for (int k = 1; k < 200; ++k) {
        term *= -q / (Real(k) * k);
        sum += term;
        if (std::fabs(term) < 1e-24L * std::fabs(sum) && k > 5) break;
    }
    return sum;
}

inline Real j1_series(Real x) {
    const Real q = x * x / 4;
    Real term = x / 2;
    Real sum = term;
    for (int k = 1; k < 200; ++k) {
        term *= -q / (Real(k) * (k + 1));
        sum += term;
        if (std::fabs(term) < 1e-24L * std::fabs(sum) && k > 5) break;
    }
    return sum;
}

inline Real y0_series(Real x) {
    const Real q = x * x / 4;
    Real term = 1;  // (q^k / (k!)^2), signed
    Real harmonic = 0;
    Real sum = 0;
    for (int k = 1; k < 200; ++k) {
        term *= -q / (Real(k) * k);
        harmonic += Real(1) / k;
        const Real contribution = -term * harmonic;  // (-1)^{k+1} H_k q^k/(k!)^2
        sum += contribution;
        if (std::fabs(contribution) < 1e-24L && k > 5) break;
    }
    return 2 / kPi * ((std::log(x / 2) + kEulerGamma) * j0_series(x) + sum);
}

inline Real y1_series(Real x) {
    const Real q = x * x / 4;
    Real term = x / 2;  // (-1)^k (x/2)^{2k+1} / (k!(k+1)!)
    Real psi_k1 = -kEulerGamma;         // psi(k+1)
    Real psi_k2 = 1 - kEulerGamma;      // psi(k+2)
    Real sum = term * (psi_k1 + psi_k2);
    for (int k = 1; k < 200; ++k) {
        term *= -q / (Real(k) * (k + 1));
        psi_k1 += Real(1) / k;
        psi_k2 += Real(1) / (k + 1);
        const Real contribution = term * (psi_k1 + psi_k2);
        sum += contribution;
        if (std::fabs(contribution) < 1e-24L && k > 5) break;
    }
    return -2 / (kPi * x) + 2 / kPi * std::log(x / 2) * j1_series(x) - sum / kPi;
}

// ---- Stokes asymptotic expansion ------------------------------------------

struct JY {
    Real j;
    Real y;
};

inline JY asymptotic(int nu, Real x) {
    const Real mu = 4.0L * nu * nu;
    Real p = 0;
    Real q = 0;
    Real a = 1;  // a_k(nu) / x^k
    Real last = INFINITY;
    for (int k = 0; k < 200; ++k) {
        if (k > 0) a *= (mu - Real(2 * k - 1) * (2 * k - 1)) / (Real(k) * 8 * x);
        if (std::fabs(a) > last) break;  // optimal truncation
        last = std::fabs(a);
        switch (k % 4) {
            case 0: p += a; break;
            case 1: q += a; break;
            case 2: p -= a; break;
            case 3: q -= a; break;
        }
        if (std::fabs(a) < 1e-24L) break;
    }
    const Real chi = x - (2 * nu + 1) * kPi / 4;
    const Real amp = std::sqrt(2 / (kPi * x));
    return {amp * (p * std::cos(chi) - q * std::sin(chi)), amp * (p * std::sin(chi) + q * std::cos(chi))};
}

inline double j0(double x) { return x <= kSeriesLimit ? double(j0_series(x)) : double(asymptotic(0, x).j); }
inline double j1(double x) { return x <= kSeriesLimit ? double(j1_series(x)) : double(asymptotic(1, x).j); }
inline double y0(double x) { return x <= kSeriesLimit ? double(y0_series(x)) : double(asymptotic(0, x).y); }
inline double y1(double x) { return x <= kSeriesLimit ? double(y1_series(x)) : double(asymptotic(1, x).y); }

// ---- modified functions with complex argument -----------------------------

inline ComplexL k0_series(ComplexL z) {
    const ComplexL q = z * z / 4.0L;
    ComplexL term = 1;  // q^k/(k!)^2
    ComplexL i0 = 1;
    ComplexL sum = 0;
    Real harmonic = 0;
    for (int k = 1; k < 300; ++k) {
        term *= q / (Real(k) * k);
        harmonic += Real(1) / k;
        i0 += term;
        sum += harmonic * term;
        if (std::abs(term) < 1e-26L && k > 5) break;
    }
    return -(std::log(z / 2.0L) + kEulerGamma) * i0 + sum;
}

inline ComplexL k1_series(ComplexL z) {
    const ComplexL q = z * z / 4.0L;
    ComplexL term = z / 2.0L;  // (z/2)^{2k+1}/(k!(k+1)!)
    ComplexL i1 = term;
    Real psi_k1 = -kEulerGamma;
    Real psi_k2 = 1 - kEulerGamma;
    ComplexL sum = term * (psi_k1 + psi_k2);
    for (int k = 1; k < 300; ++k) {
        term *= q / (Real(k) * (k + 1));
        psi_k1 += Real(1) / k;
        psi_k2 += Real(1) / (k + 1);
        i1 += term;
        sum += term * (psi_k1 + psi_k2);
        if (std::abs(term) < 1e-26L && k > 5) break;
    }
    return 1.0L / z + std::log(z / 2.0L) * i1 - sum / 2.0L;
}

// ---- symmetric 2x2 eigenproblem -------------------------------------------

struct Eigen2 {
    Real lambda_max;
    Real lambda_min;
    Real v_max[2];  // unit eigenvector of lambda_max with non-negative first entry
};

inline Eigen2 symmetric_eigen(Real a, Real b, Real d) {
    // det(C - lambda I) = lambda^2 - (a + d) lambda + (a d - b^2)
    const Real tr = a + d;
    const Real det = a * d - b * b;
    const Real disc = std::sqrt(std::max(Real(0), tr * tr - 4 * det));
    Eigen2 e{};
    e.lambda_max = (tr + disc) / 2;
    e.lambda_min = det / e.lambda_max;
    // Columns of (C - lambda_min I) span the lambda_max eigenspace.
    Real c0[2] = {a - e.lambda_min, b};
    Real c1[2] = {b, d - e.lambda_min};
    Real* c = (std::hypot(c0[0], c0[1]) >= std::hypot(c1[0], c1[1])) ? c0 : c1;
    Real n = std::hypot(c[0], c[1]);
    if (n == 0) {
        e.v_max[0] = 1;
        e.v_max[1] = 0;
        return e;
    }
    Real sign = (c[0] < 0 || (c[0] == 0 && c[1] < 0)) ? -1 : 1;
    e.v_max[0] = sign * c[0] / n;
    e.v_max[1] = sign * c[1] / n;
    return e;
}

// ---- root finding ----------------------------------------------------------

inline Real bisect(const std::function<Real(Real)>& f, Real lo, Real hi) {
    Real flo = f(lo);
    for (int i = 0; i < 200; ++i) {
        const Real mid = (lo + hi) / 2;
        const Real fm = f(mid);
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return (lo + hi) / 2;
}

}  // namespace oracle

#endif  // QCWAVE_TESTS_ORACLES_HPP
