#!/usr/bin/env python3
"""Regenerate the Chebyshev tables in include/qcwave/detail/bessel_tables.hpp.

Small arguments (0 <= x <= 8) use the variable u = x^2/32 - 1 and expand the
entire parts of J0, J1, Y0, Y1 after the logarithmic terms are split off.
Large arguments (x > 8) use s = 64/x^2, v = 2s - 1 and expand the
Hankel modulus/phase factors P and Q.

    python3 tools/gen_bessel_coeffs.py > include/qcwave/detail/bessel_tables.hpp
"""
import mpmath as mp

mp.mp.dps = 50
TOL = mp.mpf("1e-19")


def cheb_coeffs(f, n):
    nodes = [mp.cos(mp.pi * (k + mp.mpf(1) / 2) / n) for k in range(n)]
    vals = [f(t) for t in nodes]
    out = []
    for j in range(n):
        s = mp.fsum(vals[k] * mp.cos(mp.pi * j * (k + mp.mpf(1) / 2) / n) for k in range(n))
        out.append(2 * s / n)
    out[0] /= 2
    return out


def trimmed(f, n):
    c = cheb_coeffs(f, n)
    scale = max(abs(v) for v in c)
    while len(c) > 2 and abs(c[-1]) < TOL * scale:
        c.pop()
    return c


def x_small(u):
    return mp.sqrt(32 * (u + 1))


def small_j0(u):
    return mp.besselj(0, x_small(u))


def small_j1(u):
    x = x_small(u)
    return mp.besselj(1, x) / x if x != 0 else mp.mpf(1) / 2


def small_y0(u):
    x = x_small(u)
    return mp.bessely(0, x) - 2 / mp.pi * mp.log(x / 2) * mp.besselj(0, x)


def small_y1(u):
    x = x_small(u)
    return (mp.bessely(1, x) - 2 / mp.pi * (mp.log(x / 2) * mp.besselj(1, x) - 1 / x)) / x


def x_large(v):
    s = (v + 1) / 2
    return 8 / mp.sqrt(s)


def pq(nu, v):
    x = x_large(v)
    chi = x - (2 * nu + 1) * mp.pi / 4
    amp = mp.sqrt(mp.pi * x / 2)
    j, y = mp.besselj(nu, x), mp.bessely(nu, x)
    p = amp * (j * mp.cos(chi) + y * mp.sin(chi))
    q = amp * (-j * mp.sin(chi) + y * mp.cos(chi))
    return p, q * x / 8


TABLES = [
    ("kJ0Small", small_j0, 40),
    ("kJ1Small", small_j1, 40),
    ("kY0Small", small_y0, 40),
    ("kY1Small", small_y1, 40),
    ("kP0Large", lambda v: pq(0, v)[0], 60),
    ("kQ0Large", lambda v: pq(0, v)[1], 60),
    ("kP1Large", lambda v: pq(1, v)[0], 60),
    ("kQ1Large", lambda v: pq(1, v)[1], 60),
]


def main():
    print("// Generated by tools/gen_bessel_coeffs.py; do not edit by hand.")
    print("#ifndef QCWAVE_DETAIL_BESSEL_TABLES_HPP")
    print("#define QCWAVE_DETAIL_BESSEL_TABLES_HPP")
    print()
    print("#include <array>")
    print()
    print("namespace qcwave::detail {")
    for name, f, n in TABLES:
        c = trimmed(f, n)
        print()
        print(f"inline constexpr std::array<double, {len(c)}> {name} = {{")
        for v in c:
            print(f"    {mp.nstr(v, 20, min_fixed=0, max_fixed=0)},")
        print("};")
    print()
    print("}  // namespace qcwave::detail")
    print()
    print("#endif  // QCWAVE_DETAIL_BESSEL_TABLES_HPP")


if __name__ == "__main__":
    main()
