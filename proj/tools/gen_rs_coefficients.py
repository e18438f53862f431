#!/usr/bin/env python3
"""Generate Taylor tables for the Riemann-Siegel remainder terms C0..C4.

Each C_k(p) is expanded in x = p - 1/2 from the closed form
Psi(p) = cos(2*pi*(p^2 - p - 1/16)) / cos(2*pi*p) and its derivatives.
Writes src/numtheory/rs_coefficients.inc.
"""
import sys
from pathlib import Path

import mpmath as mp

mp.mp.dps = 80
DEGREE = 140
CUTOFF = mp.mpf("1e-22")


def cos_series(scale, shift, degree, square):
    # coefficients of cos(scale * x^(2 if square else 1) + shift) in powers of x
    out = [mp.mpf(0)] * (degree + 1)
    step = 2 if square else 1
    for j in range(0, degree // step + 1):
        c = scale ** j / mp.factorial(j) * mp.cos(shift + j * mp.pi / 2)
        out[j * step] = c
    return out


def divide(num, den, degree):
    q = [mp.mpf(0)] * (degree + 1)
    for n in range(degree + 1):
        acc = num[n] - sum(q[k] * den[n - k] for k in range(n))
        q[n] = acc / den[0]
    return q


def derivative(poly, order):
    out = poly[:]
    for _ in range(order):
        out = [out[i] * i for i in range(1, len(out))]
    return out


def combine(terms, degree):
    out = [mp.mpf(0)] * (degree + 1)
    for weight, poly in terms:
        for i in range(min(len(poly), degree + 1)):
            out[i] += weight * poly[i]
    return out


def main():
    pi = mp.pi
    num = cos_series(2 * pi, -5 * pi / 8, DEGREE, square=True)
    den = [-c for c in cos_series(2 * pi, mp.mpf(0), DEGREE, square=False)]
    psi = divide(num, den, DEGREE)
    d = lambda k: derivative(psi, k)
    keep = DEGREE - 14
    tables = [
        combine([(1, d(0))], keep),
        combine([(-1 / (96 * pi**2), d(3))], keep),
        combine([(1 / (64 * pi**2), d(2)), (1 / (18432 * pi**4), d(6))], keep),
        combine([(-1 / (64 * pi**2), d(1)), (-1 / (3840 * pi**4), d(5)),
                 (-1 / (5308416 * pi**6), d(9))], keep),
        combine([(1 / (128 * pi**2), d(0)), (19 / (24576 * pi**4), d(4)),
                 (11 / (5898240 * pi**6), d(8)), (1 / (2038431744 * pi**8), d(12))], keep),
    ]
    lines = ["// Generated by tools/gen_rs_coefficients.py. Do not edit.",
             "// Taylor coefficients of the Riemann-Siegel terms C0..C4 in x = p - 1/2.", ""]
    for k, coeffs in enumerate(tables):
        last = max(i for i, c in enumerate(coeffs) if abs(c) * mp.mpf(0.5) ** i > CUTOFF)
        body = ",\n".join("    " + mp.nstr(c if abs(c) > mp.mpf("1e-40") else mp.mpf(0), 20, min_fixed=1, max_fixed=0) for c in coeffs[: last + 1])
        lines.append(f"inline constexpr double kRsC{k}[] = {{\n{body}}};\n")
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parents[1] / "src/numtheory/rs_coefficients.inc"
    out.write_text("\n".join(lines))


if __name__ == "__main__":
    main()
