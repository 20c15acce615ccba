#!/usr/bin/env python3
"""Generate the frozen Chebyshev tables used by the large-argument Bessel branch.

J0 and J1 are evaluated for |x| > SWITCH in the amplitude/phase (Hankel) form

    J0(x) = sqrt(2/(pi x)) * [P0(x) cos(x - pi/4)   - Q0(x) sin(x - pi/4)]
    J1(x) = sqrt(2/(pi x)) * [P1(x) cos(x - 3pi/4)  - Q1(x) sin(x - 3pi/4)]

where P and x*Q are smooth functions of u = (SWITCH/x)^2 on [0, 1].  This script
samples them with mpmath at 50 digits, fits Chebyshev series, verifies the
reconstruction against mpmath on a dense grid, and prints the tables that are
pasted into src/dephasim/numerics.py.

Run: python3 tools/fit_hankel_tables.py
"""

import mpmath as mp
import numpy as np
from numpy.polynomial import chebyshev as C

mp.mp.dps = 50

SWITCH = 8.0
DEGREE = 40
N_SAMPLES = 400


def modulus_phase_targets(order, x):
    """P and Q for the given order at argument x, from mpmath J and Y."""
    chi = x - (mp.mpf(2 * order + 1) / 4) * mp.pi
    j = mp.besselj(order, x)
    y = mp.bessely(order, x)
    amp = mp.sqrt(mp.pi * x / 2)
    p = amp * (j * mp.cos(chi) + y * mp.sin(chi))
    q = amp * (y * mp.cos(chi) - j * mp.sin(chi))
    return p, q


def fit_tables(order):
    # Chebyshev nodes in u on [0, 1]; u = (SWITCH/x)^2 so u -> 0 is x -> inf.
    k = np.arange(N_SAMPLES)
    u = 0.5 * (1.0 + np.cos(np.pi * (k + 0.5) / N_SAMPLES))
    p_vals = np.empty(N_SAMPLES)
    xq_vals = np.empty(N_SAMPLES)
    for i, ui in enumerate(u):
        x = SWITCH / mp.sqrt(mp.mpf(ui))
        p, q = modulus_phase_targets(order, x)
        p_vals[i] = float(p)
        xq_vals[i] = float(x * q)
    # map u in [0,1] to the Chebyshev domain [-1,1]
    t = 2.0 * u - 1.0
    p_coef = C.chebfit(t, p_vals, DEGREE)
    xq_coef = C.chebfit(t, xq_vals, DEGREE)
    return p_coef, xq_coef


def reconstruct(order, p_coef, xq_coef, x):
    u = (SWITCH / x) ** 2
    t = 2.0 * u - 1.0
    p = C.chebval(t, p_coef)
    q = C.chebval(t, xq_coef) / x
    chi = x - (2 * order + 1) * np.pi / 4.0
    return np.sqrt(2.0 / (np.pi * x)) * (p * np.cos(chi) - q * np.sin(chi))


def verify(order, p_coef, xq_coef):
    xs = np.concatenate([
        np.linspace(SWITCH, 60.0, 4000),
        np.geomspace(60.0, 5000.0, 500),
    ])
    approx = reconstruct(order, p_coef, xq_coef, xs)
    worst = 0.0
    worst_x = None
    for xi, ai in zip(xs, approx):
        exact = float(mp.besselj(order, mp.mpf(xi)))
        err = abs(ai - exact)
        if err > worst:
            worst, worst_x = err, xi
    return worst, worst_x


def trim(coef, tiny=1e-18):
    keep = len(coef)
    while keep > 1 and abs(coef[keep - 1]) < tiny:
        keep -= 1
    return coef[:keep]


def dump(name, coef):
    print(f"{name} = (")
    for c in coef:
        print(f"    {c!r},")
    print(")")


def main():
    for order, tag in ((0, "0"), (1, "1")):
        p_coef, xq_coef = fit_tables(order)
        p_coef, xq_coef = trim(p_coef), trim(xq_coef)
        worst, worst_x = verify(order, p_coef, xq_coef)
        print(f"# J{tag}: switch={SWITCH}, deg P={len(p_coef)-1}, "
              f"deg xQ={len(xq_coef)-1}, max |err| = {worst:.3e} at x={worst_x:.3f}")
        dump(f"_P{tag}_CHEB", p_coef)
        dump(f"_XQ{tag}_CHEB", xq_coef)


if __name__ == "__main__":
    main()
