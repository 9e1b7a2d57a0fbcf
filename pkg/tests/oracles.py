"""Independent brute-force oracles for the test suite.

Deliberately separate from the package's own quadrature and series code:
uniform panels here (no root splitting), direct series instead of the
transformed one.  Expected constants frozen in the tests were computed
with 40-digit arithmetic.
"""

import math

import numpy as np


def hyp1f1_direct(x, min_terms=50):
    """1F1(1; 1/2; -x^2) by its direct alternating series with Neumaier
    compensation; adequate for |x| <= 2 where cancellation stays mild."""
    z = -x * x
    term = 1.0
    total = 0.0
    comp = 0.0
    k = 0
    while k < 400:
        t = total + term
        if abs(total) >= abs(term):
            comp += (total - t) + term
        else:
            comp += (term - t) + total
        total = t
        term *= z / (0.5 + k)
        k += 1
        if k >= min_terms and abs(term) < 1e-18 * max(abs(total), 1e-30):
            break
    return total + comp


def uniform_panel_integral(f, a, b, panels=64, order=24):
    """Composite Gauss-Legendre on equal panels (no singularity handling)."""
    base_x, base_w = np.polynomial.legendre.leggauss(order)
    edges = np.linspace(a, b, panels + 1)
    total = 0.0
    for lo, hi in zip(edges, edges[1:]):
        mid = 0.5 * (lo + hi)
        half = 0.5 * (hi - lo)
        total += half * float(np.dot(base_w, f(mid + half * base_x)))
    return total


def density_entropy(density, a, b, panels=128, order=24):
    """-integral of p ln p, with 0 ln 0 continued by zero."""

    def integrand(u):
        p = np.asarray(density(u), dtype=float)
        out = np.zeros_like(p)
        mask = p > 0.0
        out[mask] = -p[mask] * np.log(p[mask])
        return out

    return uniform_panel_integral(integrand, a, b, panels=panels, order=order)


def gauss_entropy(sigma2):
    """Differential entropy of a normal density with variance sigma2."""
    return 0.5 * math.log(2.0 * math.pi * math.e * sigma2)
