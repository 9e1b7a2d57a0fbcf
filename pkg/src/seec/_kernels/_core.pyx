# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: Hermite evaluation and the entropy quadrature sum.

Arithmetic mirrors the numpy fallback expression for expression; the only
intended difference is the reduction order of the weighted sum (sequential
here, pairwise in the fallback's np.dot), worth at most a few ulps.
"""

from libc.math cimport exp, log

import numpy as np


def hermite_values(int n, const double[::1] z not None):
    """Physicists' Hermite polynomial H_n at every element of ``z``."""
    cdef Py_ssize_t i, size = z.shape[0]
    out = np.empty(size, dtype=np.float64)
    cdef double[::1] o = out
    cdef double zz, h, hp, hn
    cdef int k
    if n == 0:
        for i in range(size):
            o[i] = 1.0
        return out
    for i in range(size):
        zz = z[i]
        hp = 1.0
        h = 2.0 * zz
        for k in range(1, n):
            hn = 2.0 * zz * h - (2.0 * k) * hp
            hp = h
            h = hn
        o[i] = h
    return out


def entropy_weighted_sum(int n, const double[::1] nodes not None, const double[::1] weights not None):
    """Weighted sum of e^{-z^2} H_n(z)^2 ln(H_n(z)^2) over the nodes.

    The integrand is continued by zero where H_n(z)^2 underflows to zero
    (u ln u -> 0 at the polynomial roots).
    """
    cdef Py_ssize_t i, size = nodes.shape[0]
    if weights.shape[0] != size:
        raise ValueError("nodes and weights must have equal length")
    cdef double acc = 0.0
    cdef double zz, h, hp, hn, h2
    cdef int k
    for i in range(size):
        zz = nodes[i]
        if n == 0:
            h = 1.0
        else:
            hp = 1.0
            h = 2.0 * zz
            for k in range(1, n):
                hn = 2.0 * zz * h - (2.0 * k) * hp
                hp = h
                h = hn
        h2 = h * h
        if h2 > 0.0:
            acc += weights[i] * (exp(-zz * zz) * h2 * log(h2))
    return acc
