"""Coupled-oscillator normal modes and eigenfunctions.

Transforms the physical Hamiltonian

    H = P1^2/2m1 + P2^2/2m2 + (A/2) X1^2 + (B/2) X2^2 + (C/2) X1 X2

to its diagonal dimensionless form and evaluates eigenenergies and the
position/momentum eigenfunctions in sum/difference coordinates.  Internally
everything is dimensionless (hbar = M = K = omega = 1); raw-unit couplings
are scaled on entry and the scales (M, K, omega) are reported alongside.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels, specfun
from .errors import DomainError, UnboundModeError, UnsupportedRegimeError

DEGENERACY_THRESHOLD = 1e-12
_SQRT2 = math.sqrt(2.0)
_LN2 = math.log(2.0)


@dataclass(frozen=True)
class CoupledHamiltonian:
    """Raw couplings (m1, m2, A, B, C) of two harmonically coupled masses."""

    m1: float
    m2: float
    A: float
    B: float
    C: float

    def __post_init__(self):
        for name in ("m1", "m2", "A", "B"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0.0):
                raise DomainError(f"{name} must be positive and finite, got {v}")
        if not math.isfinite(self.C):
            raise DomainError(f"C must be finite, got {self.C}")
        if 4.0 * self.A * self.B - self.C * self.C <= 0.0:
            raise UnboundModeError(
                "bound normal modes require 4AB - C^2 > 0, got "
                f"{4.0 * self.A * self.B - self.C * self.C}"
            )


@dataclass(frozen=True)
class DiagonalizedSystem:
    """Normal-mode description: mass scale M, stiffness scale K, frequency
    omega = sqrt(K/M), frequency-splitting parameter eta, and the rotation
    angle alpha (radians) that decouples the coordinates."""

    M: float
    K: float
    omega: float
    eta: float
    alpha: float
    degenerate_branch: bool = False

    def __post_init__(self):
        if not (self.M > 0.0 and self.K > 0.0):
            raise DomainError("M and K must be positive")
        ref = math.sqrt(self.K / self.M)
        if abs(self.omega - ref) > 1e-14 * ref:
            raise DomainError(f"omega must equal sqrt(K/M) = {ref}, got {self.omega}")


def diagonalize(h):
    """Normal-mode data for a valid CoupledHamiltonian.

    e^{2 eta} = (A + B + sgn(A - B) sqrt((A-B)^2 + C^2)) / sqrt(4AB - C^2),
    tan(2 alpha) = C / (B - A) with 2 alpha on the principal branch, which
    is exactly the branch that makes reconstruct() a round trip.

    The formula above is undefined at A = B, so inside the degeneracy
    threshold the A -> B limit e^{2 eta} = sqrt((2A + |C|)/(2A - |C|)) is
    used with eta >= 0 and alpha = +/-45 degrees (+ for C < 0).
    """
    M = math.sqrt(h.m1 * h.m2)
    K = math.sqrt(h.A * h.B - 0.25 * h.C * h.C)
    omega = math.sqrt(K / M)
    if abs(h.A - h.B) <= DEGENERACY_THRESHOLD * (h.A + h.B):
        if h.C == 0.0:
            return DiagonalizedSystem(M, K, omega, 0.0, 0.0, True)
        a_bar = 0.5 * (h.A + h.B)
        eta = 0.25 * math.log((2.0 * a_bar + abs(h.C)) / (2.0 * a_bar - abs(h.C)))
        alpha = math.pi / 4.0 if h.C < 0.0 else -math.pi / 4.0
        return DiagonalizedSystem(M, K, omega, eta, alpha, True)
    disc = math.hypot(h.A - h.B, h.C)
    sign = 1.0 if h.A > h.B else -1.0
    e2eta = (h.A + h.B + sign * disc) / (2.0 * K)
    eta = 0.5 * math.log(e2eta)
    alpha = 0.5 * math.atan(h.C / (h.B - h.A))
    return DiagonalizedSystem(M, K, omega, eta, alpha, False)


def reconstruct(d):
    """Couplings (A, B, C) regenerated from the diagonal form by rotating
    the potential K (e^{2 eta} y1^2 + e^{-2 eta} y2^2) / 2 back through
    alpha; the round-trip oracle for diagonalize."""
    lam1 = d.K * math.exp(2.0 * d.eta)
    lam2 = d.K * math.exp(-2.0 * d.eta)
    mid = 0.5 * (lam1 + lam2)
    half = 0.5 * (lam1 - lam2)
    c2a = math.cos(2.0 * d.alpha)
    s2a = math.sin(2.0 * d.alpha)
    return (mid + half * c2a, mid - half * c2a, s2a * (lam2 - lam1))


def _norm_constant(k):
    # 1 / sqrt(sqrt(pi) k! 2^k), computed in the log domain
    return math.exp(-0.5 * (0.5 * math.log(math.pi) + specfun.ln_factorial(k) + k * _LN2))


@dataclass(frozen=True)
class ModePair:
    """Quantum numbers (n, m) of the two normal modes with their
    normalization constants c1 = 1/sqrt(sqrt(pi) n! 2^n) and the m-mirror."""

    n: int
    m: int
    c1: float = field(init=False)
    c2: float = field(init=False)

    def __post_init__(self):
        n = specfun._check_order(self.n, specfun.EVAL_N_MAX, "n")
        m = specfun._check_order(self.m, specfun.EVAL_N_MAX, "m")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "c1", _norm_constant(n))
        object.__setattr__(self, "c2", _norm_constant(m))


def energy(mode, eta):
    """Eigenenergy e^{eta} (n + 1/2) + e^{-eta} (m + 1/2) in units of
    hbar omega."""
    return math.exp(eta) * (mode.n + 0.5) + math.exp(-eta) * (mode.m + 0.5)


def _hermite_grid(order, arg):
    flat = _kernels.hermite_values(order, np.ascontiguousarray(arg.ravel()))
    return flat.reshape(arg.shape)


def wavefunction(mode, eta, space, u_plus, u_minus, alpha_deg=45.0):
    """Eigenfunction in sum/difference coordinates, alpha = +/-45 regime.

    space 'position' gives Psi_nm(x_plus, x_minus); 'momentum' gives
    Phi_nm(p_plus, p_minus), which is the same form with eta negated.
    Normalization: the squared modulus integrates to one against the
    coordinate-change Jacobian 1/2 (the double integral of |Psi|^2 over
    the plane equals 2).

    Accepts scalars or broadcastable arrays for the coordinates.  The
    general-alpha eigenfunction is deliberately not provided: callers
    outside |alpha| = 45 degrees get UnsupportedRegimeError instead of a
    silently wrong formula.
    """
    if abs(abs(alpha_deg) - 45.0) > 1e-9:
        raise UnsupportedRegimeError(
            f"sum/difference form requires alpha = +/-45 degrees, got {alpha_deg}"
        )
    if space == "position":
        s = float(eta)
    elif space == "momentum":
        s = -float(eta)
    else:
        raise DomainError(f"space must be 'position' or 'momentum', got {space!r}")
    if not math.isfinite(s):
        raise DomainError(f"eta must be finite, got {eta}")
    up = np.asarray(u_plus, dtype=np.float64)
    um = np.asarray(u_minus, dtype=np.float64)
    if not (np.all(np.isfinite(up)) and np.all(np.isfinite(um))):
        raise DomainError("coordinates must be finite")
    scalar = up.ndim == 0 and um.ndim == 0
    up, um = np.broadcast_arrays(up, um)
    if alpha_deg > 0.0:
        g1, g2 = um, up
    else:
        # alpha = -45: mode 1 couples to the sum coordinate and the
        # difference coordinate enters with a sign flip
        g1, g2 = up, -um
    arg1 = (math.exp(0.5 * s) / _SQRT2) * g1
    arg2 = (math.exp(-0.5 * s) / _SQRT2) * g2
    gauss = np.exp(-0.5 * (arg1 * arg1 + arg2 * arg2))
    value = mode.c1 * mode.c2 * gauss * _hermite_grid(mode.n, arg1) * _hermite_grid(mode.m, arg2)
    if scalar:
        return float(value)
    return value
