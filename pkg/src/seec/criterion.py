"""The entanglement criterion engine.

Marginal densities of the sum/difference coordinates, their Shannon
entropies, the criterion function

    f(eta) = H[w-] + H[v+] - ln(2 pi e) = eta0 - eta,

the threshold table eta0(n, m) and the verdict (entangled iff f < 0).

The eta dependence of each entropy is analytic (a pure -ln t scale term
with t = e^{eta/2}/sqrt(2)), so entropies decompose as S_k - ln t where
S_k is the unit-scale level entropy.  Sweeps over eta therefore never
re-integrate, and f(eta) = eta0 - eta holds exactly by construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import _kernels, quadrature, specfun
from .errors import DomainError

MODE_N_MAX = 32
LN_2PI_E = specfun.CONSTANTS.ln_2pi_e
CLOSED_FORM_GATE_RTOL = 1e-6

_LN2 = math.log(2.0)
_SIDES = ("w_minus", "v_plus")


@dataclass(frozen=True)
class ScalingTransform:
    """Coordinate scaling with t = e^{eta/2}/sqrt(2): position maps
    z1 = t x-, z2 = x+/(2t); momentum maps p1 = p-/(2t), p2 = t p+."""

    eta: float
    t: float = field(init=False)
    ln_t: float = field(init=False)

    def __post_init__(self):
        eta = float(self.eta)
        if not math.isfinite(eta):
            raise DomainError(f"eta must be finite, got {self.eta}")
        object.__setattr__(self, "eta", eta)
        object.__setattr__(self, "t", math.exp(0.5 * eta) / math.sqrt(2.0))
        # kept linear in eta (not log(t)) so entropies are exactly linear
        object.__setattr__(self, "ln_t", 0.5 * eta - 0.5 * _LN2)

    def z1(self, x_minus):
        return self.t * x_minus

    def z2(self, x_plus):
        return x_plus / (2.0 * self.t)

    def p1(self, p_minus):
        return p_minus / (2.0 * self.t)

    def p2(self, p_plus):
        return self.t * p_plus


def _check_mode(n, m):
    return (
        specfun._check_order(n, MODE_N_MAX, "n"),
        specfun._check_order(m, MODE_N_MAX, "m"),
    )


def _ln_norm(k):
    # ln(sqrt(pi) k! 2^k); its exponential is the orthogonality norm of H_k
    return 0.5 * math.log(math.pi) + specfun.ln_factorial(k) + k * _LN2


@lru_cache(maxsize=None)
def _closed_form_i3(k):
    """(value, validated) for the experimental closed-form entropy integral,
    gated per order against the normative quadrature."""
    value = specfun.entropy_integral_closed_form(k)
    reference = quadrature.entropy_integral_numeric(k)
    validated = abs(value - reference) <= CLOSED_FORM_GATE_RTOL * max(1.0, abs(reference))
    return value, validated


@dataclass(frozen=True)
class IntegralBundle:
    """Closed-form integrals I0..I2 / J0..J2, the entropy integrals I3/J3
    with their provenance, and the marginal prefactors q_nm, r_nm.

    The I-side lives in the difference coordinate (order n), the J-side is
    its momentum-sum mirror (order m), so I0 = J1-at-n and so on with
    n <-> m swapped.
    """

    n: int
    m: int
    eta: float
    I0: float
    I1: float
    I2: float
    I3: float
    J0: float
    J1: float
    J2: float
    J3: float
    q_nm: float
    r_nm: float
    i3_source: str
    j3_source: str
    i3_closed_form: float | None = None
    j3_closed_form: float | None = None


def integral_bundle(n, m, eta=0.0, i3_path="quadrature"):
    """Assemble the integral bundle for mode pair (n, m) at coupling eta.

    I3/J3 come from the panel quadrature by default; the experimental
    closed-form route is recorded alongside whenever it survives its
    per-order gate, and may be selected with i3_path='closed-form' only
    where validated.

    The prefactors use the normalization-preserving constant
    q_nm = t I0 / (pi n! m! 2^{n+m}) (and the r_nm mirror): 2^{n+m} is the
    unique power for which the marginals integrate to one.
    """
    n, m = _check_mode(n, m)
    if i3_path not in ("quadrature", "closed-form"):
        raise DomainError(f"i3_path must be 'quadrature' or 'closed-form', got {i3_path!r}")
    tr = ScalingTransform(eta)
    ln_n, ln_m = _ln_norm(n), _ln_norm(m)
    i1 = math.exp(ln_n)  # 2^n n! sqrt(pi)
    j1 = math.exp(ln_m)
    i3_quad = quadrature.entropy_integral_numeric(n)
    j3_quad = quadrature.entropy_integral_numeric(m)
    i3_closed, i3_ok = _closed_form_i3(n)
    j3_closed, j3_ok = _closed_form_i3(m)
    if i3_path == "closed-form":
        if not (i3_ok and j3_ok):
            raise DomainError(
                f"closed-form entropy integral not validated for orders ({n}, {m})"
            )
        i3, j3 = i3_closed, j3_closed
        i3_source = j3_source = "closed-form"
    else:
        i3, j3 = i3_quad, j3_quad
        i3_source = j3_source = "quadrature"
    return IntegralBundle(
        n=n,
        m=m,
        eta=tr.eta,
        I0=j1,
        I1=i1,
        I2=-i1 * (n + 0.5),
        I3=i3,
        J0=i1,
        J1=j1,
        J2=-j1 * (m + 0.5),
        J3=j3,
        q_nm=math.exp(tr.ln_t - ln_n),
        r_nm=math.exp(tr.ln_t - ln_m),
        i3_source=i3_source,
        j3_source=j3_source,
        i3_closed_form=i3_closed if i3_ok else None,
        j3_closed_form=j3_closed if j3_ok else None,
    )


def marginal(side, n, m, eta, u):
    """Marginal density value: w-(x-) = q_nm e^{-z1^2} H_n^2(z1) for side
    'w_minus', or v+(p+) = r_nm e^{-p2^2} H_m^2(p2) for side 'v_plus'.

    Accepts a scalar or array of coordinates; nonnegative everywhere.
    """
    n, m = _check_mode(n, m)
    if side not in _SIDES:
        raise DomainError(f"side must be one of {_SIDES}, got {side!r}")
    tr = ScalingTransform(eta)
    order = n if side == "w_minus" else m
    ln_pref = tr.ln_t - _ln_norm(order)
    u = np.asarray(u, dtype=np.float64)
    if not np.all(np.isfinite(u)):
        raise DomainError("coordinate must be finite")
    scalar = u.ndim == 0
    z = tr.t * np.atleast_1d(u)
    h = _kernels.hermite_values(order, np.ascontiguousarray(z))
    value = math.exp(ln_pref) * np.exp(-z * z) * h * h
    if scalar:
        return float(value[0])
    return value.reshape(u.shape)


@lru_cache(maxsize=None)
def standard_entropy(k, panel_order=quadrature.DEFAULT_PANEL_ORDER):
    """Entropy S_k of the unit-scale level-k density c_k^2 e^{-z^2} H_k^2(z):

        S_k = ln(sqrt(pi) k! 2^k) + k + 1/2 - I3(k) / (2^k k! sqrt(pi))

    with I3 from the normative quadrature.  Cached write-once; the value is
    a pure function of k so cold, warm and raced lookups agree.
    """
    k = specfun._check_order(k, MODE_N_MAX, "k")
    ln_norm = _ln_norm(k)
    i3 = quadrature.entropy_integral_numeric(k, panel_order)
    return ln_norm + k + 0.5 - i3 * math.exp(-ln_norm)


@lru_cache(maxsize=None)
def _entropy_excess(k):
    # S_k - S_0; exactly zero at k = 0, which keeps eta0(0, 0) an exact 0.0
    return standard_entropy(k) - standard_entropy(0)


def shannon_entropy(side, n, m, eta=0.0, bundle=None):
    """Shannon entropy of the chosen marginal via the integral expansion

        H = -(q/t) { (ln q) I1 + I2 + I3 }        (w- side, r/J mirror)

    using the bundle's I3/J3 provenance.  Algebraically this equals the
    scaling decomposition standard_entropy(order) - ln t, which criterion_f
    uses for exact eta linearity; the expansion here is the cross-checkable
    route.
    """
    n, m = _check_mode(n, m)
    if side not in _SIDES:
        raise DomainError(f"side must be one of {_SIDES}, got {side!r}")
    if bundle is None:
        bundle = integral_bundle(n, m, eta)
    tr = ScalingTransform(eta)
    if side == "w_minus":
        ln_q = tr.ln_t - _ln_norm(n)
        c2 = math.exp(-_ln_norm(n))  # q_nm / t
        return -c2 * (ln_q * bundle.I1 + bundle.I2 + bundle.I3)
    ln_r = tr.ln_t - _ln_norm(m)
    c2 = math.exp(-_ln_norm(m))
    return -c2 * (ln_r * bundle.J1 + bundle.J2 + bundle.J3)


@lru_cache(maxsize=None)
def _closed_form_entropy_delta(k):
    # |S_k(quadrature) - S_k(closed form)| where the closed form validates
    value, ok = _closed_form_i3(k)
    if not ok:
        return None
    ln_norm = _ln_norm(k)
    s_closed = ln_norm + k + 0.5 - value * math.exp(-ln_norm)
    return abs(standard_entropy(k) - s_closed)


@dataclass(frozen=True)
class EntropyReport:
    """Full criterion evaluation at one (n, m, eta).

    ``f`` is the criterion function (entangled iff f < 0), ``eta0`` its
    eta-intercept, ``alt_f`` the alternate pairing H[w+] + H[v-] -
    ln(2 pi e) (reported, never substituted: its analytic form is
    eta0 + eta, not eta0 - eta), and ``oracle_delta`` the closed-form vs
    quadrature entropy disagreement where the experimental path validates
    (None otherwise).
    """

    n: int
    m: int
    eta: float
    H_w_minus: float
    H_v_plus: float
    f: float
    eta0: float
    entangled: bool
    alt_f: float
    oracle_delta: float | None


def threshold_eta0(n, m):
    """Threshold eta0(n, m) = f(0), symmetric in (n, m).

    Equals S_n + S_m + ln 2 - ln(2 pi e); written as excess entropies
    (S_k - S_0) because 2 S_0 + ln 2 - ln(2 pi e) vanishes identically,
    which keeps the ground-state threshold an exact zero.
    """
    n, m = _check_mode(n, m)
    return _entropy_excess(n) + _entropy_excess(m)


def criterion_f(n, m, eta):
    """EntropyReport at coupling eta; f = eta0 - eta exactly."""
    n, m = _check_mode(n, m)
    eta = float(eta)
    if not math.isfinite(eta):
        raise DomainError(f"eta must be finite, got {eta}")
    eta0 = threshold_eta0(n, m)
    tr = ScalingTransform(eta)
    h_w = standard_entropy(n) - tr.ln_t
    h_v = standard_entropy(m) - tr.ln_t
    f = eta0 - eta
    deltas = [d for d in (_closed_form_entropy_delta(n), _closed_form_entropy_delta(m)) if d is not None]
    return EntropyReport(
        n=n,
        m=m,
        eta=eta,
        H_w_minus=h_w,
        H_v_plus=h_v,
        f=f,
        eta0=eta0,
        entangled=f < 0.0,
        alt_f=eta0 + eta,
        oracle_delta=max(deltas) if deltas else None,
    )


def is_entangled(n, m, eta):
    """True iff the criterion detects entanglement: f(n, m, eta) < 0."""
    return criterion_f(n, m, eta).f < 0.0
