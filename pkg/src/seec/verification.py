"""Self-verification: cross-checks every closed form against the numeric
oracle and reports experimental-path disagreements without failing them."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import criterion, quadrature, specfun
from .errors import DomainError

VERIFY_N_MAX = 12
_NORMALIZATION_CAP = 5  # (n, m) grid cap for the marginal-normalization block


@dataclass(frozen=True)
class Check:
    """One verification row.  Non-normative rows (the experimental
    closed-form path and the pairing report) never affect the exit
    status."""

    name: str
    value: float
    reference: float
    delta: float
    tol: float | None
    normative: bool
    status: str  # 'ok' | 'FAIL' | 'EXPERIMENTAL' | 'report'


def _check(name, value, reference, tol, normative=True, scale=1.0):
    delta = abs(value - reference)
    ok = delta <= tol * scale
    if normative:
        status = "ok" if ok else "FAIL"
    else:
        status = "ok" if ok else "EXPERIMENTAL"
    return Check(name, value, reference, delta, tol * scale, normative, status)


def _gh_integral(order, f):
    rule = quadrature.gauss_hermite_rule(order)
    return quadrature.integrate_panels(f, rule)


def _marginal_residual(side, n, m, eta):
    order = n if side == "w_minus" else m
    t = criterion.ScalingTransform(eta).t
    # the density support in u is the z-window scaled by 1/t
    bounds = [b / t for b in quadrature.entropy_panel_boundaries(order)]
    rule = quadrature.legendre_panel_rule(32, bounds)
    total = quadrature.integrate_panels(
        lambda u: criterion.marginal(side, n, m, eta, u), rule
    )
    return abs(total - 1.0)


def collect_checks(n_max):
    """All verification rows for orders up to n_max (<= 12)."""
    if not isinstance(n_max, (int, np.integer)) or isinstance(n_max, bool):
        raise DomainError(f"n_max must be an integer, got {n_max!r}")
    n_max = int(n_max)
    if n_max < 0 or n_max > VERIFY_N_MAX:
        raise DomainError(f"n_max must be in [0, {VERIFY_N_MAX}], got {n_max}")
    gamma = specfun.CONSTANTS.euler_gamma
    sqrt_pi = specfun.CONSTANTS.sqrt_pi
    checks = []
    for n in range(n_max + 1):
        norm = math.exp(0.5 * math.log(math.pi) + specfun.ln_factorial(n) + n * math.log(2.0))
        i0 = _gh_integral(n + 1, lambda z, n=n: specfun.hermite_values(n, z) ** 2)
        checks.append(_check(f"I0[{n}]", i0, norm, 1e-10, scale=norm))
        i1 = _gh_integral(n + 2, lambda z, n=n: specfun.hermite_values(n, z) ** 2)
        checks.append(_check(f"I1[{n}]", i1, norm, 1e-10, scale=norm))
        i2 = _gh_integral(n + 2, lambda z, n=n: -(z * z) * specfun.hermite_values(n, z) ** 2)
        checks.append(_check(f"I2[{n}]", i2, -norm * (n + 0.5), 1e-10, scale=norm * (n + 0.5)))
        i3 = quadrature.entropy_integral_numeric(n)
        i3_fine = quadrature.entropy_integral_numeric(n, 2 * quadrature.DEFAULT_PANEL_ORDER)
        checks.append(
            _check(f"I3conv[{n}]", i3, i3_fine, 1e-9, scale=max(1.0, abs(i3_fine)))
        )
        if n == 0:
            checks.append(_check("I3anchor[0]", i3, 0.0, 1e-12))
        if n == 1:
            analytic = 4.0 * sqrt_pi * (1.0 - 0.5 * gamma)
            checks.append(_check("I3anchor[1]", i3, analytic, 1e-9))
        closed = specfun.entropy_integral_closed_form(n)
        checks.append(
            _check(
                f"I3closed[{n}]",
                closed,
                i3,
                criterion.CLOSED_FORM_GATE_RTOL,
                normative=False,
                scale=max(1.0, abs(i3)),
            )
        )
        delta = criterion._closed_form_entropy_delta(n)
        if delta is not None:
            checks.append(
                Check(
                    name=f"S_closed_delta[{n}]",
                    value=delta,
                    reference=0.0,
                    delta=delta,
                    tol=1e-6,
                    normative=False,
                    status="ok" if delta <= 1e-6 else "EXPERIMENTAL",
                )
            )
    cap = min(n_max, _NORMALIZATION_CAP)
    for n in range(cap + 1):
        for m in range(cap + 1):
            for eta in (0.0, 0.5):
                for side, tag in (("w_minus", "w"), ("v_plus", "v")):
                    res = _marginal_residual(side, n, m, eta)
                    checks.append(
                        _check(f"norm_{tag}[{n},{m},eta={eta}]", 1.0 + res, 1.0, 1e-8)
                    )
    for n, m in ((0, 0), (1, 1), (2, 1)):
        if max(n, m) > n_max:
            continue
        for eta in (0.25, 0.5):
            rep = criterion.criterion_f(n, m, eta)
            checks.append(
                Check(
                    name=f"pairing[{n},{m},eta={eta}]",
                    value=rep.f,
                    reference=rep.alt_f,
                    delta=abs(rep.f - rep.alt_f),
                    tol=None,
                    normative=False,
                    status="report",
                )
            )
    return checks


def all_normative_pass(checks):
    return all(c.status == "ok" for c in checks if c.normative)
