"""Validation of the local convergence theorems against a known root-vector.

These checks need the true zeros, so they cannot certify anything at run
time; they exist to reproduce the local theorems on concrete instances.
Each ``check_local*`` evaluates the theorem's initial condition, then runs
the iteration and tests its error estimates step by step.  Estimates are
compared with an absolute rounding allowance ``slack`` because the exact
bounds underflow long before floating-point iterates stop moving.
"""
from __future__ import annotations

import math
import sys
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .core_math import abs_vec, as_cvec, as_exponent, min_pairwise_distances, p_norm, vec_quotient
from .errors import DistinctnessError, PreconditionError
from .gauge import (
    GaugeParams,
    c_function,
    lower_bound_local2,
    phi_local1,
    phi_local2,
    psi_local2,
    radius_local1,
    radius_local1_h,
    radius_local2,
    sigma_feasible,
    wang_zhao_threshold,
)
from .polynomial import Polynomial, separation, smale_gamma
from .weierstrass import step

_EPS = sys.float_info.epsilon


@dataclass
class LocalCheckReport:
    theorem: str  # local1 | local1_h | local2 | local3
    condition_value: float
    threshold: float
    satisfied: bool
    lam: float
    theta: Optional[float] = None
    per_step_ok: list = field(default_factory=list)
    quadratic: bool = False
    flags: dict = field(default_factory=dict)

    @property
    def all_ok(self) -> bool:
        return self.satisfied and all(self.per_step_ok)


def default_slack(roots: Sequence[complex]) -> float:
    return 16 * _EPS * max(1.0, max(abs(r) for r in roots))


def e_local1(x: Sequence[complex], roots: Sequence[complex], p) -> float:
    """``||(x - xi) / d(xi)||_p``."""
    x, roots = as_cvec(x), as_cvec(roots)
    diff = tuple(a - b for a, b in zip(x, roots))
    return p_norm(vec_quotient(diff, min_pairwise_distances(roots)), as_exponent(p))


def e_local2(x: Sequence[complex], roots: Sequence[complex], p) -> float:
    """``||(x - xi) / d(x)||_p``."""
    x, roots = as_cvec(x), as_cvec(roots)
    diff = tuple(a - b for a, b in zip(x, roots))
    return p_norm(vec_quotient(diff, min_pairwise_distances(x)), as_exponent(p))


def local1_condition(e: float, gp: GaugeParams, h: Optional[float] = None) -> bool:
    """Strict ``E < R(n,p)``, or non-strict ``E <= R(n,p,h)`` when ``h`` is given."""
    if h is None:
        return e < radius_local1(gp).value
    return e <= radius_local1_h(gp, h)


def local2_condition(e: float, gp: GaugeParams) -> tuple:
    """``(satisfied, quadratic)`` for the condition ``h(E) <= 2``."""
    r = radius_local2(gp).value
    return e <= r, e < r


def _run_estimates(f: Polynomial, roots: tuple, x0: tuple, steps: int, slack: float,
                   ratio: Callable[[int], float], total: Callable[[int], float],
                   extra: Optional[Callable[[int, tuple], bool]] = None) -> list:
    """Iterate and test ``|x^{k+1}-xi| <= ratio(k)|x^k-xi|`` and ``<= total(k+1)|x^0-xi|``."""
    err0 = abs_vec(tuple(a - b for a, b in zip(x0, roots)))
    x = x0
    err = err0
    ok = []
    for k in range(steps):
        try:
            x_next = step(f, x).output
            min_pairwise_distances(x_next)
        except DistinctnessError:
            ok.extend([False] * (steps - k))
            break
        err_next = abs_vec(tuple(a - b for a, b in zip(x_next, roots)))
        r, t = ratio(k), total(k + 1)
        good = all(en <= r * ec + slack and en <= t * e0 + slack
                   for en, ec, e0 in zip(err_next, err, err0))
        if extra is not None:
            good = good and extra(k + 1, err_next)
        ok.append(good)
        x, err = x_next, err_next
    return ok


def check_local1(f: Polynomial, roots: Sequence[complex], x0: Sequence[complex], p,
                 h: Optional[float] = None, steps: int = 20, slack: Optional[float] = None) -> LocalCheckReport:
    """First local theorem: ``E(x0) < R(n,p)`` (or ``<= R(n,p,h)``) and quadratic estimates."""
    roots, x0 = as_cvec(roots), as_cvec(x0)
    gp = GaugeParams(len(roots), as_exponent(p))
    slack = default_slack(roots) if slack is None else slack
    e = e_local1(x0, roots, gp.p)
    satisfied = local1_condition(e, gp, h)
    if h is None:
        threshold = radius_local1(gp).value
        lam = phi_local1(e, gp) if e < gp.t_max else math.inf
        theorem = "local1"
    else:
        threshold = radius_local1_h(gp, h)
        lam = h
        theorem = "local1_h"
    per_step = _run_estimates(f, roots, x0, steps, slack,
                              ratio=lambda k: lam ** (2 ** k),
                              total=lambda k: lam ** (2 ** k - 1))
    return LocalCheckReport(theorem, e, threshold, satisfied, lam, None, per_step, satisfied)


def dochev_radius(roots: Sequence[complex], p, h: float) -> float:
    """``R(n,p,h) sep f``: radius of the ball around the zeros in the p-norm."""
    gp = GaugeParams(len(roots), as_exponent(p))
    return radius_local1_h(gp, h) * separation(roots)


def km_threshold(roots: Sequence[complex], p) -> float:
    """``R(n,p) sep f``: the largest admissible constant c."""
    gp = GaugeParams(len(roots), as_exponent(p))
    return radius_local1(gp).value * separation(roots)


def yakoubsohn_threshold(f: Polynomial, roots: Sequence[complex], p, h: float) -> float:
    """``R(n,p,h) / (2 gamma(f))``."""
    gp = GaugeParams(len(roots), as_exponent(p))
    return radius_local1_h(gp, h) / (2.0 * smale_gamma(f, roots))


def check_local2(f: Polynomial, roots: Sequence[complex], x0: Sequence[complex], p,
                 steps: int = 20, slack: Optional[float] = None) -> LocalCheckReport:
    """Second local theorem: ``h(E(x0)) <= 2`` with ``theta lambda^(2^k)`` estimates."""
    roots, x0 = as_cvec(roots), as_cvec(x0)
    gp = GaugeParams(len(roots), as_exponent(p))
    slack = default_slack(roots) if slack is None else slack
    e = e_local2(x0, roots, gp.p)
    satisfied, quadratic = local2_condition(e, gp)
    try:
        lam, theta = phi_local2(e, gp), psi_local2(e, gp)
    except ValueError:
        lam, theta = math.inf, psi_local2(e, gp)
    flags = {
        "han": e <= lower_bound_local2(gp),
        "wang_zhao": e <= wang_zhao_threshold(gp),
    }
    per_step = _run_estimates(f, roots, x0, steps, slack,
                              ratio=lambda k: theta * lam ** (2 ** k),
                              total=lambda k: theta ** k * lam ** (2 ** k - 1))
    return LocalCheckReport("local2", e, radius_local2(gp).value, satisfied, lam, theta, per_step, quadratic, flags)


def check_local3(f: Polynomial, roots: Sequence[complex], x0: Sequence[complex], p,
                 c_tag: str = "quadratic", sigma: float = 0.5, steps: int = 20,
                 slack: Optional[float] = None) -> LocalCheckReport:
    """Third local theorem: ``E(x0) <= c(sigma)`` with ``sigma^(2^k)`` estimates.

    With the quadratic c-function the sup-norm bound
    ``||x^k - xi||_inf <= sigma^(2^k) max_i d_i(x0)`` is checked as well.
    """
    roots, x0 = as_cvec(roots), as_cvec(x0)
    gp = GaugeParams(len(roots), as_exponent(p))
    if not sigma_feasible(sigma, gp, c_tag):
        raise PreconditionError(f"sigma={sigma!r} violates the sigma condition for c={c_tag}, n={gp.n}")
    slack = default_slack(roots) if slack is None else slack
    cf = c_function(c_tag)
    e = e_local2(x0, roots, gp.p)
    threshold = cf(sigma, gp)
    satisfied = e <= threshold
    flags = {}
    extra = None
    if c_tag == "quadratic":
        dmax = max(min_pairwise_distances(x0))
        err0 = max(abs(a - b) for a, b in zip(x0, roots))
        flags["tilli_initial"] = err0 <= sigma * dmax + slack

        def extra(k, err):
            return max(err) <= sigma ** (2 ** k) * dmax + slack

    per_step = _run_estimates(f, roots, x0, steps, slack,
                              ratio=lambda k: sigma ** (2 ** k),
                              total=lambda k: sigma ** (2 ** k - 1),
                              extra=extra)
    return LocalCheckReport("local3", e, threshold, satisfied, sigma, None, per_step, satisfied, flags)
