"""Scalar control functions and convergence radii.

Three families live here, one per choice of the function of initial
conditions:

* ``*_local1`` measure the error against the separation of the true zeros,
* ``*_local2`` measure it against the separation of the current iterate,
* ``*_semi`` measure the Weierstrass correction against the separation of the
  current iterate, and need no knowledge of the zeros.

All functions take a :class:`GaugeParams` carrying the degree ``n`` and the
norm exponent.  With ``a = (n-1)**(1/q)``, ``b = 2**(1/q)`` and
``c = (n-1)**(1/p)`` the formulas read as they do in the literature.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .core_math import PExponent, as_exponent
from .errors import DomainError

_BRACKET_EPS = 1e-15
_BISECT_TOL = 1e-14
_BISECT_MAXITER = 200


@dataclass(frozen=True)
class GaugeParams:
    n: int
    p: PExponent

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 2:
            raise DomainError(f"degree n must be an integer >= 2, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "p", as_exponent(self.p))

    @property
    def a(self) -> float:
        return (self.n - 1) ** self.p.inv_q

    @property
    def b(self) -> float:
        return self.p.two_inv_q

    @property
    def c(self) -> float:
        return (self.n - 1) ** self.p.inv_p

    @property
    def t_max(self) -> float:
        """Right end ``2**(-1/q)`` of the admissible interval."""
        return 1.0 / self.b


def gauge_params(n: int, p) -> GaugeParams:
    return GaugeParams(n, as_exponent(p))


@dataclass(frozen=True)
class Radius:
    """A convergence radius and the equation it solves."""

    value: float
    kind: str  # local1 | local1_h | local2 | semilocal
    params: GaugeParams
    h: Optional[float] = None

    def __float__(self):
        return self.value


def _check_t(t: float, gp: GaugeParams, *, closed_right: bool = False) -> float:
    t = float(t)
    ok = t >= 0 and (t <= gp.t_max if closed_right else t < gp.t_max)
    if not ok or math.isnan(t):
        raise DomainError(f"t={t!r} outside [0, 2**(-1/q)) for n={gp.n}, p={gp.p}")
    return t


def _pow_minus_one(u: float, m: int) -> float:
    """``(1 + u)**m - 1`` without cancellation for small ``u``."""
    return math.expm1(m * math.log1p(u))


def _bisect_increasing(g: Callable[[float], float], target: float, lo: float, hi: float) -> float:
    """Largest bracket end ``lo`` with ``g(lo) <= target`` after bisection.

    ``g`` must be increasing with ``g(lo) <= target < g(hi)``; returning the
    lower end keeps the inequality on the safe side of the defining equation.
    """
    for _ in range(_BISECT_MAXITER):
        if hi - lo <= _BISECT_TOL:
            break
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if g(mid) <= target:
            lo = mid
        else:
            hi = mid
    return lo


def geom_sum(nterms: int, t: float) -> float:
    """``S_n(t) = 1 + t + ... + t**(n-1)``, with ``S_0 = 0``."""
    if nterms < 0:
        raise DomainError("number of terms must be nonnegative")
    total = 0.0
    term = 1.0
    for _ in range(nterms):
        total += term
        term *= t
    return total


# -- first local theory ------------------------------------------------------

def phi_local1(t: float, gp: GaugeParams) -> float:
    t = _check_t(t, gp)
    return _pow_minus_one(t / (gp.c * (1.0 - gp.b * t)), gp.n - 1)


def varphi_local1(t: float, gp: GaugeParams) -> float:
    return t * phi_local1(t, gp)


def radius_local1(gp: GaugeParams) -> Radius:
    s = 2.0 ** (1.0 / (gp.n - 1)) - 1.0
    return Radius(s / (gp.b * s + 1.0 / gp.c), "local1", gp)


def radius_local1_h(gp: GaugeParams, h: float) -> float:
    if not 0 < h < 1:
        raise DomainError(f"h must lie in (0, 1), got {h!r}")
    s = math.expm1(math.log1p(h) / (gp.n - 1))
    return s / (gp.b * s + 1.0 / gp.c)


# -- second local theory -----------------------------------------------------

def h_local2(t: float, gp: GaugeParams) -> float:
    if t < 0:
        raise DomainError("h is defined for t >= 0")
    return (1.0 + gp.b * t) * (1.0 + t / gp.c) ** (gp.n - 1)


def beta_local2(t: float, gp: GaugeParams) -> float:
    if t < 0:
        raise DomainError("beta is defined for t >= 0")
    return _pow_minus_one(t / gp.c, gp.n - 1)


def psi_local2(t: float, gp: GaugeParams) -> float:
    if t < 0:
        raise DomainError("psi is defined for t >= 0")
    return 1.0 - gp.b * t * (1.0 + t / gp.c) ** (gp.n - 1)


def phi_local2(t: float, gp: GaugeParams) -> float:
    psi = psi_local2(t, gp)
    if psi <= 0:
        raise DomainError(f"psi(t) <= 0 at t={t!r}")
    return beta_local2(t, gp) / psi


def varphi_local2(t: float, gp: GaugeParams) -> float:
    return t * phi_local2(t, gp)


def radius_local2(gp: GaugeParams) -> Radius:
    """Unique positive solution of ``h(t) = 2``."""
    value = _bisect_increasing(lambda t: h_local2(t, gp), 2.0, 0.0, gp.t_max - _BRACKET_EPS)
    return Radius(value, "local2", gp)


def lower_bound_local2(gp: GaugeParams) -> float:
    n = gp.n
    return n * (2.0 ** (1.0 / n) - 1.0) / (gp.a + gp.b)


def wang_zhao_threshold(gp: GaugeParams) -> float:
    s = 2.0 ** (1.0 / (gp.n - 1)) - 1.0
    return s / (2.0 * gp.b * s + 1.0 / gp.c)


def c_quadratic(t: float, gp: GaugeParams) -> float:
    if not 0 <= t < 1:
        raise DomainError(f"c(t) needs t in [0, 1), got {t!r}")
    return (2.0 * t - t * t) / (2.0 * gp.a)


def c_rational(t: float, gp: GaugeParams) -> float:
    if not 0 <= t < 1:
        raise DomainError(f"c(t) needs t in [0, 1), got {t!r}")
    return 2.0 * t / (gp.a * (t + 2.0))


C_FUNCTIONS = {"quadratic": c_quadratic, "rational": c_rational}


def c_function(tag: str) -> Callable[[float, GaugeParams], float]:
    try:
        return C_FUNCTIONS[tag]
    except KeyError:
        raise DomainError(f"unknown c-function {tag!r}; expected one of {sorted(C_FUNCTIONS)}") from None


def c_admissible_rhs(t: float, gp: GaugeParams) -> float:
    """Upper envelope ``(n-1)**(1/p) * ((1+t)**(1/(n-1)) - 1)`` any c must stay under."""
    return gp.c * math.expm1(math.log1p(t) / (gp.n - 1))


def sigma_feasible(sigma: float, gp: GaugeParams, c: str = "quadratic", step: float = 1e-4) -> bool:
    """Whether ``t c(t) <= c(t**2) (1 - b (1+t) c(t))`` on a grid of ``[0, sigma]``."""
    if not 0 < sigma < 1:
        raise DomainError(f"sigma must lie in (0, 1), got {sigma!r}")
    cf = c_function(c)
    ts = np.linspace(0.0, sigma, int(math.ceil(sigma / step)) + 1)
    for t in ts:
        t = float(t)
        ct = cf(t, gp)
        if t * ct > cf(t * t, gp) * (1.0 - gp.b * (1.0 + t) * ct):
            return False
    return True


def rational_sigma_cap(gp: GaugeParams) -> float:
    """Largest sigma for which the rational c-function satisfies the sigma condition."""
    a, b2 = gp.a, 2.0 * gp.b
    return (a - b2) / (a + b2)


# -- semilocal theory --------------------------------------------------------

def _semi_factor(t: float, gp: GaugeParams) -> float:
    return (1.0 + t / (gp.c * (1.0 - gp.b * t))) ** (gp.n - 1)


def phi_semi(t: float, gp: GaugeParams) -> float:
    t = _check_t(t, gp)
    if t >= 1:
        raise DomainError("semilocal phi needs t < 1")
    # single division keeps the boundary values exact where they are representable
    return gp.a * t * _semi_factor(t, gp) / ((1.0 - t) * (1.0 - gp.b * t))


def beta_semi(t: float, gp: GaugeParams) -> float:
    t = _check_t(t, gp)
    if t >= 1:
        raise DomainError("semilocal beta needs t < 1")
    return gp.a * t * _semi_factor(t, gp) / (1.0 - t)


def psi_semi(t: float, gp: GaugeParams) -> float:
    t = _check_t(t, gp)
    return 1.0 - gp.b * t


def varphi_semi(t: float, gp: GaugeParams) -> float:
    return t * phi_semi(t, gp)


def radius_semi(gp: GaugeParams) -> Radius:
    """Unique solution of ``phi_semi(t) = 1`` in ``(0, 2**(-1/q))``."""
    hi = min(gp.t_max, 1.0) - _BRACKET_EPS
    value = _bisect_increasing(lambda t: phi_semi(t, gp), 1.0, 0.0, hi)
    return Radius(value, "semilocal", gp)


def simple_semilocal_threshold(gp: GaugeParams) -> float:
    """Simple sufficient bound ``1 / (2 (n-1)**(1/q) + 2)`` for the semilocal test."""
    return 1.0 / (2.0 * gp.a + 2.0)
