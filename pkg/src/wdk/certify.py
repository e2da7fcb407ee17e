"""Semilocal certification of the Weierstrass iteration.

Everything here is computable from the polynomial and the current iterate
alone: the certificate (E, lambda, theta, rho), the a priori and a posteriori
error bounds, the step-decay coefficients and the inclusion disks.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .core_math import abs_vec, as_cvec, as_exponent
from .errors import BoundUndefinedError, InconsistencyError, NotCertifiableError
from .gauge import GaugeParams, beta_semi, geom_sum, phi_semi, psi_semi
from .polynomial import Polynomial
from .weierstrass import correction as weierstrass_correction
from .weierstrass import e_from_correction


@dataclass(frozen=True)
class Certificate:
    """Outcome of the semilocal test at one iterate.

    ``lam`` is the quantity usually written lambda.  ``index`` records which
    iterate the test was run at, so a certificate obtained mid-run can be
    told apart from one at the starting vector.
    """

    e0: float
    lam: float
    theta: float
    rho: tuple
    passed: bool
    quadratic: bool
    n: int
    p: object
    index: int = 0

    @property
    def gauge(self) -> GaugeParams:
        return GaugeParams(self.n, self.p)


@dataclass(frozen=True)
class BoundVec:
    kind: str  # a_priori | a_post_1 | a_post_2 | step_decay_1 | step_decay_2
    k: int
    values: tuple


@dataclass(frozen=True)
class InclusionDisk:
    center: complex
    radius: float

    def contains(self, z: complex, slack: float = 0.0) -> bool:
        return abs(complex(z) - self.center) <= self.radius + slack


@dataclass(frozen=True)
class InclusionDiskSet:
    disks: tuple = field(default_factory=tuple)

    def __iter__(self):
        return iter(self.disks)

    def __len__(self):
        return len(self.disks)

    def __getitem__(self, i):
        return self.disks[i]

    def pairwise_disjoint(self) -> bool:
        ds = self.disks
        for i in range(len(ds)):
            for j in range(i + 1, len(ds)):
                if not ds[i].radius + ds[j].radius < abs(ds[i].center - ds[j].center):
                    return False
        return True


def certificate_from_correction(w: Sequence[complex], x: Sequence[complex], p, index: int = 0) -> Certificate:
    """Build the certificate from an iterate and its (already computed) correction."""
    pe = as_exponent(p)
    gp = GaugeParams(len(x), pe)
    e0 = e_from_correction(w, x, pe)
    if e0 < gp.t_max and e0 < 1.0:
        lam = phi_semi(e0, gp)
        theta = psi_semi(e0, gp)
        beta = beta_semi(e0, gp)
    else:
        lam, theta, beta = math.inf, 1.0 - gp.b * e0, math.inf
    passed = e0 < gp.t_max and lam <= 1.0
    if beta < 1.0:
        rho = tuple(abs(wi) / (1.0 - beta) for wi in w)
    else:
        rho = tuple(math.inf for _ in w)
    return Certificate(e0, lam, theta, rho, passed, passed and lam < 1.0, gp.n, pe, index)


def check_semilocal(f: Polynomial, x0: Sequence[complex], p) -> Certificate:
    """Test ``E(x0) < 2**(-1/q)`` and ``phi(E(x0)) <= 1``."""
    x0 = as_cvec(x0)
    return certificate_from_correction(weierstrass_correction(f, x0), x0, p)


def a_priori_bound(cert: Certificate, first_step: Sequence[float], k: int) -> BoundVec:
    """Bound on ``|x^k - xi|`` from the first step alone."""
    if not cert.passed:
        raise NotCertifiableError("a priori bound needs a passed certificate")
    lam, theta = cert.lam, cert.theta
    denom = 1.0 - theta * lam ** (2 ** k)
    if denom <= 0:
        raise BoundUndefinedError(f"theta*lambda^(2^k) >= 1 at k={k}")
    coef = theta ** k * lam ** int(geom_sum(k, 2.0)) / denom
    return BoundVec("a_priori", k, tuple(coef * s for s in first_step))


def _resolve_correction(f, xk, xk1, w):
    if w is not None:
        return as_cvec(w)
    if f is not None:
        return weierstrass_correction(f, xk)
    return tuple(a - b for a, b in zip(xk, xk1))


def a_posteriori_1(f: Optional[Polynomial], xk: Sequence[complex], xk1: Sequence[complex], p, k: int = 0,
                   *, correction: Optional[Sequence[complex]] = None) -> BoundVec:
    """``|x^k - xi| <= |x^{k+1} - x^k| / (1 - beta(E(x^k)))`` component-wise.

    ``|x^{k+1} - x^k|`` is taken as ``|W(x^k)|``: pass ``correction`` to reuse a
    known value, otherwise it is evaluated from ``f`` (or from the iterates if
    ``f`` is None).
    """
    xk = as_cvec(xk)
    w = _resolve_correction(f, xk, xk1, correction)
    gp = GaugeParams(len(xk), as_exponent(p))
    e = e_from_correction(w, xk, gp.p)
    if not (e < gp.t_max and e < 1.0):
        raise BoundUndefinedError(f"E(x^k)={e!r} outside the domain of beta")
    beta = beta_semi(e, gp)
    if beta >= 1.0:
        raise BoundUndefinedError(f"beta(E(x^k))={beta!r} >= 1")
    return BoundVec("a_post_1", k, tuple(abs(wi) / (1.0 - beta) for wi in w))


def a_posteriori_2(f: Optional[Polynomial], xk: Sequence[complex], xk1: Sequence[complex], p, k: int = 0,
                   *, correction: Optional[Sequence[complex]] = None) -> BoundVec:
    """``|x^{k+1} - xi| <= theta_k lambda_k / (1 - theta_k lambda_k**2) |x^{k+1} - x^k|``."""
    xk = as_cvec(xk)
    w = _resolve_correction(f, xk, xk1, correction)
    gp = GaugeParams(len(xk), as_exponent(p))
    e = e_from_correction(w, xk, gp.p)
    if not (e < gp.t_max and e < 1.0):
        raise BoundUndefinedError(f"E(x^k)={e!r} outside the domain of phi")
    lam, theta = phi_semi(e, gp), psi_semi(e, gp)
    denom = 1.0 - theta * lam * lam
    if denom <= 0:
        raise BoundUndefinedError("theta_k * lambda_k^2 >= 1")
    coef = theta * lam / denom
    return BoundVec("a_post_2", k, tuple(coef * abs(wi) for wi in w))


def step_decay_bounds(cert: Certificate, k: int) -> tuple:
    """Coefficients ``(theta lambda^(2^k), theta^k lambda^(2^k - 1))``.

    The first bounds ``|x^{k+2} - x^{k+1}|`` by ``|x^{k+1} - x^k|``, the second
    ``|x^{k+1} - x^k|`` by ``|x^1 - x^0|``.
    """
    if not cert.passed:
        raise NotCertifiableError("step-decay bounds need a passed certificate")
    lam, theta = cert.lam, cert.theta
    return theta * lam ** (2 ** k), theta ** k * lam ** int(geom_sum(k, 2.0))


def inclusion_disks(f: Polynomial, xk: Sequence[complex], p,
                    *, correction: Optional[Sequence[complex]] = None) -> InclusionDiskSet:
    """Disks ``|z - x_i| <= |W_i(x)| / (1 - beta(E(x)))``, one zero in each.

    Requires ``phi(E(x)) < 1`` strictly.
    """
    xk = as_cvec(xk)
    w = as_cvec(correction) if correction is not None else weierstrass_correction(f, xk)
    gp = GaugeParams(len(xk), as_exponent(p))
    e = e_from_correction(w, xk, gp.p)
    if not (e < gp.t_max and e < 1.0) or phi_semi(e, gp) >= 1.0:
        raise NotCertifiableError(f"phi(E(x))<1 fails at E={e!r}")
    beta = beta_semi(e, gp)
    disks = InclusionDiskSet(tuple(InclusionDisk(c, abs(wi) / (1.0 - beta)) for c, wi in zip(xk, w)))
    if not disks.pairwise_disjoint():
        raise InconsistencyError("inclusion disks overlap although phi(E) < 1")
    return disks
