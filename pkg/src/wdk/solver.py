"""Iteration driver with per-step certification.

The semilocal test is run at the starting vector and, failing that, at
every later iterate: once an iterate passes, the convergence theorem applies
with that iterate as the new starting point, and from then on the first a
posteriori bound is a certified error bound used for stopping.
"""
from __future__ import annotations

import logging
import math
import os
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .certify import (
    BoundVec,
    Certificate,
    InclusionDiskSet,
    a_priori_bound,
    certificate_from_correction,
    inclusion_disks,
)
from .core_math import abs_vec, as_cvec, as_exponent, cmath_isfinite, componentwise_leq, conjugate_exponent
from .errors import (
    BoundUndefinedError,
    DegenerateGeometryError,
    DistinctnessError,
    DomainError,
    NotCertifiableError,
)
from .gauge import GaugeParams, beta_semi, phi_semi, psi_semi, varphi_semi
from .polynomial import Polynomial
from .weierstrass import correction, e_from_correction, two_point_correction

log = logging.getLogger(__name__)

STATUSES = ("certified_converged", "converged_uncertified", "max_iter_reached", "degenerate")


def _default_trace_mode() -> str:
    mode = os.environ.get("WDK_TRACE", "full").strip().lower()
    return mode if mode in ("full", "tail") else "full"


@dataclass(frozen=True)
class SolveOptions:
    p: object = field(default_factory=lambda: conjugate_exponent(math.inf))
    tol: float = 1e-12
    max_iter: int = 100
    mode: str = "one_point"  # or "two_point"
    require_certificate: bool = False
    trace: str = field(default_factory=_default_trace_mode)  # "full" or "tail"

    def __post_init__(self):
        object.__setattr__(self, "p", as_exponent(self.p))
        if not self.tol > 0:
            raise DomainError("tol must be positive")
        if self.max_iter < 1:
            raise DomainError("max_iter must be >= 1")
        if self.mode not in ("one_point", "two_point"):
            raise DomainError(f"unknown mode {self.mode!r}")
        if self.trace not in ("full", "tail"):
            raise DomainError(f"unknown trace mode {self.trace!r}")


@dataclass
class IterationTrace:
    """Aligned histories of iterates, corrections and E-values.

    ``bound_history`` holds, for each certified iterate ``k``, the a priori and
    first a posteriori bounds on ``|x^k - xi|`` and the second a posteriori bound
    on ``|x^{k+1} - xi|``.  ``offset`` is the index of the first retained
    iterate (nonzero only in tail mode).
    """

    iterates: list = field(default_factory=list)
    corrections: list = field(default_factory=list)
    e_values: list = field(default_factory=list)
    bound_history: list = field(default_factory=list)
    offset: int = 0
    keep_tail: bool = False

    def record(self, x, w, e) -> None:
        self.iterates.append(x)
        self.corrections.append(w)
        self.e_values.append(e)
        if self.keep_tail and len(self.iterates) > 2:
            del self.iterates[0], self.corrections[0], self.e_values[0]
            self.offset += 1
            first = self.offset
            self.bound_history = [b for b in self.bound_history if b.k + (b.kind == "a_post_2") >= first]

    def __len__(self):
        return len(self.iterates)


@dataclass
class SolveReport:
    status: str
    certificate: Optional[Certificate]
    roots: tuple
    disks: Optional[InclusionDiskSet]
    trace: IterationTrace
    iterations: int
    degree: int
    p: object
    certified_at: Optional[int] = None


def initial_guess(f: Polynomial, strategy: str = "circle") -> tuple:
    """Equally spaced points on a circle around the centroid of the zeros.

    Radius ``1 + max_k |a_k/a_0|**(1/k)``, rotated by ``pi/(2n)``.
    """
    if strategy != "circle":
        raise DomainError(f"unknown initial-guess strategy {strategy!r}")
    f.require_degree(2)
    n = f.degree
    a0 = f.leading
    center = -f.coeffs[1] / (n * a0)
    radius = 1.0 + max(abs(f.coeffs[k] / a0) ** (1.0 / k) for k in range(1, n + 1))
    return tuple(
        center + radius * complex(math.cos(2 * math.pi * j / n + math.pi / (2 * n)),
                                  math.sin(2 * math.pi * j / n + math.pi / (2 * n)))
        for j in range(n)
    )


def _finite(x) -> bool:
    return all(cmath_isfinite(c) for c in x)


def solve(f: Polynomial, x0: Optional[Sequence[complex]] = None, opts: Optional[SolveOptions] = None) -> SolveReport:
    opts = opts or SolveOptions()
    f.require_degree(2)
    n = f.degree
    pe = opts.p
    gp = GaugeParams(n, pe)
    x = as_cvec(x0) if x0 is not None else initial_guess(f)
    if len(x) != n:
        raise DomainError(f"x0 must have {n} components, got {len(x)}")

    trace = IterationTrace(keep_tail=opts.trace == "tail")
    cert0: Optional[Certificate] = None
    active: Optional[Certificate] = None
    first_step = None
    x_prev = None

    def finish(status, k, x, disks=None):
        log.debug("solve finished: %s after %d iterations", status, k)
        cert = active if active is not None else cert0
        return SolveReport(status, cert, tuple(x), disks, trace, k, n, pe,
                           active.index if active is not None else None)

    for k in range(opts.max_iter + 1):
        try:
            if opts.mode == "two_point" and x_prev is not None:
                w = two_point_correction(x_prev, x)
            else:
                w = correction(f, x)
            cert_k = certificate_from_correction(w, x, pe, index=k)
        except (DistinctnessError, DegenerateGeometryError):
            return finish("degenerate", k, x)
        e = cert_k.e0
        trace.record(x, w, e)
        if k == 0:
            cert0 = cert_k
            if opts.require_certificate and not cert0.passed:
                raise NotCertifiableError(f"semilocal test fails at x0: E={e!r}, phi(E)={cert0.lam!r}")
        if active is None and cert_k.passed:
            active = cert_k
            first_step = abs_vec(w)
            log.debug("certified at iterate %d (E=%g, lambda=%g)", k, e, cert_k.lam)

        bound = None
        if active is not None:
            _record_bounds(trace, active, first_step, k, w, e, gp)
            if e < gp.t_max and e < 1.0:
                beta = beta_semi(e, gp)
                if beta < 1.0:
                    bound = max(abs(wi) for wi in w) / (1.0 - beta)

        if bound is not None and bound <= opts.tol:
            try:
                disks = inclusion_disks(f, x, pe, correction=w)
            except NotCertifiableError:
                return finish("converged_uncertified", k, x)
            return finish("certified_converged", k, x, disks)
        if bound is None and max(abs(wi) for wi in w) <= opts.tol:
            return finish("converged_uncertified", k, x)
        if k == opts.max_iter:
            break

        x_next = tuple(a - b for a, b in zip(x, w))
        if not _finite(x_next):
            return finish("degenerate", k, x)
        x_prev, x = x, x_next

    return finish("max_iter_reached", opts.max_iter, x)


def _record_bounds(trace: IterationTrace, cert: Certificate, first_step, k: int, w, e: float, gp: GaugeParams) -> None:
    j = k - cert.index
    try:
        prior = a_priori_bound(cert, first_step, j)
        trace.bound_history.append(BoundVec("a_priori", k, prior.values))
    except BoundUndefinedError:
        pass
    if not (e < gp.t_max and e < 1.0):
        return
    beta = beta_semi(e, gp)
    if beta < 1.0:
        trace.bound_history.append(BoundVec("a_post_1", k, tuple(abs(wi) / (1.0 - beta) for wi in w)))
    lam, theta = phi_semi(e, gp), psi_semi(e, gp)
    denom = 1.0 - theta * lam * lam
    if denom > 0:
        coef = theta * lam / denom
        trace.bound_history.append(BoundVec("a_post_2", k, tuple(coef * abs(wi) for wi in w)))


def verify_trace(trace: IterationTrace, roots: Sequence[complex], cert: Certificate, slack: float = 0.0) -> bool:
    """Check a recorded trace against known zeros.

    Every bound must dominate the true error component-wise (up to an
    absolute ``slack`` for rounding), and E-values from the certified iterate
    on must obey ``E(x^{k+1}) <= varphi(E(x^k))``.
    """
    roots = as_cvec(roots)
    gp = cert.gauge
    errs = {}
    for idx, x in enumerate(trace.iterates):
        errs[trace.offset + idx] = abs_vec(tuple(a - b for a, b in zip(x, roots)))
    for b in trace.bound_history:
        target = b.k + 1 if b.kind == "a_post_2" else b.k
        if target not in errs:
            continue
        allowed = tuple(v + slack for v in b.values)
        if not componentwise_leq(errs[target], allowed):
            return False
    start = max(cert.index - trace.offset, 0)
    es = trace.e_values
    for idx in range(start, len(es) - 1):
        e = es[idx]
        if not (e < gp.t_max and e < 1.0):
            return False
        if es[idx + 1] > varphi_semi(e, gp) + slack:
            return False
    return True
