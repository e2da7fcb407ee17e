"""Dense complex polynomials stored highest-degree-first.

Evaluation uses a compensated Horner scheme: each multiply-add is split into
its rounded result and exact rounding error with error-free transformations,
and the errors are pushed through a second Horner recurrence.  The result is
as accurate as plain Horner run in twice the working precision, which is what
keeps Weierstrass corrections meaningful when ``x_i`` sits within a few ulps
of a zero.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .core_math import as_cvec, min_pairwise_distances
from .errors import CriticalPointError, DomainError

_SPLITTER = 134217729.0  # 2**27 + 1


def _two_sum(a: float, b: float):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _two_prod(a: float, b: float):
    p = a * b
    t = _SPLITTER * a
    ah = t - (t - a)
    al = a - ah
    t = _SPLITTER * b
    bh = t - (t - b)
    bl = b - bh
    return p, al * bl - (((p - ah * bh) - al * bh) - ah * bl)


@dataclass(frozen=True)
class Polynomial:
    """``a_0 z**n + a_1 z**(n-1) + ... + a_n`` with ``a_0 != 0``.

    The zero polynomial is represented by ``coeffs == (0j,)``; it only arises
    from differentiating past the degree.
    """

    coeffs: tuple

    def __post_init__(self):
        c = as_cvec(self.coeffs)
        if not c:
            raise DomainError("a polynomial needs at least one coefficient")
        if c[0] == 0 and len(c) > 1:
            raise DomainError("leading coefficient a_0 must be nonzero")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_coefficients(cls, coeffs: Sequence[complex]) -> Polynomial:
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> complex:
        return self.coeffs[0]

    @property
    def is_zero(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == 0

    def monic(self) -> Polynomial:
        a0 = self.coeffs[0]
        return Polynomial(tuple(c / a0 for c in self.coeffs))

    def scaled(self, factor: complex) -> Polynomial:
        return Polynomial(tuple(c * factor for c in self.coeffs))

    def __call__(self, z: complex) -> complex:
        return evaluate(self, z)

    def __add__(self, other: Polynomial) -> Polynomial:
        a, b = self.coeffs, other.coeffs
        m = max(len(a), len(b))
        a = (0j,) * (m - len(a)) + a
        b = (0j,) * (m - len(b)) + b
        s = [x + y for x, y in zip(a, b)]
        while len(s) > 1 and s[0] == 0:
            s.pop(0)
        return Polynomial(tuple(s))

    def require_degree(self, minimum: int = 2) -> Polynomial:
        if self.degree < minimum:
            raise DomainError(f"polynomial degree must be >= {minimum}, got {self.degree}")
        return self


def evaluate(f: Polynomial, z: complex) -> complex:
    """Compensated Horner value of ``f`` at ``z``."""
    z = complex(z)
    zr, zi = z.real, z.imag
    coeffs = f.coeffs
    sr, si = coeffs[0].real, coeffs[0].imag
    cr = ci = 0.0
    for a in coeffs[1:]:
        p1, e1 = _two_prod(sr, zr)
        p2, e2 = _two_prod(si, zi)
        p3, e3 = _two_prod(sr, zi)
        p4, e4 = _two_prod(si, zr)
        r1, g1 = _two_sum(p1, -p2)
        i1, g2 = _two_sum(p3, p4)
        sr, h1 = _two_sum(r1, a.real)
        si, h2 = _two_sum(i1, a.imag)
        # running error polynomial, plain arithmetic
        cr, ci = (cr * zr - ci * zi + (e1 - e2 + g1 + h1),
                  cr * zi + ci * zr + (e3 + e4 + g2 + h2))
    return complex(sr + cr, si + ci)


def horner(f: Polynomial, z: complex) -> complex:
    """Plain (uncompensated) Horner value, kept as a cross-check."""
    acc = f.coeffs[0]
    for a in f.coeffs[1:]:
        acc = acc * z + a
    return acc


def derivative(f: Polynomial, k: int = 1) -> Polynomial:
    """k-th formal derivative; past the degree this is the zero polynomial."""
    if k < 0:
        raise DomainError("derivative order must be nonnegative")
    n = f.degree
    if k == 0:
        return f
    if k > n:
        return Polynomial((0j,))
    out = []
    for idx, a in enumerate(f.coeffs[: n - k + 1]):
        power = n - idx
        factor = 1
        for m in range(power - k + 1, power + 1):
            factor *= m
        out.append(a * factor)
    return Polynomial(tuple(out))


def from_roots(roots: Sequence[complex], a0: complex = 1.0) -> Polynomial:
    """Expand ``a0 * prod(z - r)`` by sequential convolution."""
    a0 = complex(a0)
    if a0 == 0:
        raise DomainError("leading coefficient a0 must be nonzero")
    coeffs = [a0]
    for r in as_cvec(roots):
        nxt = coeffs + [0j]
        for idx in range(1, len(nxt)):
            nxt[idx] -= r * coeffs[idx - 1]
        coeffs = nxt
    return Polynomial(tuple(coeffs))


def lagrange_residual(f: Polynomial, x: Sequence[complex], z: complex) -> complex:
    """``f(z)`` minus its Lagrange form through the Weierstrass corrections at ``x``.

    ``f`` is normalised to monic first (the corrections do not change).  The
    result vanishes in exact arithmetic for every ``z``.
    """
    from .weierstrass import correction

    g = f.monic()
    x = as_cvec(x)
    if len(x) != g.degree:
        raise DomainError("x must have one component per zero")
    w = correction(g, x)
    z = complex(z)
    total = 0j
    for i in range(len(x)):
        term = w[i]
        for j, xj in enumerate(x):
            if j != i:
                term *= z - xj
        total += term
    full = 1 + 0j
    for xj in x:
        full *= z - xj
    return evaluate(g, z) - (total + full)


def separation(roots: Sequence[complex]) -> float:
    """``sep f``: the minimum distance between two zeros."""
    return min(min_pairwise_distances(as_cvec(roots)))


def smale_gamma_at(f: Polynomial, z: complex) -> float:
    """Smale's ``gamma(f, z) = max_{k>=2} |f^(k)(z) / (k! f'(z))|**(1/(k-1))``."""
    d1 = evaluate(derivative(f, 1), z)
    if d1 == 0:
        raise CriticalPointError(f"f'(z) vanishes at z={z!r}")
    best = 0.0
    for k in range(2, f.degree + 1):
        dk = evaluate(derivative(f, k), z)
        val = abs(dk / (math.factorial(k) * d1)) ** (1.0 / (k - 1))
        best = max(best, val)
    return best


def smale_gamma(f: Polynomial, roots: Sequence[complex]) -> float:
    """``gamma(f)``: the largest ``gamma(f, xi_i)`` over the zeros."""
    return max(smale_gamma_at(f, r) for r in as_cvec(roots))
