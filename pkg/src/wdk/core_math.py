"""Vector toolkit over the complex numbers.

Vectors are plain tuples: a ``CVec`` is a tuple of ``complex`` and an ``RVec``
a tuple of nonnegative ``float``.  Every function accepts any sequence and
returns a fresh tuple, so values can be shared freely between threads.

The exponent ``p`` of the p-norm is carried around as a :class:`PExponent`,
which caches ``1/p``, ``1/q`` and the derived constants used throughout the
convergence theory.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

from .errors import DistinctnessError, DomainError

CVec = tuple  # tuple[complex, ...]
RVec = tuple  # tuple[float, ...]

Number = Union[int, float, complex]


@dataclass(frozen=True)
class PExponent:
    """A norm exponent ``1 <= p <= inf`` together with its conjugate ``q``."""

    p: float
    q: float

    def __post_init__(self):
        if math.isnan(self.p) or self.p < 1:
            raise DomainError(f"p must satisfy p >= 1 or p = inf, got {self.p!r}")

    @property
    def inv_p(self) -> float:
        return 0.0 if math.isinf(self.p) else 1.0 / self.p

    @property
    def inv_q(self) -> float:
        return 0.0 if math.isinf(self.q) else 1.0 / self.q

    @property
    def two_inv_q(self) -> float:
        """``2**(1/q)``, the constant that recurs in every radius."""
        return 2.0 ** self.inv_q

    @classmethod
    def parse(cls, text: str) -> PExponent:
        text = text.strip().lower()
        if text in ("inf", "infinity", "oo"):
            return conjugate_exponent(math.inf)
        try:
            value = float(text)
        except ValueError:
            raise DomainError(f"cannot parse exponent {text!r}") from None
        return conjugate_exponent(value)

    def label(self) -> str:
        if math.isinf(self.p):
            return "inf"
        return repr(float(self.p)) if self.p != int(self.p) else str(int(self.p))

    def __str__(self):
        return self.label()


def conjugate_exponent(p) -> PExponent:
    """Return the pair ``(p, q)`` with ``1/p + 1/q = 1``.

    ``p = 1`` pairs with ``q = inf`` and ``p = inf`` with ``q = 1``.
    """
    if isinstance(p, PExponent):
        return p
    p = float(p)
    if math.isnan(p) or p < 1:
        raise DomainError(f"p must satisfy p >= 1 or p = inf, got {p!r}")
    if math.isinf(p):
        return PExponent(math.inf, 1.0)
    if p == 1:
        return PExponent(1.0, math.inf)
    return PExponent(p, p / (p - 1.0))


def as_exponent(p) -> PExponent:
    return p if isinstance(p, PExponent) else conjugate_exponent(p)


def _check_finite(v: Sequence[Number]) -> None:
    for c in v:
        if not cmath_isfinite(c):
            raise DomainError(f"non-finite component {c!r}")


def cmath_isfinite(c: Number) -> bool:
    if isinstance(c, complex):
        return math.isfinite(c.real) and math.isfinite(c.imag)
    return math.isfinite(c)


def as_cvec(v: Sequence[Number]) -> CVec:
    """Coerce a sequence of numbers into a finite complex vector."""
    out = tuple(complex(c) for c in v)
    _check_finite(out)
    return out


def p_norm(v: Sequence[Number], p) -> float:
    """``(sum |v_i|**p)**(1/p)``, or ``max |v_i|`` for ``p = inf``."""
    pe = as_exponent(p)
    mods = [abs(c) for c in v]
    if not mods:
        return 0.0
    top = max(mods)
    if math.isinf(pe.p) or top == 0.0:
        return top
    if pe.p == 1:
        return math.fsum(mods)
    # scale by the largest modulus so large p cannot overflow
    return top * math.fsum((m / top) ** pe.p for m in mods) ** (1.0 / pe.p)


def abs_vec(x: Sequence[Number]) -> RVec:
    """Cone norm: the vector of component moduli."""
    return tuple(abs(c) for c in x)


def vec_quotient(x: Sequence[Number], y: Sequence[float]) -> RVec:
    """Component-wise ``|x_i| / y_i`` for a strictly positive ``y``."""
    if len(x) != len(y):
        raise DomainError("length mismatch in vector quotient")
    for yi in y:
        if not yi > 0:
            raise DomainError(f"quotient denominator must be positive, got {yi!r}")
    return tuple(abs(a) / b for a, b in zip(x, y))


def min_pairwise_distances(x: Sequence[Number]) -> RVec:
    """``d_i(x) = min_{j != i} |x_i - x_j|``; raises on coincident components."""
    n = len(x)
    if n < 2:
        raise DomainError("need at least two components")
    d = [math.inf] * n
    for i in range(n):
        xi = x[i]
        for j in range(i + 1, n):
            r = abs(xi - x[j])
            if r < d[i]:
                d[i] = r
            if r < d[j]:
                d[j] = r
    for i, di in enumerate(d):
        if di == 0.0:
            raise DistinctnessError(f"component {i} coincides with another component")
    return tuple(d)


def is_distinct(x: Sequence[Number]) -> bool:
    try:
        min_pairwise_distances(x)
    except DistinctnessError:
        return False
    return True


def componentwise_leq(a: Sequence[float], b: Sequence[float]) -> bool:
    """Coordinate-wise order: ``a_i <= b_i`` for every ``i``."""
    if len(a) != len(b):
        raise DomainError("length mismatch in coordinate-wise comparison")
    return all(ai <= bi for ai, bi in zip(a, b))


def power_mean(x: Sequence[Number], r: float) -> float:
    """Power mean ``M_r`` of the component moduli, with the limits at 0 and +-inf."""
    mods = [abs(c) for c in x]
    n = len(mods)
    if n == 0:
        raise DomainError("power mean of an empty vector")
    if math.isnan(r):
        raise DomainError("r must not be NaN")
    if r <= 0 and min(mods) == 0.0:
        raise DomainError("power mean with r <= 0 needs nonzero components")
    if r == math.inf:
        return max(mods)
    if r == -math.inf:
        return min(mods)
    if abs(r) < 1e-15:
        # M_r differs from the geometric mean by O(r), below one ulp here
        return math.exp(math.fsum(math.log(m) for m in mods) / n)
    top = max(mods)
    if top == 0.0:
        return 0.0
    if r > 0 and min(mods) == 0.0:
        return top * (math.fsum((m / top) ** r for m in mods) / n) ** (1.0 / r)
    # scale so every r*log(m/s) <= 0, and use expm1/log1p so tiny |r| keeps its accuracy
    s = top if r > 0 else min(mods)
    mean = math.fsum(math.expm1(r * math.log(m / s)) for m in mods) / n
    return s * math.exp(math.log1p(mean) / r)
