"""Weierstrass correction, one-step iteration and the two-point form."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .core_math import as_cvec, as_exponent, min_pairwise_distances, p_norm, vec_quotient
from .errors import DegenerateGeometryError, DistinctnessError, DomainError
from .polynomial import Polynomial, evaluate


@dataclass(frozen=True)
class WeierstrassStep:
    input: tuple
    correction: tuple
    output: tuple
    e_value: Optional[float] = None


def _check_size(f: Polynomial, x: Sequence[complex]) -> None:
    f.require_degree(2)
    if len(x) != f.degree:
        raise DomainError(f"expected {f.degree} approximations, got {len(x)}")


def correction(f: Polynomial, x: Sequence[complex]) -> tuple:
    """``W_i(x) = f(x_i) / (a_0 prod_{j != i} (x_i - x_j))``."""
    x = as_cvec(x)
    _check_size(f, x)
    a0 = f.leading
    out = []
    for i, xi in enumerate(x):
        denom = a0
        for j, xj in enumerate(x):  # ascending j, for reproducibility
            if j != i:
                diff = xi - xj
                if diff == 0:
                    raise DistinctnessError(f"components {i} and {j} coincide")
                denom *= diff
        out.append(evaluate(f, xi) / denom)
    return tuple(out)


def e_from_correction(w: Sequence[complex], x: Sequence[complex], p) -> float:
    """``||W(x) / d(x)||_p`` from an already computed correction."""
    return p_norm(vec_quotient(w, min_pairwise_distances(x)), as_exponent(p))


def e_semilocal(f: Polynomial, x: Sequence[complex], p) -> float:
    """Semilocal function of initial conditions ``E(x) = ||W(x) / d(x)||_p``."""
    x = as_cvec(x)
    return e_from_correction(correction(f, x), x, p)


def step(f: Polynomial, x: Sequence[complex], p=None) -> WeierstrassStep:
    """One Weierstrass step ``Tx = x - W(x)``.

    The output is not checked for distinct components; callers that keep
    iterating must do that themselves.
    """
    x = as_cvec(x)
    w = correction(f, x)
    out = tuple(a - b for a, b in zip(x, w))
    e = None if p is None else e_from_correction(w, x, p)
    return WeierstrassStep(x, w, out, e)


def two_point_correction(x_prev: Sequence[complex], x_curr: Sequence[complex]) -> tuple:
    """``W(x_curr)`` rebuilt from two consecutive iterates without evaluating ``f``.

    Valid when ``x_curr = x_prev - W(x_prev)``; uses
    ``W_i(x^) = (x^_i - x_i) sum_j W_j(x)/(x^_i - x_j) prod_j (x^_i - x_j)/(x^_i - x^_j)``.
    """
    x = as_cvec(x_prev)
    xh = as_cvec(x_curr)
    n = len(x)
    if len(xh) != n:
        raise DomainError("iterates must have equal length")
    w_prev = [a - b for a, b in zip(x, xh)]
    out = []
    for i in range(n):
        move = xh[i] - x[i]
        if move == 0:
            out.append(0j)
            continue
        total = 0j
        prod = 1 + 0j
        for j in range(n):
            if j == i:
                continue
            mixed = xh[i] - x[j]
            same = xh[i] - xh[j]
            if mixed == 0 or same == 0:
                raise DegenerateGeometryError(f"vanishing difference at components {i}, {j}")
            total += w_prev[j] / mixed
            prod *= mixed / same
        out.append(move * total * prod)
    return tuple(out)


def two_point_step(f: Optional[Polynomial], x_prev: Sequence[complex], x_curr: Sequence[complex]) -> tuple:
    """Next iterate from the two previous ones.

    ``f`` is accepted for symmetry with :func:`step` and may be ``None``; it is
    never evaluated.
    """
    w = two_point_correction(x_prev, x_curr)
    return tuple(a - b for a, b in zip(as_cvec(x_curr), w))


def identity_residual_local1(f: Polynomial, roots: Sequence[complex], x: Sequence[complex], i: int) -> complex:
    """Residual of ``T_i(x) - xi_i = -(prod_{j != i}(1 + u_j) - 1)(x_i - xi_i)``.

    Here ``u_j = (x_j - xi_j) / (x_i - x_j)``.  Zero in exact arithmetic.
    """
    roots = as_cvec(roots)
    x = as_cvec(x)
    t_i = step(f, x).output[i]
    prod = 1 + 0j
    for j in range(len(x)):
        if j != i:
            prod *= 1 + (x[j] - roots[j]) / (x[i] - x[j])
    return (t_i - roots[i]) + (prod - 1) * (x[i] - roots[i])
