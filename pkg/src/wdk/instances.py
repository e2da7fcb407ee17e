"""Seeded random problem instances with known zeros.

Zeros are drawn from a dyadic grid, so ``from_roots`` expands them into
exactly representable coefficients and the floating-point polynomial has
exactly the constructed zeros.  Starting vectors are obtained by scaling a
random perturbation until a chosen measure (one of the E functions) sits at
a target level.
"""
from __future__ import annotations

from typing import Callable, Sequence

import numpy as np

from .core_math import as_cvec, min_pairwise_distances


def grid_roots(rng: np.random.Generator, n: int, min_sep: float = 0.5, box: float = 2.0,
               step: float = 0.25, real: bool = False, max_tries: int = 10000) -> tuple:
    """``n`` grid points in ``[-box, box]^2`` that are pairwise ``>= min_sep`` apart."""
    ticks = np.arange(-box, box + step / 2, step)
    chosen: list = []
    for _ in range(max_tries):
        z = complex(rng.choice(ticks), 0.0 if real else rng.choice(ticks))
        if all(abs(z - w) >= min_sep for w in chosen):
            chosen.append(z)
            if len(chosen) == n:
                return tuple(chosen)
    raise RuntimeError(f"could not place {n} roots with separation {min_sep} in the box")


def perturb_to_level(rng: np.random.Generator, roots: Sequence[complex],
                     measure: Callable[[tuple], float], target: float, iters: int = 40) -> tuple:
    """A vector near ``roots`` with ``measure(x) <= target``, as close to ``target`` as bisection gets.

    The perturbation of component ``i`` has a random phase and a modulus up to
    ``d_i(roots)``; only its overall scale is searched.
    """
    roots = as_cvec(roots)
    d = min_pairwise_distances(roots)
    n = len(roots)
    mags = rng.uniform(0.2, 1.0, n)
    phases = rng.uniform(0, 2 * np.pi, n)
    delta = [float(m) * di * complex(np.cos(t), np.sin(t)) for m, di, t in zip(mags, d, phases)]

    def at(s):
        return tuple(r + s * dl for r, dl in zip(roots, delta))

    def level(s):
        try:
            return measure(at(s))
        except (ValueError, ArithmeticError):
            return float("inf")

    lo, hi = 0.0, 1.0
    while level(hi) <= target and hi < 1e6:
        lo, hi = hi, 2 * hi
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if level(mid) <= target:
            lo = mid
        else:
            hi = mid
    return at(lo)
