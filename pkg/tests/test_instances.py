import numpy as np

from wdk.instances import grid_roots, perturb_to_level
from wdk.local_theory import e_local1
from wdk.polynomial import evaluate, from_roots
from wdk.core_math import min_pairwise_distances


def test_grid_roots_are_exact_zeros(rng):
    roots = grid_roots(rng, 6)
    assert min(min_pairwise_distances(roots)) >= 0.5
    f = from_roots(roots)
    assert all(evaluate(f, r) == 0 for r in roots)


def test_real_roots(rng):
    assert all(r.imag == 0 for r in grid_roots(rng, 4, real=True))


def test_seeded():
    a = grid_roots(np.random.default_rng(3), 5)
    b = grid_roots(np.random.default_rng(3), 5)
    assert a == b


def test_perturb_hits_level(rng):
    roots = grid_roots(rng, 5)
    x = perturb_to_level(rng, roots, lambda v: e_local1(v, roots, 2.0), 0.1)
    e = e_local1(x, roots, 2.0)
    assert 0.1 * (1 - 1e-9) <= e <= 0.1
