"""Independent oracles for the test suite.

These deliberately avoid the library's own code paths: weight inference is
re-done by exhaustive vectorized search over integer weight vectors, and
random well-forming profiles are produced by rejection sampling directly
from weight vectors.
"""

from __future__ import annotations

import random
from math import gcd, lcm

import numpy as np

from singwf import WeightAssignment, profile_from_weights
from singwf.errors import NonNormalInput
from singwf.poly import Polynomial


def brute_force_weights(poly: Polynomial, max_entry: int = 200):
    """Exhaustive search for primitive positive integer weights (entries up
    to ``max_entry``) making ``poly`` quasihomogeneous.

    Returns the unique primitive solution as (p, d), or None when the search
    finds none or finds solutions spanning more than one ray.  The search
    enumerates all but the last coordinate on a grid and solves for the last
    coordinate from one homogeneous difference equation, then checks every
    equation — no Gaussian elimination involved.
    """
    support = [np.array(m, dtype=np.int32) for m in poly.support]
    n = len(poly.vars)
    diffs = [support[0] - m for m in support[1:]]
    if not diffs:
        return None  # single monomial: never unique

    pivot = next((d for d in diffs if d[n - 1] != 0), None)
    axes = [np.arange(1, max_entry + 1, dtype=np.int32) for _ in range(n - 1)]
    grid = np.stack([g.ravel() for g in np.meshgrid(*axes, indexing="ij")], axis=1)

    if pivot is None:
        # last variable unconstrained -> not unique (if anything solves at all)
        return None
    numerator = -(grid @ pivot[: n - 1])
    ok = (numerator % pivot[n - 1] == 0)
    last = np.where(ok, numerator // np.int32(pivot[n - 1]), 0)
    ok &= (last >= 1) & (last <= max_entry)
    candidates = np.concatenate([grid[ok], last[ok, None]], axis=1)
    for d in diffs:
        candidates = candidates[(candidates @ d) == 0]
        if candidates.size == 0:
            return None

    primitive = {
        tuple(int(v) for v in row)
        for row in candidates
        if gcd(*(int(v) for v in row)) == 1
    }
    if len(primitive) != 1:
        return None
    p = primitive.pop()
    degree = int(sum(w * e for w, e in zip(p, support[0])))
    return p, degree


def random_remark_profiles(count: int, seed: int, max_entry: int = 500):
    """Deterministic stream of well-forming profiles from random primitive
    weight vectors (n in {3, 4}, entries <= max_entry) whose failing pairs
    all satisfy the remark condition min(q_i, q_j) = 1.  Rejection sampling:
    degrees are drawn as multiples of the lcm of the one-pass substitution
    orders, and candidates violating integrality or the remark condition are
    discarded."""
    rng = random.Random(seed)
    produced = 0
    while produced < count:
        n = rng.choice((3, 4))
        p = tuple(rng.randint(1, max_entry) for _ in range(n))
        g = gcd(*p)
        p = tuple(v // g for v in p)
        orders = [gcd(*(p[j] for j in range(n) if j != i)) for i in range(n)]
        d = lcm(*orders) * rng.randint(1, 60)
        try:
            profile = profile_from_weights(WeightAssignment(p, d))
        except NonNormalInput:
            continue
        if any(
            min(profile.q[i], profile.q[j]) != 1 for i, j in profile.failing_pairs
        ):
            continue
        produced += 1
        yield profile
