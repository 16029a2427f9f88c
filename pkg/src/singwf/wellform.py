"""Well-forming of weight systems and the gcd machinery around it.

Given a primitive weight system p for a quasihomogeneous hypersurface, each
q_i = gcd(p_1, .., p_i-1, p_i+1, .., p_n) > 1 allows the substitution
x_i -> x_i^(1/q_i), which replaces the weights by p~_i = p_i q_i / Q (with
Q = prod q_i) and the degree by d~ = d / Q without changing the hypersurface.
Iterating to a fixpoint yields the well-forming data; the pairwise gcds
q_ij of the resulting weights detect the failure of well-formedness:
the system is well-formed iff q_ij | d~ for all pairs i < j.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod

from .errors import InexactConeDivision, NonNormalInput
from .poly import Polynomial, _monomial_str, divide_exponents
from .weights import WeightAssignment


def gcd_profile(weights: WeightAssignment) -> tuple[tuple[int, ...], int]:
    """One-pass substitution orders: q_i = gcd of the weights omitting p_i,
    and their product Q."""
    p = weights.p
    q = tuple(gcd(*(p[j] for j in range(len(p)) if j != i)) for i in range(len(p)))
    return q, prod(q)


@dataclass(frozen=True)
class WellFormProfile:
    """All gcd data attached to a weight system after well-forming.

    Indices are 0-based throughout.  ``q`` accumulates the substitution
    orders over all passes, so p_tilde[i] = p[i] * q[i] / Q and
    d_tilde = d / Q with Q = prod(q).
    """

    weights: WeightAssignment
    q: tuple[int, ...]
    Q: int
    p_tilde: tuple[int, ...]
    d_tilde: int
    iterations: int

    @property
    def n(self) -> int:
        return len(self.p_tilde)

    def q_pair(self, i: int, j: int) -> int:
        """gcd of the transformed weights omitting entries i and j."""
        if i == j:
            raise ValueError("q_pair needs two distinct indices")
        rest = [self.p_tilde[k] for k in range(self.n) if k not in (i, j)]
        return rest[0] if len(rest) == 1 else gcd(*rest)

    @property
    def failing_pairs(self) -> tuple[tuple[int, int], ...]:
        """Pairs i < j with q_ij not dividing d_tilde, in lexicographic order."""
        return tuple(
            (i, j)
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if self.d_tilde % self.q_pair(i, j) != 0
        )

    def failing_set(self, i: int) -> frozenset[int]:
        """I_i = the set of j != i with {i, j} a failing pair."""
        return frozenset(j for j in range(self.n) if j != i and self.d_tilde % self.q_pair(min(i, j), max(i, j)) != 0)


def is_well_formed(profile: WellFormProfile) -> bool:
    """Well-formed iff no pair fails, i.e. the boundary part of the different
    of the exceptional divisor over the weighted projective space vanishes."""
    return not profile.failing_pairs


def _fixpoint(weights: WeightAssignment, poly: Polynomial | None):
    """Iterate one-pass substitutions until all q_i = 1.

    Returns (poly_or_None, accumulated_q, p_tilde, d_tilde, iterations).
    """
    p, d = weights.p, weights.d
    n = len(p)
    acc = [1] * n
    iterations = 0
    while True:
        current = WeightAssignment(p, d)
        q, Q = gcd_profile(current)
        if all(v == 1 for v in q):
            break
        if poly is not None:
            for i in range(n):
                if q[i] > 1:
                    for m in poly.support:
                        if m[i] % q[i] != 0:
                            raise NonNormalInput(
                                f"substitution order {q[i]} for variable "
                                f"{poly.vars.names[i]} does not divide its exponent in "
                                f"{_monomial_str(poly.vars, m)}; the hypersurface is "
                                f"non-normal",
                                witness=m,
                            )
            poly = divide_exponents(poly, q)
        if d % Q != 0 or any((p[i] * q[i]) % Q != 0 for i in range(n)):
            raise NonNormalInput(
                f"substitution orders {q} do not transform weights {p} (degree {d}) "
                f"integrally; the weight system does not come from a normal hypersurface"
            )
        p = tuple(p[i] * q[i] // Q for i in range(n))
        d //= Q
        acc = [a * v for a, v in zip(acc, q)]
        iterations += 1
    return poly, tuple(acc), p, d, iterations


def well_form(poly: Polynomial, weights: WeightAssignment):
    """Well-form a quasihomogeneous polynomial and its weight system.

    Returns (transformed polynomial, :class:`WellFormProfile`).  Raises
    :class:`NonNormalInput` (with a witness monomial) when a substitution
    order does not divide all exponents of its variable.
    """
    new_poly, acc, p_tilde, d_tilde, iterations = _fixpoint(weights, poly)
    assert new_poly is not None
    profile = WellFormProfile(weights, acc, prod(acc), p_tilde, d_tilde, iterations)
    return new_poly, profile


def profile_from_weights(weights: WeightAssignment) -> WellFormProfile:
    """The :class:`WellFormProfile` determined by the weights alone (no
    polynomial); used for property tests over random weight systems."""
    _, acc, p_tilde, d_tilde, iterations = _fixpoint(weights, None)
    return WellFormProfile(weights, acc, prod(acc), p_tilde, d_tilde, iterations)


@dataclass(frozen=True)
class ConeReduction:
    """Result of recognizing a linear cone: the transformed equation contains
    variable k linearly with d~ = p~_k, so the hypersurface is the cone over a
    hypersurface in the weighted projective space with the reduced weights."""

    k: int  # 0-based index of the eliminated variable
    weights: tuple[int, ...]  # reduced ambient weights, one per remaining variable
    ambiguous: bool  # True when several variables qualified; smallest k used


def linear_cone_reduce(g_tilde: Polynomial, profile: WellFormProfile) -> ConeReduction | None:
    """Detect a linear cone and compute the reduced ambient weights.

    Variable k qualifies when d~ = p~_k and the monomial x_k itself occurs in
    the transformed polynomial.  The reduced weight for each remaining
    variable m is p~_m / s_m where s_m is the product of q_ij over the
    failing pairs {i, j} avoiding m; a non-exact division raises
    :class:`InexactConeDivision`.
    """
    n = profile.n
    support = set(g_tilde.support)
    candidates = [
        k
        for k in range(n)
        if profile.d_tilde == profile.p_tilde[k]
        and tuple(1 if i == k else 0 for i in range(n)) in support
    ]
    if not candidates:
        return None
    k = min(candidates)
    failing = profile.failing_pairs
    reduced = []
    for m in range(n):
        if m == k:
            continue
        s_m = prod(profile.q_pair(i, j) for i, j in failing if i != m and j != m)
        if profile.p_tilde[m] % s_m != 0:
            raise InexactConeDivision(
                f"reduced weight for variable {m} is {profile.p_tilde[m]}/{s_m}, not an integer"
            )
        reduced.append(profile.p_tilde[m] // s_m)
    return ConeReduction(k, tuple(reduced), len(candidates) > 1)
