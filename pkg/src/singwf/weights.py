"""Weight systems: inference, quasihomogeneity checking, discrepancy."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import NoPositiveSolution, NonUniqueWeights, NotQuasihomogeneous
from .poly import Polynomial, _monomial_str


@dataclass(frozen=True)
class WeightAssignment:
    """Positive integer weights p and the common weighted degree d."""

    p: tuple[int, ...]
    d: int

    def __post_init__(self) -> None:
        if not self.p or any(w <= 0 for w in self.p):
            raise ValueError(f"weights must be positive integers, got {self.p}")
        if self.d <= 0:
            raise ValueError(f"degree must be positive, got {self.d}")

    @property
    def n(self) -> int:
        return len(self.p)

    def primitive(self) -> "WeightAssignment":
        """Divide out the common factor of the weights (d scales along)."""
        g = gcd(*self.p)
        if g == 1:
            return self
        if self.d % g != 0:
            raise ValueError(f"degree {self.d} not divisible by weight gcd {g}")
        return WeightAssignment(tuple(w // g for w in self.p), self.d // g)


def quasi_degree(poly: Polynomial, p: tuple[int, ...]) -> int:
    """The common weighted degree of poly under weights p.

    Raises :class:`NotQuasihomogeneous` with two witness monomials if the
    weighted degrees differ.
    """
    if len(p) != len(poly.vars):
        raise ValueError("weight vector has wrong length")
    first_m, *_ = poly.support
    first_deg = sum(w * e for w, e in zip(p, first_m))
    for m in poly.support[1:]:
        deg = sum(w * e for w, e in zip(p, m))
        if deg != first_deg:
            raise NotQuasihomogeneous(
                f"monomial {_monomial_str(poly.vars, first_m)} has degree {first_deg} "
                f"but {_monomial_str(poly.vars, m)} has degree {deg} under weights {p}"
            )
    return first_deg


def infer_weights(poly: Polynomial) -> WeightAssignment:
    """The unique primitive positive weight system making poly quasihomogeneous.

    Solves the exact linear system {sum_i m_i p_i = 1 for every monomial m}
    by Gaussian elimination over the rationals.  Raises
    :class:`NonUniqueWeights` when the system is underdetermined (carrying a
    particular solution and a basis of the homogeneous solution space) and
    :class:`NoPositiveSolution` when it is inconsistent or the unique ray
    contains no strictly positive vector.
    """
    n = len(poly.vars)
    rows = [[Fraction(e) for e in m] + [Fraction(1)] for m in poly.support]

    pivot_cols: list[int] = []
    row_index = 0
    for col in range(n):
        pivot = next((r for r in range(row_index, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[row_index], rows[pivot] = rows[pivot], rows[row_index]
        lead = rows[row_index][col]
        rows[row_index] = [v / lead for v in rows[row_index]]
        for r in range(len(rows)):
            if r != row_index and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [v - factor * w for v, w in zip(rows[r], rows[row_index])]
        pivot_cols.append(col)
        row_index += 1

    for r in range(row_index, len(rows)):
        if rows[r][n] != 0:
            raise NoPositiveSolution(
                "the quasihomogeneity constraints are inconsistent: no weight system exists"
            )

    if len(pivot_cols) < n:
        free_cols = [c for c in range(n) if c not in pivot_cols]
        particular = [Fraction(0)] * n
        for r, col in enumerate(pivot_cols):
            particular[col] = rows[r][n]
        basis = []
        for free in free_cols:
            vector = [Fraction(0)] * n
            vector[free] = Fraction(1)
            for r, col in enumerate(pivot_cols):
                vector[col] = -rows[r][free]
            basis.append(tuple(vector))
        raise NonUniqueWeights(
            f"weights are not determined by the support: {len(free_cols)} free direction(s)",
            basis=(tuple(particular), tuple(basis)),
        )

    solution = [Fraction(0)] * n
    for r, col in enumerate(pivot_cols):
        solution[col] = rows[r][n]
    if any(v <= 0 for v in solution):
        raise NoPositiveSolution(
            f"the unique rational solution {tuple(solution)} is not strictly positive"
        )

    scale = lcm(*(v.denominator for v in solution))
    p = [int(v * scale) for v in solution]
    g = gcd(*p)
    p = tuple(w // g for w in p)
    return WeightAssignment(p, quasi_degree(poly, p))


def discrepancy(weights: WeightAssignment) -> int:
    """sum(p) - d - 1, the discrepancy of the exceptional divisor of the
    weighted blow-up over the ambient space."""
    return sum(weights.p) - weights.d - 1


def discrepancy_tag(a: int) -> str:
    """Coarse classification of the discrepancy value."""
    if a >= 0:
        return "canonical-compatible"
    if a == -1:
        return "strictly-lc-candidate"
    return "neither"
