"""Different divisors on the exceptional divisor of a weighted blow-up.

For a well-formed-ified weight system with substitution orders q_i and
pairwise gcds q_ij, the different of the exceptional hypersurface E inside
the ambient weighted blow-up, for a standard boundary with coefficients c_i
on the coordinate hyperplanes, is supported on the prime strata
C_i' = E \\cap {x_i = 0} and on the pair curves C_ij for failing pairs:

    Diff_E(b):     C_i'  |->  1 - (1 - c_i) / q_i
                   C_ij  |->  1 - (1 - c_i - c_j) / (q_ij q_i q_j)

    Diff_{E/P}(b): C_i'  |->  c_i
                   C_ij  |->  1 - (1 - c_i - c_j) / q_ij

The closed formula for Diff_E is valid under the remark condition
min(q_i, q_j) = 1 for every failing pair (and, when the equation is
available, the requirement that every monomial involves x_i or x_j).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import RemarkViolation, UnknownStratumName
from .poly import Polynomial, split_check
from .wellform import WellFormProfile

#: Caveat attached to every exceptional-candidate hint (the criterion is only
#: sufficient modulo a hypothesis this software does not check).
EXCEPTIONAL_HINT_CAVEAT = (
    "hint only: the sufficient criterion additionally assumes that (X, H) is "
    "not log canonical for every hyperplane section H through the point, "
    "which this software does not verify"
)

_GREEK_PRIME = ("Γ", "Δ", "Υ", "Ω")
_GREEK_PAIR = {
    (0, 1): "Γ₂",
    (0, 2): "Γ₃",
    (0, 3): "Γ₄",
    (1, 2): "Δ₃",
    (1, 3): "Δ₄",
    (2, 3): "Υ₄",
}
_ASCII_PRIME = ("G", "D", "U", "O")
_ASCII_PAIR = {(0, 1): "G2", (0, 2): "G3", (0, 3): "G4", (1, 2): "D3", (1, 3): "D4", (2, 3): "U4"}


@dataclass(frozen=True, order=True)
class StratumId:
    """A stratum of E: prime stratum C_i' (j is None) or pair curve C_ij.

    Indices are 0-based; for pairs i < j.
    """

    i: int
    j: int | None = None

    def __post_init__(self) -> None:
        if self.j is not None and not self.i < self.j:
            raise ValueError("pair stratum needs i < j")

    @property
    def is_prime(self) -> bool:
        return self.j is None

    def label(self, n: int, ascii: bool = False) -> str:
        """Display name; Greek (or its ASCII transliteration) when n = 4."""
        if n == 4:
            if self.is_prime:
                return (_ASCII_PRIME if ascii else _GREEK_PRIME)[self.i]
            return (_ASCII_PAIR if ascii else _GREEK_PAIR)[(self.i, self.j)]
        if self.is_prime:
            return f"C{self.i + 1}p" if ascii else f"C{self.i + 1}'"
        return f"C{self.i + 1}{self.j + 1}"

    @classmethod
    def parse(cls, name: str, n: int) -> "StratumId":
        """Inverse of :meth:`label`, accepting every alias (Greek, ASCII
        transliteration, and C-style)."""
        name = name.strip()
        for i in range(n):
            if name in (f"C{i + 1}p", f"C{i + 1}'"):
                return cls(i)
            for j in range(i + 1, n):
                if name == f"C{i + 1}{j + 1}":
                    return cls(i, j)
        if n == 4:
            for table, greek in ((_ASCII_PRIME, _GREEK_PRIME),):
                for i in range(4):
                    if name in (table[i], greek[i]):
                        return cls(i)
            for pair in _ASCII_PAIR:
                if name in (_ASCII_PAIR[pair], _GREEK_PAIR[pair]):
                    return cls(*pair)
        raise UnknownStratumName(f"unknown stratum name {name!r} for {n} variables")

    def _sort_key(self) -> tuple:
        return (0, self.i, -1) if self.j is None else (1, self.i, self.j)


@dataclass(frozen=True)
class BoundaryDivisor:
    """A rational divisor supported on strata of E; zero coefficients are
    never stored, so equality is equality of the supported parts."""

    entries: tuple[tuple[StratumId, Fraction], ...]

    @classmethod
    def of(cls, coeffs: Mapping[StratumId, Fraction] | Iterable[tuple[StratumId, Fraction]]) -> "BoundaryDivisor":
        items = dict(coeffs)
        kept = [(s, Fraction(c)) for s, c in items.items() if c != 0]
        kept.sort(key=lambda item: item[0]._sort_key())
        return cls(tuple(kept))

    def coeff(self, stratum: StratumId) -> Fraction:
        for s, c in self.entries:
            if s == stratum:
                return c
        return Fraction(0)

    def as_dict(self) -> dict[StratumId, Fraction]:
        return dict(self.entries)


@dataclass(frozen=True)
class StdBoundary:
    """Standard boundary on the ambient space: coefficient c_i in [0, 1] on
    each coordinate hyperplane {x_i = 0}."""

    c: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if any(not (0 <= v <= 1) for v in self.c):
            raise ValueError(f"boundary coefficients must lie in [0, 1], got {self.c}")

    @classmethod
    def zero(cls, n: int) -> "StdBoundary":
        return cls(tuple(Fraction(0) for _ in range(n)))


def _boundary(profile: WellFormProfile, b: StdBoundary | None) -> StdBoundary:
    if b is None:
        return StdBoundary.zero(profile.n)
    if len(b.c) != profile.n:
        raise ValueError(f"boundary has {len(b.c)} coefficients, expected {profile.n}")
    for i, j in profile.failing_pairs:
        if b.c[i] + b.c[j] > 1:
            raise ValueError(
                f"boundary coefficients c_{i + 1} + c_{j + 1} = {b.c[i] + b.c[j]} exceed 1 "
                f"on failing pair ({i + 1}, {j + 1})"
            )
    return b


def check_remark_condition(profile: WellFormProfile, g_tilde: Polynomial | None = None) -> None:
    """Validity check for the closed Diff_E formula; raises
    :class:`RemarkViolation` when it fails."""
    for i, j in profile.failing_pairs:
        if min(profile.q[i], profile.q[j]) != 1:
            raise RemarkViolation(
                f"failing pair ({i + 1}, {j + 1}) has substitution orders "
                f"q_i = {profile.q[i]}, q_j = {profile.q[j]}, both > 1"
            )
        if g_tilde is not None and not split_check(g_tilde, i, j):
            raise RemarkViolation(
                f"failing pair ({i + 1}, {j + 1}): some monomial of the transformed "
                f"equation avoids both variables"
            )


def diff_on_E(
    profile: WellFormProfile,
    b: StdBoundary | None = None,
    g_tilde: Polynomial | None = None,
) -> BoundaryDivisor:
    """Diff_E(b): the different of E in the weighted blow-up."""
    check_remark_condition(profile, g_tilde)
    b = _boundary(profile, b)
    coeffs: dict[StratumId, Fraction] = {}
    for i in range(profile.n):
        coeffs[StratumId(i)] = 1 - (1 - b.c[i]) / profile.q[i]
    for i, j in profile.failing_pairs:
        q_ij = profile.q_pair(i, j)
        coeffs[StratumId(i, j)] = 1 - (1 - b.c[i] - b.c[j]) / (q_ij * profile.q[i] * profile.q[j])
    return BoundaryDivisor.of(coeffs)


def diff_over_wps(profile: WellFormProfile, b: StdBoundary | None = None) -> BoundaryDivisor:
    """Diff_{E/P}(b): the different of E over the well-formed weighted
    projective space; vanishes at b = 0 exactly when the system is
    well-formed."""
    b = _boundary(profile, b)
    coeffs: dict[StratumId, Fraction] = {}
    for i in range(profile.n):
        coeffs[StratumId(i)] = b.c[i]
    for i, j in profile.failing_pairs:
        coeffs[StratumId(i, j)] = 1 - (1 - b.c[i] - b.c[j]) / profile.q_pair(i, j)
    return BoundaryDivisor.of(coeffs)


def build_Dhat(profile: WellFormProfile) -> StdBoundary:
    """The standard boundary D^ = sum (1 - 1/q_i) {x_i = 0} on the ambient
    space (the branch divisor of the well-forming substitution)."""
    return StdBoundary(tuple(Fraction(1) - Fraction(1, q) for q in profile.q))


def build_D(profile: WellFormProfile) -> BoundaryDivisor:
    """The divisor D on E induced by D^: coefficient 1 - 1/q_i on C_i' and
    (1 - 1/q_i) + (1 - 1/q_j) on each failing pair curve C_ij."""
    coeffs: dict[StratumId, Fraction] = {}
    for i in range(profile.n):
        coeffs[StratumId(i)] = Fraction(1) - Fraction(1, profile.q[i])
    for i, j in profile.failing_pairs:
        coeffs[StratumId(i, j)] = (1 - Fraction(1, profile.q[i])) + (1 - Fraction(1, profile.q[j]))
    return BoundaryDivisor.of(coeffs)


def compose_different(profile: WellFormProfile) -> BoundaryDivisor:
    """Compose Diff_{E/P}(0) with the branch contribution of the substitution
    cover along each stratum.  On C_i' the contribution is 1 - 1/q_i; on a
    failing C_ij (where min(q_i, q_j) = 1 under the remark condition) it is
    e + (1 - e)(1 - 1/(q_i q_j)) with e the coefficient of Diff_{E/P}(0).
    Equals Diff_E(0) -- this is the adjunction/composition identity."""
    base = diff_over_wps(profile).as_dict()
    coeffs: dict[StratumId, Fraction] = {}
    for i in range(profile.n):
        coeffs[StratumId(i)] = Fraction(1) - Fraction(1, profile.q[i])
    for i, j in profile.failing_pairs:
        e = base.get(StratumId(i, j), Fraction(0))
        branch = 1 - Fraction(1, profile.q[i] * profile.q[j])
        coeffs[StratumId(i, j)] = e + (1 - e) * branch
    return BoundaryDivisor.of(coeffs)


def check_adjunction(profile: WellFormProfile) -> bool:
    """The adjunction identity: Diff_E(0) computed directly equals both
    Diff_{E/P}(D^ restricted) and the composition of Diff_{E/P}(0) with
    the substitution branch divisor."""
    direct = diff_on_E(profile)
    via_dhat = diff_over_wps(profile, build_Dhat(profile))
    composed = compose_different(profile)
    return direct == via_dhat == composed


def exceptional_hint(profile: WellFormProfile) -> tuple[int, Fraction] | None:
    """Sufficient-condition hint for exceptionality of the singularity.

    Uses the coefficients of D (never Diff_E(0)): returns the first index k
    with 1 - 1/q_k >= 6/7 (for 4 variables, a 3-fold point) or >= 2/3 (for 3
    variables, a surface point), together with the threshold; None when no
    variable qualifies or the dimension is out of scope.  Any report of this
    hint must carry :data:`EXCEPTIONAL_HINT_CAVEAT`.
    """
    if profile.n == 4:
        threshold = Fraction(6, 7)
    elif profile.n == 3:
        threshold = Fraction(2, 3)
    else:
        return None
    for k in range(profile.n):
        if 1 - Fraction(1, profile.q[k]) >= threshold:
            return k, threshold
    return None
