"""Exact multivariate polynomial core.

Polynomials here are finite formal sums of monomials with coefficients that
are either exact rationals (:class:`fractions.Fraction`) or generic nonzero
parameters (:class:`Param`).  Only the support and the parameter structure
matter for the geometry, so no parameter arithmetic is ever performed: two
terms whose monomials collide may only be merged when both coefficients are
rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Union

from .errors import (
    NegativeExponent,
    ParameterCollision,
    ZeroPolynomial,
)

#: Names usable as generic parameters.
PARAM_NAMES = ("a", "b", "c", "d", "e")


@dataclass(frozen=True, order=True)
class Param:
    """A generic nonzero parameter coefficient, identified by name."""

    name: str

    def __post_init__(self) -> None:
        if self.name not in PARAM_NAMES:
            raise ValueError(f"parameter name must be one of {PARAM_NAMES}, got {self.name!r}")

    def __str__(self) -> str:
        return self.name


Coefficient = Union[Fraction, Param]
Monomial = tuple[int, ...]


@dataclass(frozen=True)
class VarList:
    """An ordered list of distinct variable names."""

    names: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.names) < 2:
            raise ValueError("need at least two variables")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")
        for name in self.names:
            if not name or not name[0].isalpha():
                raise ValueError(f"invalid variable name {name!r}")
            if name in PARAM_NAMES:
                raise ValueError(f"variable name {name!r} collides with a parameter name")

    @classmethod
    def default4(cls) -> "VarList":
        """The standard four ambient variables t, z, x, y."""
        return cls(("t", "z", "x", "y"))

    @classmethod
    def general(cls, n: int) -> "VarList":
        """Generic variables x1..xn."""
        return cls(tuple(f"x{i}" for i in range(1, n + 1)))

    @classmethod
    def of(cls, names: Iterable[str]) -> "VarList":
        return cls(tuple(names))

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)


def _term_key(monomial: Monomial) -> tuple:
    """Graded-lex canonical order: ascending total degree, ties broken so
    that monomials larger in earlier variables come first."""
    return (sum(monomial), tuple(-e for e in monomial))


@dataclass(frozen=True)
class Polynomial:
    """An immutable polynomial in canonical form.

    ``terms`` is a tuple of (monomial, coefficient) pairs in canonical
    graded-lex order with no zero coefficients and no repeated monomials.
    Construct via :meth:`from_terms`, which normalizes.
    """

    vars: VarList
    terms: tuple[tuple[Monomial, Coefficient], ...]

    @classmethod
    def from_terms(
        cls,
        vars: VarList,
        terms: Iterable[tuple[Monomial, Coefficient]],
    ) -> "Polynomial":
        n = len(vars)
        merged: dict[Monomial, Coefficient] = {}
        for monomial, coeff in terms:
            monomial = tuple(monomial)
            if len(monomial) != n:
                raise ValueError(f"monomial {monomial} has wrong arity for {vars.names}")
            if any(e < 0 for e in monomial):
                raise NegativeExponent(f"negative exponent in monomial {monomial}")
            if monomial in merged:
                old = merged[monomial]
                if isinstance(old, Param) or isinstance(coeff, Param):
                    raise ParameterCollision(
                        f"monomial {_monomial_str(vars, monomial)} appears twice with "
                        f"coefficients {old} and {coeff}"
                    )
                merged[monomial] = old + coeff
            else:
                merged[monomial] = coeff
        cleaned = {m: c for m, c in merged.items() if isinstance(c, Param) or c != 0}
        if not cleaned:
            raise ZeroPolynomial("all terms cancelled; the zero polynomial is not allowed")
        ordered = tuple(sorted(cleaned.items(), key=lambda item: _term_key(item[0])))
        return cls(vars, ordered)

    # -------------------------------------------------------------- queries

    @property
    def support(self) -> tuple[Monomial, ...]:
        """The monomials, in canonical order."""
        return tuple(m for m, _ in self.terms)

    def coefficient(self, monomial: Monomial) -> Coefficient | None:
        for m, c in self.terms:
            if m == monomial:
                return c
        return None

    def min_exponent(self, i: int) -> int:
        """The largest e with x_i^e dividing every term."""
        return min(m[i] for m, _ in self.terms)

    def __str__(self) -> str:  # pragma: no cover - convenience
        from .parse import render

        return render(self)


def normalize(poly: Polynomial) -> Polynomial:
    """Re-canonicalize (idempotent: normalize(normalize(p)) == normalize(p))."""
    return Polynomial.from_terms(poly.vars, poly.terms)


def variable_divides(poly: Polynomial, i: int) -> int:
    """Order of divisibility of poly by variable i (its minimum exponent)."""
    return poly.min_exponent(i)


def split_check(poly: Polynomial, i: int, j: int) -> bool:
    """True iff every monomial involves variable i or variable j."""
    return all(m[i] > 0 or m[j] > 0 for m, _ in poly.terms)


def divide_exponents(poly: Polynomial, orders: tuple[int, ...]) -> Polynomial:
    """Apply x_i -> x_i^(1/orders[i]) to every monomial.

    Requires orders[i] to divide every exponent of variable i; the caller
    (well-forming) is responsible for checking and reporting violations.
    """
    new_terms = []
    for m, c in poly.terms:
        assert all(e % q == 0 for e, q in zip(m, orders))
        new_terms.append((tuple(e // q for e, q in zip(m, orders)), c))
    return Polynomial.from_terms(poly.vars, new_terms)


def _monomial_str(vars: VarList, monomial: Monomial) -> str:
    parts = []
    for name, e in zip(vars, monomial):
        if e == 1:
            parts.append(name)
        elif e != 0:
            parts.append(f"{name}^{e}")
    if not parts:
        return f"{vars.names[0]}^0"
    return " ".join(parts)
