"""Error taxonomy for singwf.

Every domain error raised by this package derives from :class:`SingwfError`,
so callers (in particular the CLI) can distinguish domain failures from bugs.
"""

from __future__ import annotations


class SingwfError(Exception):
    """Base class for all domain errors raised by singwf."""


# ---------------------------------------------------------------- polynomials


class ZeroPolynomial(SingwfError):
    """Normalization cancelled every term; the zero polynomial is not allowed."""


class ParameterCollision(SingwfError):
    """Two terms with the same monomial collide and at least one coefficient
    is a generic parameter, so the sum is not well defined."""


class NegativeExponent(SingwfError):
    """An exponent outside the allowed range (negative) was supplied."""


class UnknownVariable(SingwfError):
    """An identifier in the input is neither a declared variable nor a
    generic-parameter name."""


class PolySyntaxError(SingwfError):
    """Syntax error while parsing a polynomial string.

    Attributes:
        position: 0-based offset into the input string.
        expected: human-readable description of what was expected.
    """

    def __init__(self, position: int, expected: str, found: str = "") -> None:
        self.position = position
        self.expected = expected
        self.found = found
        shown = found if found else "end of input"
        super().__init__(
            f"syntax error at position {position}: expected {expected}, found {shown!r}"
            if found
            else f"syntax error at position {position}: expected {expected}, found end of input"
        )


# --------------------------------------------------------------------- weights


class NotQuasihomogeneous(SingwfError):
    """The polynomial is not quasihomogeneous for the given weights; carries
    two witness monomials with distinct weighted degrees."""


class NoPositiveSolution(SingwfError):
    """The weight system admits no strictly positive rational solution."""


class NonUniqueWeights(SingwfError):
    """The weight system is underdetermined; `basis` describes the solution
    space (a particular solution and a basis of the homogeneous solutions)."""

    def __init__(self, message: str, basis: object = None) -> None:
        self.basis = basis
        super().__init__(message)


# ---------------------------------------------------------------- well-forming


class NonNormalInput(SingwfError):
    """A substitution x_i -> x_i^(1/q_i) is impossible because q_i does not
    divide every exponent of x_i; carries a witness monomial."""

    def __init__(self, message: str, witness: object = None) -> None:
        self.witness = witness
        super().__init__(message)


class InexactConeDivision(SingwfError):
    """A linear-cone reduction required a division of weights that is not exact."""


class RemarkViolation(SingwfError):
    """The different on the hypersurface is requested for a failing pair with
    min(q_i, q_j) > 1, outside the validity remark for the closed formula."""


# --------------------------------------------------------------------- dataset


class FormatError(SingwfError):
    """Malformed record file; carries the 1-based line number."""

    def __init__(self, line: int, message: str) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}")


class UnknownStratumName(SingwfError):
    """A different entry names a stratum that does not exist for the record's
    variable list."""


class DuplicateId(SingwfError):
    """Two records in one load share an id."""


class InconsistentFamily(SingwfError):
    """A generic-form instantiation produced a polynomial that is not
    quasihomogeneous for any positive weight system."""
