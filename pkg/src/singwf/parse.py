"""Parser and renderer for polynomial strings.

Grammar (whitespace and ``*`` between factors are ignored)::

    poly    := [sign] term (sign term)*
    sign    := '+' | '-'
    term    := [coeff] factor+
    coeff   := integer | integer '/' integer | param
    factor  := var ['^' integer]
    var     := a declared variable name (longest match wins)
    param   := one of a, b, c, d, e

Parameters stand for generic nonzero constants; a leading minus sign on a
parametric term is absorbed into the parameter (a generic constant and its
negative are indistinguishable here).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NegativeExponent, PolySyntaxError, UnknownVariable
from .poly import PARAM_NAMES, Param, Polynomial, VarList, _monomial_str


class _Scanner:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def skip_space(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def peek(self) -> str:
        self.skip_space()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def at_end(self) -> bool:
        return self.peek() == ""

    def take(self, char: str) -> bool:
        if self.peek() == char:
            self.pos += 1
            return True
        return False

    def expect_integer(self, what: str) -> int:
        self.skip_space()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise PolySyntaxError(start, what, self.peek())
        return int(self.text[start : self.pos])

    def match_var(self, vars: VarList) -> str | None:
        """Longest variable-name match at the current position, or None."""
        self.skip_space()
        best = None
        for name in vars:
            if self.text.startswith(name, self.pos) and (best is None or len(name) > len(best)):
                best = name
        if best is not None:
            self.pos += len(best)
        return best


def parse_polynomial(text: str, vars: VarList | None = None) -> Polynomial:
    """Parse ``text`` into a canonical :class:`Polynomial`.

    Raises :class:`PolySyntaxError` (with position and expectation),
    :class:`UnknownVariable`, :class:`NegativeExponent`,
    :class:`ParameterCollision` or :class:`ZeroPolynomial`.
    """
    if vars is None:
        vars = VarList.default4()
    scanner = _Scanner(text)
    terms: list[tuple[tuple[int, ...], Fraction | Param]] = []
    sign = -1 if scanner.take("-") else (scanner.take("+"), 1)[1]
    while True:
        terms.append(_parse_term(scanner, vars, sign))
        if scanner.at_end():
            break
        if scanner.take("+"):
            sign = 1
        elif scanner.take("-"):
            sign = -1
        else:
            raise PolySyntaxError(scanner.pos, "'+', '-' or end of input", scanner.peek())
    return Polynomial.from_terms(vars, terms)


def _parse_term(scanner: _Scanner, vars: VarList, sign: int):
    coeff: Fraction | Param | None = None
    if scanner.peek().isdigit():
        num = scanner.expect_integer("an integer coefficient")
        if scanner.take("/"):
            den = scanner.expect_integer("a denominator")
            if den == 0:
                raise PolySyntaxError(scanner.pos, "a nonzero denominator")
            coeff = Fraction(num, den)
        else:
            coeff = Fraction(num)
    exponents = [0] * len(vars)
    saw_factor = False
    while True:
        scanner.take("*")
        mark = scanner.pos
        name = scanner.match_var(vars)
        if name is None:
            ch = scanner.peek()
            if coeff is None and not saw_factor and ch in PARAM_NAMES:
                scanner.pos += 1
                coeff = Param(ch)
                continue
            if ch.isalpha():
                raise UnknownVariable(
                    f"position {mark}: {ch!r} is not one of {vars.names} or a parameter"
                )
            break
        exponent = 1
        if scanner.take("^"):
            if scanner.peek() == "-":
                raise NegativeExponent(f"negative exponent for {name} at position {scanner.pos}")
            exponent = scanner.expect_integer("an exponent")
        exponents[vars.index(name)] += exponent
        saw_factor = True
    if not saw_factor:
        raise PolySyntaxError(scanner.pos, "a variable factor", scanner.peek())
    if coeff is None:
        coeff = Fraction(1)
    if sign < 0 and isinstance(coeff, Fraction):
        coeff = -coeff
    return tuple(exponents), coeff


def render(poly: Polynomial) -> str:
    """Canonical rendering: graded-lex term order, ``^`` for exponents,
    spaces between factors, coefficient 1 and exponent 1 omitted.
    ``parse_polynomial(render(p), p.vars) == p`` for every polynomial."""
    pieces: list[str] = []
    for index, (monomial, coeff) in enumerate(poly.terms):
        negative = isinstance(coeff, Fraction) and coeff < 0
        magnitude = -coeff if negative else coeff
        parts = []
        if isinstance(magnitude, Param):
            parts.append(magnitude.name)
        elif magnitude != 1:
            parts.append(
                str(magnitude.numerator)
                if magnitude.denominator == 1
                else f"{magnitude.numerator}/{magnitude.denominator}"
            )
        parts.append(_monomial_str(poly.vars, monomial))
        piece = " ".join(parts)
        if index == 0:
            pieces.append(f"- {piece}" if negative else piece)
        else:
            pieces.append(f"- {piece}" if negative else f"+ {piece}")
    return " ".join(pieces)
