"""Line-oriented record files for the classification-table dataset.

A record file contains ``[record]`` blocks of ``key=value`` lines::

    # comment
    [record]
    id=t1r2-n7
    source=Table 1, row 2, n=7
    poly=t^2+z^3+zx^5+zy^7
    tilde_poly=t+z^3+zx+zy
    tilde_weights=3 1 2 2
    cone=1 1 1
    diff=G:1/2,U:4/5,O:6/7,G2:3/4
    indices=8
    notes=free text

``vars=`` (comma-separated names, default ``t,z,x,y``) selects the variable
list.  Two textual conveniences are expanded by the loader: generic forms
``fK(m1,m2)`` stand for ``m1^K + m2^K`` (monomial arguments, exponents
multiplied through), and ``(A ||| B)`` alternative lists inside ``poly=`` /
``tilde_poly=`` yield one record per alternative, ids suffixed ``-a``,
``-b``, ...
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from fractions import Fraction
from pathlib import Path
from typing import Iterable

from .different import BoundaryDivisor, StratumId
from .errors import (
    DuplicateId,
    FormatError,
    InconsistentFamily,
    NoPositiveSolution,
    NonUniqueWeights,
    SingwfError,
)
from .parse import parse_polynomial, render
from .poly import Polynomial, VarList
from .weights import infer_weights

_REQUIRED = ("id", "source", "poly", "tilde_poly", "tilde_weights", "diff")
_OPTIONAL = ("vars", "cone", "indices", "notes")
_GENERIC_FORM = re.compile(r"f(\d+)\(([^,()]+),([^,()]+)\)")
_ALTERNATIVE = re.compile(r"\(([^()]*\|\|\|[^()]*)\)")


@dataclass(frozen=True)
class TableRecord:
    """One transcribed classification-table row (or worked example)."""

    id: str
    source: str
    vars: VarList
    poly: Polynomial
    tilde_poly: Polynomial
    tilde_weights: tuple[int, ...]
    cone: tuple[int, ...] | None
    diff: BoundaryDivisor
    indices: tuple[int, ...]
    notes: str

    @property
    def table(self) -> int | None:
        """Source table number, when the record comes from a numbered table."""
        match = re.search(r"[Tt]able\s+(\d+)", self.source)
        return int(match.group(1)) if match else None


def expand_generic_forms(text: str, vars: VarList) -> str:
    """Rewrite every ``fK(m1,m2)`` as the sum of the two K-th powers."""
    out_terms: list[str] = []
    for term in text.split("+"):
        match = _GENERIC_FORM.search(term)
        if not match:
            out_terms.append(term)
            continue
        k = int(match.group(1))
        prefix = (term[: match.start()] + term[match.end() :]).strip()
        for arg in (match.group(2), match.group(3)):
            powered = _power_monomial(arg.strip(), k, vars)
            out_terms.append(f"{prefix} {powered}" if prefix else powered)
    return " + ".join(t.strip() for t in out_terms)


def _power_monomial(text: str, k: int, vars: VarList) -> str:
    poly = parse_polynomial(text, vars)
    if len(poly.terms) != 1 or poly.terms[0][1] != 1:
        raise ValueError(f"generic-form argument {text!r} is not a plain monomial")
    monomial = tuple(e * k for e in poly.terms[0][0])
    return render(Polynomial.from_terms(vars, [(monomial, Fraction(1))]))


def instantiate_generic_forms(text: str, vars: VarList | None = None) -> Polynomial:
    """Expand generic forms and parse; raises :class:`InconsistentFamily`
    when the result is not quasihomogeneous for any positive weight system."""
    if vars is None:
        vars = VarList.default4()
    poly = parse_polynomial(expand_generic_forms(text, vars), vars)
    try:
        infer_weights(poly)
    except (NoPositiveSolution, NonUniqueWeights) as exc:
        raise InconsistentFamily(f"instantiated polynomial {text!r}: {exc}") from exc
    return poly


def _split_alternatives(text: str) -> list[str]:
    """Expand one top-level ``(A ||| B)`` group into full-text alternatives."""
    match = _ALTERNATIVE.search(text)
    if not match:
        return [text]
    return [
        text[: match.start()] + option.strip() + text[match.end() :]
        for option in match.group(1).split("|||")
    ]


def _parse_block(fields: dict[str, tuple[str, int]], path: str) -> list[TableRecord]:
    def get(key: str) -> str | None:
        return fields[key][0] if key in fields else None

    for key in _REQUIRED:
        if key not in fields:
            line = max(line for _, line in fields.values()) if fields else 0
            raise FormatError(line, f"record is missing required field {key}= ({path})")

    vars = VarList.of(v.strip() for v in get("vars").split(",")) if get("vars") else VarList.default4()
    n = len(vars)

    poly_variants = _split_alternatives(fields["poly"][0])
    tilde_variants = _split_alternatives(fields["tilde_poly"][0])
    if len(tilde_variants) == 1:
        tilde_variants *= len(poly_variants)
    if len(poly_variants) != len(tilde_variants):
        raise FormatError(fields["poly"][1], "poly/tilde_poly alternative counts differ")

    try:
        tilde_weights = tuple(int(v) for v in fields["tilde_weights"][0].split())
        cone = tuple(int(v) for v in get("cone").split()) if get("cone") else None
        indices = tuple(int(v) for v in re.split(r"[,\s]+", get("indices").strip())) if get("indices") else ()
    except ValueError as exc:
        raise FormatError(fields["tilde_weights"][1], f"bad integer list: {exc}") from exc
    if len(tilde_weights) != n:
        raise FormatError(fields["tilde_weights"][1], f"expected {n} transformed weights")

    diff_entries: dict[StratumId, Fraction] = {}
    for entry in fields["diff"][0].split(","):
        name, _, value = entry.partition(":")
        if not value:
            raise FormatError(fields["diff"][1], f"diff entry {entry!r} is not Name:value")
        stratum = StratumId.parse(name, n)
        coeff = Fraction(value.strip())
        diff_entries[stratum] = diff_entries.get(stratum, Fraction(0)) + coeff
    diff = BoundaryDivisor.of(diff_entries)

    records = []
    suffixes = [""] if len(poly_variants) == 1 else [f"-{chr(ord('a') + i)}" for i in range(len(poly_variants))]
    for suffix, poly_text, tilde_text in zip(suffixes, poly_variants, tilde_variants):
        try:
            poly = instantiate_generic_forms(poly_text, vars)
            tilde = parse_polynomial(expand_generic_forms(tilde_text, vars), vars)
        except SingwfError as exc:
            raise FormatError(fields["poly"][1], f"record {get('id')}: {exc}") from exc
        records.append(
            TableRecord(
                id=get("id") + suffix,
                source=get("source"),
                vars=vars,
                poly=poly,
                tilde_poly=tilde,
                tilde_weights=tilde_weights,
                cone=cone,
                diff=diff,
                indices=indices,
                notes=get("notes") or "",
            )
        )
    return records


def parse_records(text: str, path: str = "<string>") -> list[TableRecord]:
    records: list[TableRecord] = []
    fields: dict[str, tuple[str, int]] | None = None

    def flush() -> None:
        nonlocal fields
        if fields is not None:
            records.extend(_parse_block(fields, path))
        fields = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line == "[record]":
            flush()
            fields = {}
            continue
        key, eq, value = line.partition("=")
        key = key.strip()
        if not eq:
            raise FormatError(lineno, f"expected key=value or [record], got {line!r}")
        if fields is None:
            raise FormatError(lineno, "field outside any [record] block")
        if key not in _REQUIRED + _OPTIONAL:
            raise FormatError(lineno, f"unknown field {key!r}")
        if key in fields:
            raise FormatError(lineno, f"duplicate field {key!r} in record")
        fields[key] = (value.strip(), lineno)
    flush()
    return records


def load_records(path: str | Path) -> list[TableRecord]:
    """Load one ``.tbl`` file or every ``*.tbl`` file in a directory (sorted);
    ids must be unique across the whole load."""
    path = Path(path)
    files = sorted(path.glob("*.tbl")) if path.is_dir() else [path]
    records: list[TableRecord] = []
    seen: set[str] = set()
    for file in files:
        for record in parse_records(file.read_text(), str(file)):
            if record.id in seen:
                raise DuplicateId(f"record id {record.id!r} appears more than once")
            seen.add(record.id)
            records.append(record)
    return records


def dump_records(records: Iterable[TableRecord]) -> str:
    """Canonical textual form of records (already-expanded; loading the dump
    reproduces the records)."""
    blocks = []
    for r in records:
        lines = ["[record]", f"id={r.id}", f"source={r.source}"]
        if r.vars != VarList.default4():
            lines.append("vars=" + ",".join(r.vars))
        lines.append(f"poly={render(r.poly)}")
        lines.append(f"tilde_poly={render(r.tilde_poly)}")
        lines.append("tilde_weights=" + " ".join(str(w) for w in r.tilde_weights))
        if r.cone is not None:
            lines.append("cone=" + " ".join(str(w) for w in r.cone))
        lines.append(
            "diff="
            + ",".join(f"{s.label(len(r.vars), ascii=True)}:{c}" for s, c in r.diff.entries)
        )
        if r.indices:
            lines.append("indices=" + ",".join(str(i) for i in r.indices))
        if r.notes:
            lines.append(f"notes={r.notes}")
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"
