"""End-to-end analysis pipeline and dataset verification."""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

from .dataset import TableRecord
from .different import (
    EXCEPTIONAL_HINT_CAVEAT,
    BoundaryDivisor,
    StdBoundary,
    build_D,
    build_Dhat,
    diff_on_E,
    diff_over_wps,
    exceptional_hint,
)
from .parse import render
from .poly import Polynomial
from .weights import WeightAssignment, discrepancy, discrepancy_tag, infer_weights, quasi_degree
from .wellform import ConeReduction, WellFormProfile, is_well_formed, linear_cone_reduce, well_form


@dataclass(frozen=True)
class AnalysisReport:
    """Everything the pipeline computes for one polynomial."""

    poly: Polynomial
    weights: WeightAssignment
    profile: WellFormProfile
    g_tilde: Polynomial
    well_formed: bool
    diff_e: BoundaryDivisor
    diff_over: BoundaryDivisor
    D: BoundaryDivisor
    Dhat: StdBoundary
    cone: ConeReduction | None
    discrepancy: int
    discrepancy_tag: str
    hint: tuple[int, Fraction] | None

    def to_json_dict(self) -> dict:
        n = self.profile.n
        names = self.poly.vars.names

        def frac(f: Fraction) -> str:
            return f"{f.numerator}/{f.denominator}"

        def divisor(d: BoundaryDivisor) -> list[dict]:
            return [
                {"stratum": s.label(n, ascii=True), "coeff": frac(c)} for s, c in d.entries
            ]

        return {
            "input": render(self.poly),
            "vars": list(names),
            "weights": {"p": list(self.weights.p), "d": self.weights.d},
            "q": list(self.profile.q),
            "Q": self.profile.Q,
            "tilde": {
                "poly": render(self.g_tilde),
                "weights": list(self.profile.p_tilde),
                "degree": self.profile.d_tilde,
            },
            "wellFormed": self.well_formed,
            "failingPairs": [
                {"i": i + 1, "j": j + 1, "q": self.profile.q_pair(i, j)}
                for i, j in self.profile.failing_pairs
            ],
            "diffE": divisor(self.diff_e),
            "diffOverWps": divisor(self.diff_over),
            "D": divisor(self.D),
            "Dhat": [{"var": names[i], "coeff": frac(c)} for i, c in enumerate(self.Dhat.c)],
            "cone": (
                None
                if self.cone is None
                else {"k": self.cone.k + 1, "weights": list(self.cone.weights)}
            ),
            "discrepancy": {"a": self.discrepancy, "tag": self.discrepancy_tag},
            "exceptionalHint": (
                None
                if self.hint is None
                else {
                    "var": names[self.hint[0]],
                    "threshold": frac(self.hint[1]),
                    "caveat": EXCEPTIONAL_HINT_CAVEAT,
                }
            ),
            "fixpointIterations": self.profile.iterations,
        }


def analyze(poly: Polynomial, weights: WeightAssignment | None = None) -> AnalysisReport:
    """Run the full pipeline: weights (inferred when not given), well-forming,
    differents, cone recognition, discrepancy, exceptionality hint."""
    if weights is None:
        weights = infer_weights(poly)
    else:
        quasi_degree(poly, weights.p)  # raises NotQuasihomogeneous on mismatch
        if quasi_degree(poly, weights.p) != weights.d:
            raise ValueError(
                f"degree {weights.d} does not match the weighted degree "
                f"{quasi_degree(poly, weights.p)}"
            )
        weights = weights.primitive()
    g_tilde, profile = well_form(poly, weights)
    a = discrepancy(weights)
    return AnalysisReport(
        poly=poly,
        weights=weights,
        profile=profile,
        g_tilde=g_tilde,
        well_formed=is_well_formed(profile),
        diff_e=diff_on_E(profile, g_tilde=g_tilde),
        diff_over=diff_over_wps(profile),
        D=build_D(profile),
        Dhat=build_Dhat(profile),
        cone=linear_cone_reduce(g_tilde, profile),
        discrepancy=a,
        discrepancy_tag=discrepancy_tag(a),
        hint=exceptional_hint(profile),
    )


@dataclass(frozen=True)
class VerifyOutcome:
    """Result of re-deriving one dataset record from its polynomial alone."""

    record_id: str
    ok: bool
    mismatches: tuple[str, ...]
    seconds: float


def verify_record(record: TableRecord) -> VerifyOutcome:
    """Recompute everything from record.poly and compare with the transcribed
    expectations: transformed support, transformed weights, cone reduction,
    and the different Diff_E(0).  Exact rational comparison throughout."""
    start = time.perf_counter()
    mismatches: list[str] = []
    try:
        report = analyze(record.poly)
    except Exception as exc:  # domain errors count as verification failures
        return VerifyOutcome(record.id, False, (f"analysis failed: {exc}",), time.perf_counter() - start)

    if report.profile.p_tilde != record.tilde_weights:
        mismatches.append(
            f"transformed weights {report.profile.p_tilde} != expected {record.tilde_weights}"
        )
    if set(report.g_tilde.support) != set(record.tilde_poly.support):
        mismatches.append(
            f"transformed support {render(report.g_tilde)!r} != expected "
            f"{render(record.tilde_poly)!r}"
        )
    expected_cone = record.cone
    got_cone = report.cone.weights if report.cone is not None else None
    if got_cone != expected_cone:
        mismatches.append(f"cone reduction {got_cone} != expected {expected_cone}")
    if report.diff_e != record.diff:
        n = len(record.vars)
        fmt = lambda d: ", ".join(f"{s.label(n, ascii=True)}:{c}" for s, c in d.entries)
        mismatches.append(
            f"different [{fmt(report.diff_e)}] != expected [{fmt(record.diff)}]"
        )
    return VerifyOutcome(record.id, not mismatches, tuple(mismatches), time.perf_counter() - start)
