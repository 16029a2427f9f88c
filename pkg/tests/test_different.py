"""Different divisors: closed formulas, adjunction, D/D^, hints."""

from fractions import Fraction

import pytest

from singwf import (
    BoundaryDivisor,
    StdBoundary,
    StratumId,
    VarList,
    WeightAssignment,
    build_D,
    build_Dhat,
    check_adjunction,
    compose_different,
    diff_on_E,
    diff_over_wps,
    exceptional_hint,
    infer_weights,
    parse_polynomial,
    profile_from_weights,
    well_form,
)
from singwf.errors import RemarkViolation
from singwf.wellform import WellFormProfile

V3 = VarList.general(3)
F = Fraction


def _profile(text, vars=None):
    poly = parse_polynomial(text, vars)
    return well_form(poly, infer_weights(poly))


def _div(entries):
    return BoundaryDivisor.of({StratumId(*k) if isinstance(k, tuple) else StratumId(k): F(v) for k, v in entries.items()})


def test_diff_E_worked_example_1():
    # [PAPER] (40,45,30,18): 2/3 G + 1/2 D + 4/5 O + 8/9 G3
    g, prof = _profile("t^3+z^2x+x^4+xy^5")
    assert diff_on_E(prof, g_tilde=g) == _div({0: F(2, 3), 1: F(1, 2), 3: F(4, 5), (0, 2): F(8, 9)})
    assert diff_over_wps(prof) == _div({(0, 2): F(2, 3)})


def test_diff_with_boundary_worked_example_2():
    # [PAPER] (30,35,20,12) with c_z = 3/5, c_y = 4/5
    g, prof = _profile("t^3+z^2x+tx^3+ty^5")
    assert diff_on_E(prof, g_tilde=g) == _div({1: F(1, 2), 3: F(4, 5), (0, 1): F(3, 4)})
    b = StdBoundary((F(0), F(3, 5), F(0), F(4, 5)))
    assert diff_over_wps(prof, b) == _div({1: F(3, 5), 3: F(4, 5), (0, 1): F(4, 5)})


def test_boundary_sum_constraint_on_failing_pair():
    g, prof = _profile("t^3+z^2x+tx^3+ty^5")  # failing pair (t, z)
    with pytest.raises(ValueError):
        diff_over_wps(prof, StdBoundary((F(2, 3), F(2, 3), F(0), F(0))))


def test_duval_columns():
    # [PAPER] Example 1.4 / 1.7, D_6 (= D_{2n}, n=3): weights (5,4,2)
    g, prof = _profile("x1^2+x2^2x3+x3^5", V3)
    assert prof.p_tilde == (5, 2, 1)
    assert diff_on_E(prof, g_tilde=g) == _div({0: F(1, 2), (0, 2): F(3, 4)})
    assert diff_over_wps(prof) == _div({(0, 2): F(1, 2)})
    assert build_D(prof) == _div({0: F(1, 2), (0, 2): F(1, 2)})
    assert compose_different(prof) == diff_on_E(prof)

    # D_5 (= D_{2n+1}, n=2): weights (2n, 2n-1, 2)
    g, prof = _profile("x1^2+x2^2x3+x3^4", V3)
    assert prof.p_tilde == (2, 3, 1)
    assert diff_on_E(prof, g_tilde=g) == _div({1: F(1, 2), (0, 2): F(2, 3)})
    assert diff_over_wps(prof) == _div({(0, 2): F(2, 3)})
    assert build_D(prof) == _div({1: F(1, 2)})  # pair curve gets coefficient 0
    assert compose_different(prof) == diff_on_E(prof)

    # E_7: weights (9,6,4)
    g, prof = _profile("x1^2+x2^3+x3^3x2", V3)
    assert prof.p_tilde == (3, 1, 2)
    assert diff_on_E(prof, g_tilde=g) == _div({0: F(1, 2), 2: F(2, 3), (0, 1): F(3, 4)})
    assert diff_over_wps(prof) == _div({(0, 1): F(1, 2)})
    assert build_D(prof) == _div({0: F(1, 2), 2: F(2, 3), (0, 1): F(1, 2)})
    assert compose_different(prof) == diff_on_E(prof)


def test_dhat_and_adjunction():
    g, prof = _profile("t^3+z^2x+x^4+xy^5")
    assert build_Dhat(prof).c == (F(2, 3), F(1, 2), F(0), F(4, 5))
    # adjunction: Diff_E(0) = Diff_{E/P}(D^) = composition
    assert check_adjunction(prof)
    assert diff_on_E(prof) == diff_over_wps(prof, build_Dhat(prof))


def test_remark_violation_both_orders_positive():
    prof = WellFormProfile(
        weights=WeightAssignment((5, 7, 2, 2), 5),
        q=(2, 3, 1, 1),
        Q=6,
        p_tilde=(5, 7, 2, 2),
        d_tilde=5,
        iterations=1,
    )
    assert (0, 1) in prof.failing_pairs
    with pytest.raises(RemarkViolation):
        diff_on_E(prof)
    # Diff over the weighted projective space has no such restriction
    diff_over_wps(prof)


def test_remark_violation_split_check():
    g, prof = _profile("t^3+z^2x+x^4+xy^5")  # failing pair (t, x)
    bad = parse_polynomial("z^2 + t x")  # z^2 avoids both t and x
    with pytest.raises(RemarkViolation):
        diff_on_E(prof, g_tilde=bad)


def test_exceptional_hint():
    # [PAPER] table 1 row 12: q_x = 7, 1 - 1/7 = 6/7 >= 6/7
    prof = profile_from_weights(WeightAssignment((189, 126, 36, 28), 378))
    assert prof.q == (2, 1, 7, 9)
    assert exceptional_hint(prof) == (2, F(6, 7))
    # worked example (30,35,20,12): max coefficient 4/5 < 6/7 -> no hint
    _, prof = _profile("t^3+z^2x+tx^3+ty^5")
    assert exceptional_hint(prof) is None
    # surface threshold 2/3: E_7 has q = (2,1,3)
    _, prof = _profile("x1^2+x2^3+x3^3x2", V3)
    assert exceptional_hint(prof) == (2, F(2, 3))
    _, prof = _profile("x1^2+x2^2x3+x3^5", V3)  # D_6: max 1/2
    assert exceptional_hint(prof) is None
