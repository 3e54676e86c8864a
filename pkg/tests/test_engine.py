from fractions import Fraction

import pytest

from k3ns import engine as eng
from k3ns.engine import (AlphaPair, CaseReport, Check, FilterVerdict, classify,
                         classify_all, enumerate_alpha_pairs, filter_lemma3,
                         filter_symplectic_lift, lemma4_allowed_orders,
                         lemma8_identity_check, run_filters, solve_lemma6)
from k3ns.equivariant import LocalWeights
from k3ns.report import render_json

RAW = {66: [(0, 1)], 60: [(0, 2), (1, 1)], 54: [(0, 3), (1, 2)], 48: [(0, 4), (1, 3), (2, 2)]}
SURVIVORS = {66: [(0, 1)], 60: [], 54: [(1, 2)], 48: [(1, 3)]}


@pytest.fixture(scope="module")
def reports():
    return {r.m: r for r in classify_all((101,))}


@pytest.mark.parametrize("m", sorted(RAW))
def test_alpha_pairs(m):
    assert [(p.alpha1, p.alpha2) for p in enumerate_alpha_pairs(m)] == RAW[m]


def test_alpha_pairs_errors():
    with pytest.raises(ValueError):
        enumerate_alpha_pairs(50)
    with pytest.raises(ValueError):
        enumerate_alpha_pairs(78)
    with pytest.raises(ValueError):
        AlphaPair(2, 1)


@pytest.mark.parametrize("m", sorted(RAW))
def test_survivor_calibration(m):
    assert [(v.pair.alpha1, v.pair.alpha2) for v in run_filters(m) if v.accepted] == SURVIVORS[m]


def test_rejection_routes():
    reasons = {(m, v.pair.alpha1, v.pair.alpha2): v.reason for m in RAW for v in run_filters(m)}
    assert reasons == {
        (66, 0, 1): eng.SURVIVES,
        (60, 0, 2): eng.LEMMA3_VIOLATION, (60, 1, 1): eng.SYMPLECTIC_LIFT,
        (54, 0, 3): eng.LEMMA3_VIOLATION, (54, 1, 2): eng.SURVIVES,
        (48, 0, 4): eng.LEMMA3_VIOLATION, (48, 1, 3): eng.SURVIVES,
        (48, 2, 2): eng.FIXED_CURVE_OFF_BRANCH,
    }


def test_m60_trace():
    v = filter_symplectic_lift(60, AlphaPair(1, 1))
    assert [label for label, _ in v.trace] == ["weights", "restricted", "lifted"]
    assert [w for _, w in v.trace] == [LocalWeights(1, 9, 10), LocalWeights(1, 4, 5),
                                       LocalWeights(1, 4, 5)]
    assert "6 = 1 mod 5" in v.detail


def test_m48_fixed_curve_trace():
    v = filter_symplectic_lift(48, AlphaPair(2, 2))
    assert v.trace[-1][1] == LocalWeights(1, 0, 2)


def test_lemma3_keeps_m66_zero():
    # 11^2 does not divide 66, so alpha1 = 0 is allowed there
    assert filter_lemma3(66, AlphaPair(0, 1)).accepted
    assert not filter_lemma3(60, AlphaPair(0, 2)).accepted


def test_verdict_consistency():
    with pytest.raises(ValueError):
        FilterVerdict(AlphaPair(0, 1), True, eng.SYMPLECTIC_LIFT)


def test_fibre_index_div3():
    assert [eng.fibre_index_div3(66, a) for a in (0, 1)] == [11, 66]
    assert [eng.fibre_index_div3(54, a) for a in (1, 2)] == [54, 27]
    assert [eng.fibre_index_div3(48, a) for a in (1, 3)] == [48, 16]


def test_solve_lemma6_m44():
    sols = solve_lemma6(22, [7, 15, 3], [11], range(0, 9))
    assert (7, 11, 4) in sols
    assert all((t1 + t2 + e) % 22 == 0 for t1, t2, e in sols)


def test_double_cover_lift():
    a, b = eng.double_cover_lift(1, 3, 4)
    assert a == LocalWeights(2, 3, 8) and b == LocalWeights(2, 7, 8)


def test_lemma4():
    allowed = lemma4_allowed_orders()
    assert allowed == {2, 6, 10, 14, 18, 30, 42, 50}
    assert not allowed & {38, 44, 48, 54, 60, 66}


@pytest.mark.parametrize("e1, e2, ok, rho", [(3, 0, True, 8), (4, 1, True, 10), (2, 0, False, None)])
def test_lemma8(e1, e2, ok, rho):
    r = lemma8_identity_check(e1, e2)
    assert r.noether_ok is ok
    if ok:
        assert r.rho_lower_bound == rho == 8 + 2 * e2
        assert r.integral


def test_lemma8_values():
    r = lemma8_identity_check(3, 0)
    assert (r.K_sq, r.c2) == (-1, 13)
    assert lemma8_identity_check(1, 0).K_sq == Fraction(-1, 3)
    assert not lemma8_identity_check(1, 0).integral
    with pytest.raises(ValueError):
        lemma8_identity_check(-1, 0)


def test_classification_reproduced(reports):
    assert sorted(reports) == list(eng.CASES)
    for m, r in reports.items():
        assert r.passed, (m, r.failed_checks())
        assert r.matches_expected()
        assert (r.exists, r.num_actions) == eng.EXPECTED[m]


QUOTIENTS = {38: ("F0", [2, 19, 38]), 44: ("F0", [2, 2, 44, 44]), 48: ("P2", [3, 2, 48, 16]),
             50: ("P2", [2, 5, 25, 50]), 54: ("P2", [3, 2, 54, 27]), 66: ("P2", [3, 2, 11, 66])}


def test_quotient_models(reports):
    assert reports[60].quotient_model is None
    for m, (base, idx) in QUOTIENTS.items():
        qm = reports[m].quotient_model
        assert qm["base"] == base
        assert [b["index"] for b in qm["branch"]] == idx
        for b in qm["branch"]:
            num, den = map(int, b["coefficient"].split("/"))
            assert Fraction(num, den) == 1 - Fraction(1, b["index"])


def test_named_checks(reports):
    names = {m: [c.name for c in r.checks] for m, r in reports.items()}
    assert "smooth_p101" in names[50]
    assert "minimal_subgroups_nonsymplectic" in names[44]
    assert any("involution" in a for a in reports[38].annotations)


def test_m38_two_actions(reports):
    r = reports[38]
    assert r.num_actions == 2
    joined = " ".join(c.detail for c in r.checks)
    assert "13" in joined and "6+9+4" in joined.replace(" ", "")


def test_unsupported_m():
    with pytest.raises(ValueError):
        classify(40)
    with pytest.raises(ValueError):
        eng.classify_div3(50)


def test_case_report_validation():
    with pytest.raises(ValueError):
        CaseReport(60, False, 0, 1, None)
    with pytest.raises(ValueError):
        CaseReport(60, True, 0, 0, None)


def test_case_report_round_trip(reports):
    for r in reports.values():
        assert CaseReport.from_dict(r.to_dict()) == r
    assert Check.from_dict(Check("x", True, "d").to_dict()) == Check("x", True, "d")


def test_deterministic():
    assert render_json(classify(38)) == render_json(classify(38))
    assert render_json(classify(50, (101,))) == render_json(classify(50, (101,)))


def test_arithmetic_suites():
    suites = eng.arithmetic_suites()
    assert suites and all(c.passed for c in suites), [c for c in suites if not c.passed]
