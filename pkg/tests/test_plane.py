import random
from fractions import Fraction
from itertools import product

import pytest

from k3ns.modular import Residue
from k3ns.plane import (CurveParseError, DegenerateCurveError, MonomialAction, PlaneCurve,
                        curve_invariance, degree_monomials, invariant_monomials,
                        monomial_character, parse_curve, projective_points,
                        singular_points_fp, smooth_over_fp, solve_alpha_m50,
                        sextic_m50, torus_normalize)

A50 = MonomialAction((1, 6, 0), 25)


def test_character_examples():
    assert monomial_character((6, 0, 0), A50) == Residue(6, 25)
    assert monomial_character((1, 5, 0), A50) == Residue(6, 25)
    assert monomial_character((0, 1, 5), A50) == Residue(6, 25)
    assert monomial_character((0, 6, 0), A50) == Residue(11, 25)
    with pytest.raises(ValueError):
        monomial_character((1, 2), A50)


def test_degree_monomials_count_and_order():
    for d in range(9):
        mons = degree_monomials(d)
        assert len(mons) == (d + 1) * (d + 2) // 2
        assert mons == sorted(mons, reverse=True)
    assert degree_monomials(2, 2) == [(2, 0), (1, 1), (0, 2)]


def test_invariant_monomials_m50():
    assert invariant_monomials(6, A50, 6) == [(6, 0, 0), (1, 5, 0), (0, 1, 5)]
    assert invariant_monomials(6, A50, Residue(6, 25)) == [(6, 0, 0), (1, 5, 0), (0, 1, 5)]


def test_invariant_monomials_partition():
    """Characters split the monomials of each degree into disjoint classes."""
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(1, 66)
        A = MonomialAction(tuple(rng.randrange(n) for _ in range(3)), n)
        d = rng.randint(0, 8)
        classes = [invariant_monomials(d, A, t) for t in range(n)]
        flat = [m for c in classes for m in c]
        assert sorted(flat) == sorted(degree_monomials(d))
        for t, c in enumerate(classes):
            assert all(monomial_character(m, A).value == t for m in c)


def test_curve_invariance():
    assert curve_invariance(sextic_m50(), A50)
    assert not curve_invariance(PlaneCurve.from_dict({(6, 0, 0): 1, (0, 6, 0): 1}), A50)


def test_alpha():
    assert solve_alpha_m50(6) == 1
    assert solve_alpha_m50(1) == 0
    with pytest.raises(ValueError):
        solve_alpha_m50(2)


def test_plane_curve_validation():
    with pytest.raises(ValueError):
        PlaneCurve.from_dict({(6, 0, 0): 1, (1, 1, 0): 1})
    with pytest.raises(ValueError):
        PlaneCurve.from_dict({(6, 0, 0): 0})
    C = PlaneCurve.from_dict({(6, 0, 0): Fraction(1, 2), (1, 5, 0): 0})
    assert C.monomials() == [(6, 0, 0)]


@pytest.mark.parametrize("coeffs", [(1, 1, 1), (2, 3, 5), (Fraction(1, 3), 7, -2), (-1, -1, 4)])
def test_torus_normalize_exact(coeffs):
    curve, norm = torus_normalize(coeffs)
    assert curve == sextic_m50()
    assert all(v == (0, 0, 0) for v in norm.residual_exponents())


def test_torus_normalize_identity_and_numeric():
    _, norm = torus_normalize((1, 1, 1))
    assert norm.evaluate((1, 1, 1)) == (1, 1, 1, 1)
    _, norm = torus_normalize((2, 3, 5))
    ev = norm.evaluate((2, 3, 5))
    if ev is not None:
        lam, mu = ev[:3], ev[3]
        for (mono, c) in zip(((6, 0, 0), (1, 5, 0), (0, 1, 5)), (2, 3, 5)):
            val = Fraction(c) * mu
            for l, e in zip(lam, mono):
                val *= l ** e
            assert val == 1
    assert "multiply by" in norm.describe()


def test_torus_normalize_rejects_zero():
    with pytest.raises(DegenerateCurveError):
        torus_normalize((1, 0, 1))
    with pytest.raises(ValueError):
        torus_normalize((1, 1))


def test_projective_points():
    for p in (2, 3, 5, 7):
        pts = projective_points(p)
        assert len(pts) == p * p + p + 1
        assert len({tuple(r) for r in pts}) == len(pts)


def test_sextic_smooth_at_101():
    assert smooth_over_fp(sextic_m50(), 101)


@pytest.mark.parametrize("coeffs", [(1, 1, 0), (1, 0, 1), (0, 1, 1)])
def test_degenerations_singular(coeffs):
    assert singular_points_fp(sextic_m50(*coeffs), 101)


def test_known_singular_points():
    node = PlaneCurve.from_dict({(0, 2, 1): 1, (3, 0, 0): -1, (2, 0, 1): -1})
    assert singular_points_fp(node, 101) == [(0, 0, 1)]
    assert smooth_over_fp(PlaneCurve.from_dict({(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1}), 101)


def test_scan_guards():
    with pytest.raises(ValueError):
        singular_points_fp(sextic_m50(), 3)
    with pytest.raises(ValueError):
        singular_points_fp(sextic_m50(), 91)
    with pytest.raises(ValueError):
        singular_points_fp(PlaneCurve.from_dict({(6, 0, 0): Fraction(1, 101)}), 101)


def brute_singular(C, p):
    terms = [(e, c.numerator * pow(c.denominator, -1, p) % p) for e, c in C.coeffs]

    def ev(poly, pt):
        s = 0
        for (i, j, k), c in poly:
            s += c * pow(pt[0], i, p) * pow(pt[1], j, p) * pow(pt[2], k, p)
        return s % p

    def d(poly, v):
        out = []
        for e, c in poly:
            if e[v]:
                e2 = list(e)
                e2[v] -= 1
                out.append((tuple(e2), c * e[v]))
        return out

    polys = [terms] + [d(terms, v) for v in range(3)]
    pts = [(x, y, 1) for x in range(p) for y in range(p)] + [(x, 1, 0) for x in range(p)] + [(1, 0, 0)]
    return [pt for pt in pts if all(ev(q, pt) == 0 for q in polys)]


def test_scan_matches_pure_python():
    rng = random.Random(3)
    for _ in range(40):
        d = rng.choice([2, 3, 4])
        mons = rng.sample(degree_monomials(d), rng.randint(1, 4))
        C = PlaneCurve.from_dict({m: rng.randint(-3, 3) or 1 for m in mons})
        assert singular_points_fp(C, 13, chunk=50) == brute_singular(C, 13)


def test_sextic_smooth_groebner():
    """Over Q the ideal of C and its partials has no affine zero in any chart."""
    sp = pytest.importorskip("sympy")
    x, y, z = sp.symbols("x y z")
    F = sum(c * x**i * y**j * z**k for (i, j, k), c in
            ((e, int(c)) for e, c in sextic_m50().coeffs))
    for sub in ({x: 1}, {y: 1}, {z: 1}):
        gens = [v for v in (x, y, z) if v not in sub]
        polys = [sp.expand(g.subs(sub)) for g in (F, F.diff(x), F.diff(y), F.diff(z))]
        assert sp.groebner(polys, *gens, order="grevlex").exprs == [1]


def test_parse_curve():
    C = parse_curve("# sextic\n6 0 0 : 1\n1 5 0 : 1\n0 1 5 : 1/1\n")
    assert C == sextic_m50()
    C = parse_curve("2 0 0 : 1/2\n2 0 0 : 1/2\n0 2 0 : -3\n")
    assert dict(C.coeffs) == {(2, 0, 0): 1, (0, 2, 0): -3}


@pytest.mark.parametrize("text", [
    "", "# only\n", "6 0 0 1", "6 0 : 1", "6 0 0 : 0.5", "6 0 0 : x",
    "6 0 0 : 1\n2 0 0 : 1", "-1 7 0 : 1", "6 0 0 : 1\n6 0 0 : -1",
])
def test_parse_errors(text):
    with pytest.raises(CurveParseError):
        parse_curve(text)
