"""Diagonal actions on homogeneous coordinates and plane-curve checks.

Curves are exact: a ``PlaneCurve`` maps exponent triples to ``Fraction``
coefficients.  Smoothness is certified by scanning every point of the
plane over a prime field, vectorised with numpy.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .modular import Residue

DEFAULT_PRIMES = (101, 1009)


class DegenerateCurveError(ValueError):
    pass


class CurveParseError(ValueError):
    pass


@dataclass(frozen=True)
class MonomialAction:
    weights: tuple[int, ...]
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"order must be positive, got {self.n}")
        object.__setattr__(self, "weights", tuple(w % self.n for w in self.weights))


@dataclass(frozen=True)
class PlaneCurve:
    degree: int
    coeffs: tuple[tuple[tuple[int, int, int], Fraction], ...]

    def __post_init__(self):
        cleaned = {}
        for exps, c in self.coeffs:
            exps = tuple(int(e) for e in exps)
            if len(exps) != 3 or min(exps) < 0 or sum(exps) != self.degree:
                raise ValueError(f"exponents {exps} do not have degree {self.degree}")
            c = Fraction(c)
            if c:
                cleaned[exps] = cleaned.get(exps, Fraction(0)) + c
        cleaned = {k: v for k, v in cleaned.items() if v}
        if not cleaned:
            raise ValueError("the zero polynomial is not a curve")
        object.__setattr__(self, "coeffs", tuple(sorted(cleaned.items(), reverse=True)))

    @classmethod
    def from_dict(cls, terms: dict) -> PlaneCurve:
        degrees = {sum(k) for k in terms}
        if len(degrees) != 1:
            raise ValueError(f"mixed degrees {sorted(degrees)}")
        return cls(degrees.pop(), tuple(terms.items()))

    def monomials(self) -> list[tuple[int, int, int]]:
        return [e for e, _ in self.coeffs]

    def __str__(self) -> str:
        parts = []
        for (i, j, k), c in self.coeffs:
            mono = "*".join(f"X{v}^{e}" if e > 1 else f"X{v}"
                            for v, e in enumerate((i, j, k)) if e)
            parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts)


def sextic_m50(a=1, b=1, c=1) -> PlaneCurve:
    """``a X0^6 + b X0 X1^5 + c X1 X2^5`` (zero coefficients dropped)."""
    return PlaneCurve.from_dict({(6, 0, 0): a, (1, 5, 0): b, (0, 1, 5): c})


def monomial_character(exponents, A: MonomialAction) -> Residue:
    if len(exponents) != len(A.weights):
        raise ValueError(f"{len(exponents)} exponents for {len(A.weights)} weights")
    return Residue(sum(e * w for e, w in zip(exponents, A.weights)), A.n)


def degree_monomials(d: int, nvars: int = 3):
    """Exponent tuples of total degree d, lexicographically descending."""
    out = []
    for combo in itertools.combinations_with_replacement(range(nvars), d):
        exps = [0] * nvars
        for v in combo:
            exps[v] += 1
        out.append(tuple(exps))
    return sorted(set(out), reverse=True)


def invariant_monomials(d: int, A: MonomialAction, target) -> list[tuple[int, ...]]:
    target = target.value if isinstance(target, Residue) else target % A.n
    return [e for e in degree_monomials(d, len(A.weights))
            if monomial_character(e, A).value == target]


def bidegree_monomials(d1: int, d2: int):
    """Exponents (i0, i1, j0, j1) with i0+i1 = d1, j0+j1 = d2 on P1 x P1."""
    return [(d1 - i, i, d2 - j, j) for i in range(d1 + 1) for j in range(d2 + 1)]


def curve_invariance(C: PlaneCurve, A: MonomialAction) -> bool:
    chars = {monomial_character(e, A).value for e in C.monomials()}
    return len(chars) == 1


def solve_alpha_m50(tangency: int = 6) -> int:
    """Residue alpha mod 5 with ``5*alpha + 1 = tangency (mod 25)``.

    At p3 = (0:0:1) the branch is ``x1 = c * x0**tangency`` in the affine
    coordinates (x0, x1), with weights (1, 5*alpha + 1) mod 25.
    """
    sols = [a for a in range(5) if (5 * a + 1 - tangency) % 25 == 0]
    if len(sols) != 1:
        raise ValueError(f"tangency {tangency}: no admissible alpha")
    return sols[0]


@dataclass(frozen=True)
class Normalization:
    """Diagonal scaling bringing three coefficients (a, b, c) to 1.

    Each factor is a product ``a**p * b**q * c**r`` with rational
    exponents; ``scales`` holds one exponent triple per coordinate and
    ``overall`` the exponent triple of the global multiplier.
    """

    monomials: tuple[tuple[int, int, int], ...]
    scales: tuple[tuple[Fraction, Fraction, Fraction], ...]
    overall: tuple[Fraction, Fraction, Fraction]

    def residual_exponents(self) -> list[tuple[Fraction, ...]]:
        """Exponent vector of each normalised coefficient; all zero iff exact."""
        out = []
        for idx, mono in enumerate(self.monomials):
            vec = [Fraction(int(i == idx)) for i in range(3)]
            vec = [v + o for v, o in zip(vec, self.overall)]
            for coord, e in enumerate(mono):
                vec = [v + e * s for v, s in zip(vec, self.scales[coord])]
            out.append(tuple(vec))
        return out

    def evaluate(self, coeffs):
        """Numeric factors ``(lambda_0, lambda_1, lambda_2, mu)`` when rational.

        Returns None if some factor needs a genuine root of the coefficients.
        """
        coeffs = [Fraction(c) for c in coeffs]
        out = []
        for vec in (*self.scales, self.overall):
            val = Fraction(1)
            for c, e in zip(coeffs, vec):
                if c == 1 or e == 0:
                    continue
                if e.denominator != 1:
                    return None
                val *= c ** int(e)
            out.append(val)
        return tuple(out)

    @staticmethod
    def _render(vec, names=("a", "b", "c")) -> str:
        parts = [f"{n}^({e})" if e != 1 else n for n, e in zip(names, vec) if e]
        return "*".join(parts) or "1"

    def describe(self) -> str:
        xs = ", ".join(f"X{i} -> {self._render(s)}*X{i}" for i, s in enumerate(self.scales))
        return f"{xs}; multiply by {self._render(self.overall)}"


def _solve_rational(rows, rhs):
    """One solution of a consistent linear system over Q, free variables 0."""
    nvar = len(rows[0])
    M = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for col in range(nvar):
        piv = next((i for i in range(r, len(M)) if M[i][col]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        M[r] = [x / M[r][col] for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][col]:
                M[i] = [x - M[i][col] * y for x, y in zip(M[i], M[r])]
        pivots.append(col)
        r += 1
    if any(all(x == 0 for x in row[:-1]) and row[-1] for row in M):
        raise ValueError("inconsistent system")
    sol = [Fraction(0)] * nvar
    for i, col in enumerate(pivots):
        sol[col] = M[i][-1]
    return sol


def torus_normalize(coeffs, monomials=((6, 0, 0), (1, 5, 0), (0, 1, 5))) -> tuple[PlaneCurve, Normalization]:
    """Scale coordinates so three nonzero coefficients all become 1.

    Works in exponent space: with ``X_i -> lambda_i X_i`` and a global
    multiplier ``mu``, coefficient j becomes
    ``c_j * mu * prod(lambda_i ** e_ij)``; taking formal logarithms turns
    this into a rational linear system, which keeps everything exact.
    """
    coeffs = [Fraction(c) for c in coeffs]
    if len(coeffs) != 3 or len(monomials) != 3:
        raise ValueError("need exactly three coefficients")
    if any(c == 0 for c in coeffs):
        raise DegenerateCurveError(f"zero coefficient in {tuple(str(c) for c in coeffs)}")
    # unknowns: log lambda_0..2, log mu; one right-hand side per coefficient
    rows = [list(mono) + [1] for mono in monomials]
    scales = [[Fraction(0)] * 3 for _ in range(3)]
    overall = [Fraction(0)] * 3
    for j in range(3):
        rhs = [-int(i == j) for i in range(3)]
        sol = _solve_rational(rows, rhs)
        for coord in range(3):
            scales[coord][j] = sol[coord]
        overall[j] = sol[3]
    norm = Normalization(tuple(tuple(m) for m in monomials),
                         tuple(tuple(s) for s in scales), tuple(overall))
    curve = PlaneCurve.from_dict({tuple(m): 1 for m in monomials})
    return curve, norm


# --- finite-field scan -------------------------------------------------------

def _reduce_mod_p(c: Fraction, p: int) -> int:
    if c.denominator % p == 0:
        raise ValueError(f"prime {p} divides a coefficient denominator")
    return c.numerator % p * pow(c.denominator, -1, p) % p


def _check_prime(p: int):
    if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
        raise ValueError(f"{p} is not prime")


def _eval_terms(terms, pts, p):
    """Evaluate sum c * x^e over rows of ``pts`` (shape (N, 3)), mod p."""
    deg = max((sum(e) for e, _ in terms), default=0)
    powers = [np.ones((pts.shape[0], deg + 1), dtype=np.int64) for _ in range(3)]
    for v in range(3):
        for k in range(1, deg + 1):
            powers[v][:, k] = powers[v][:, k - 1] * pts[:, v] % p
    acc = np.zeros(pts.shape[0], dtype=np.int64)
    for (i, j, k), c in terms:
        term = powers[0][:, i] * powers[1][:, j] % p * powers[2][:, k] % p
        acc = (acc + c * term) % p
    return acc


def _partials(terms):
    out = []
    for v in range(3):
        d = []
        for e, c in terms:
            if e[v]:
                ee = list(e)
                ee[v] -= 1
                d.append((tuple(ee), c * e[v]))
        out.append(d)
    return out


def projective_points(p: int) -> np.ndarray:
    """All p^2 + p + 1 normalised points of P2(F_p)."""
    xs, ys = np.meshgrid(np.arange(p, dtype=np.int64), np.arange(p, dtype=np.int64),
                         indexing="ij")
    affine = np.stack([xs.ravel(), ys.ravel(), np.ones(p * p, dtype=np.int64)], axis=1)
    line = np.stack([np.arange(p, dtype=np.int64), np.ones(p, dtype=np.int64),
                     np.zeros(p, dtype=np.int64)], axis=1)
    return np.concatenate([affine, line, np.array([[1, 0, 0]], dtype=np.int64)])


def singular_points_fp(C: PlaneCurve, p: int, chunk: int = 1 << 18) -> list[tuple[int, int, int]]:
    """F_p-rational points where C and its three partials all vanish.

    Only rational points are scanned; a singular point defined over a
    proper extension of F_p is not seen.
    """
    _check_prime(p)
    if C.degree % p == 0:
        raise ValueError(f"prime {p} divides the degree {C.degree}")
    terms = [(e, _reduce_mod_p(c, p)) for e, c in C.coeffs]
    polys = [terms] + [[t for t in d if t[1] % p] for d in _partials(terms)]
    pts = projective_points(p)
    found = []
    for start in range(0, pts.shape[0], chunk):
        block = pts[start:start + chunk]
        mask = np.ones(block.shape[0], dtype=bool)
        for poly in polys:
            if not poly:
                continue
            mask &= _eval_terms(poly, block, p) == 0
            if not mask.any():
                break
        found.extend(tuple(int(v) for v in row) for row in block[mask])
    return found


def smooth_over_fp(C: PlaneCurve, p: int) -> bool:
    return not singular_points_fp(C, p)


def parse_curve(text: str) -> PlaneCurve:
    """Parse lines ``i j k : num/den`` (or ``i j k : num``); '#' starts a comment."""
    terms: dict[tuple[int, int, int], Fraction] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise CurveParseError(f"line {lineno}: expected 'i j k : coefficient'")
        left, right = line.split(":", 1)
        try:
            exps = tuple(int(t) for t in left.split())
            coeff = Fraction(right.strip())
        except ValueError as exc:
            raise CurveParseError(f"line {lineno}: {exc}") from None
        if "." in right or "e" in right.lower():
            raise CurveParseError(f"line {lineno}: coefficients must be exact integers or fractions")
        if len(exps) != 3 or min(exps) < 0:
            raise CurveParseError(f"line {lineno}: need three non-negative exponents")
        terms[exps] = terms.get(exps, Fraction(0)) + coeff
    if not terms:
        raise CurveParseError("no terms")
    try:
        return PlaneCurve.from_dict(terms)
    except ValueError as exc:
        raise CurveParseError(str(exc)) from None
