"""Branched-cover arithmetic: K3 double covers, Q-divisor coefficients,
Riemann-Hurwitz counts and the ruling bound."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .lattice import (DivisorClass, SurfaceModel, anti_bicanonical,
                      canonical_class, genus_adjunction, intersect)
from .modular import element_order

# horizontal degree of B = -2K over the base of a ruling
BRANCH_FIBRE_DEGREE = 4


@dataclass(frozen=True)
class BranchComponent:
    curve_class: DivisorClass
    index: int
    numerator: int
    denominator: int

    def __post_init__(self):
        if self.index < 2:
            raise ValueError(f"ramification index must be >= 2, got {self.index}")
        if not 0 < self.numerator < self.denominator:
            raise ValueError(
                f"coefficient {self.numerator}/{self.denominator} outside (0, 1)")

    @property
    def coefficient(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)


@dataclass(frozen=True)
class BranchConfiguration:
    base: SurfaceModel
    components: tuple[BranchComponent, ...]
    order: int
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self):
        for c in self.components:
            if c.curve_class.surface != self.base:
                raise ValueError(f"component {c.curve_class} is not on {self.base}")

    @classmethod
    def from_indices(cls, base, parts, order, labels=()):
        """``parts`` is a list of ``(class, index)``; coefficients over ``order``."""
        idx = [r for _, r in parts]
        nums = qdivisor_coefficients(idx, order)
        comps = tuple(BranchComponent(D, r, a, order) for (D, r), a in zip(parts, nums))
        return cls(base, comps, order, tuple(labels))

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(c.index for c in self.components)

    def to_dict(self) -> dict:
        return {
            "base": str(self.base),
            "branch": [{"class": str(c.curve_class), "index": c.index}
                       for c in self.components],
        }


@dataclass(frozen=True)
class DoubleCoverReport:
    branch_class_ok: bool
    chi_value: int
    canonical_trivial: bool
    disjointness_ok: bool
    genera: tuple[int, ...]

    @property
    def is_k3(self) -> bool:
        return (self.branch_class_ok and self.canonical_trivial
                and self.disjointness_ok and self.chi_value == 24)


def double_cover_k3_check(X: SurfaceModel, B_parts: list[DivisorClass]) -> DoubleCoverReport:
    """Numerical K3 test for the double cover of X branched over the parts.

    The parts must be pairwise disjoint; the Euler number is then
    ``2*chi(X) - chi(B)`` with ``chi(B)`` additive over components.
    """
    if not B_parts:
        raise ValueError("empty branch")
    total = B_parts[0]
    for D in B_parts[1:]:
        total = total + D
    branch_ok = total == anti_bicanonical(X)
    # K + B/2 = 0  <=>  2K + B = 0 in the torsion-free Picard group
    trivial = (2 * canonical_class(X) + total).is_zero()
    disjoint = all(intersect(D1, D2, X) == 0
                   for D1, D2 in itertools.combinations(B_parts, 2))
    genera = tuple(genus_adjunction(D, X) for D in B_parts)
    chi_B = sum(2 - 2 * g for g in genera)
    return DoubleCoverReport(branch_ok, 2 * X.chi_top - chi_B, trivial, disjoint, genera)


def qdivisor_coefficients(indices: list[int], t: int) -> list[int]:
    """Numerators of ``1 - 1/r`` over the common denominator ``t``."""
    out = []
    for r in indices:
        if r < 2 or t % r:
            raise ValueError(f"index {r} does not divide {t}")
        out.append(t - t // r)
    return out


@dataclass(frozen=True)
class HurwitzDelta:
    delta: int
    within_bound: bool


def hurwitz_delta(K_sq: int, fibre_degree: int = BRANCH_FIBRE_DEGREE) -> HurwitzDelta:
    """Total ramification of ``r|_B : B -> P1`` for ``B = -2K``.

    With ``g(B) = K^2 + 1`` and degree 4 over P1, Riemann-Hurwitz gives
    ``delta = 2*K^2 + 8``.
    """
    if fibre_degree != BRANCH_FIBRE_DEGREE:
        raise ValueError("only the degree-4 branch of a ruled double cover is supported")
    g_B = K_sq + 1
    delta = (2 * g_B - 2) + 2 * fibre_degree
    return HurwitzDelta(delta, delta <= 24)


class UnboundedFamily(ValueError):
    pass


def hurwitz_branch_orders(g_B: int, total_points: int, q_max: int | None = None) -> frozenset[int]:
    """Orders q of cyclic covers ``B -> B/Q`` totally ramified at exactly
    ``total_points`` points:  ``2g_B - 2 = q(2g_C - 2) + k(q - 1)``.

    When ``2g_B - 2 + k = 0`` every q works; pass ``q_max`` to get a
    finite slice of that family.
    """
    k = total_points
    rhs = 2 * g_B - 2 + k
    if rhs == 0 and q_max is None:
        raise UnboundedFamily(f"every q >= 2 solves g_B={g_B}, k={k}; pass q_max")
    # q * (2g_C - 2 + k) = rhs, so q <= rhs whenever the bracket is positive
    bound = q_max if q_max is not None else max(rhs, 2)
    out = set()
    for q in range(2, bound + 1):
        num = rhs + q * (2 - k)
        if num % (2 * q) == 0 and num >= 0:
            out.add(q)
    return frozenset(out)


def lemma7_bound(n: int, a: int) -> Fraction:
    """Upper bound for K^2 given n rulings pairwise meeting in a points."""
    if n < 2 or a < 1:
        raise ValueError("need n >= 2 and a >= 1")
    return Fraction(4 * n, a * (n - 1))


def ramification_profiles(delta: int, q: int, fibre_degree: int = BRANCH_FIBRE_DEGREE):
    """Splittings ``beta1 <= beta2`` of the ramification on the invariant fibres.

    Ramification off the two invariant fibres comes in free orbits of size
    q, and a fibre meeting B in ``fibre_degree`` points carries at most
    ``fibre_degree - 1`` of it.
    """
    out = []
    cap = fibre_degree - 1
    for b1 in range(cap + 1):
        for b2 in range(b1, cap + 1):
            rest = delta - b1 - b2
            if rest >= 0 and rest % q == 0:
                out.append((b1, b2))
    return out


def cyclic_cover_witness(m: int, base: SurfaceModel, branch: list[tuple[DivisorClass, int]]):
    """Local monodromies realising a Z/m cover branched along ``branch``.

    For a simply connected base, H_1 of the complement is generated by
    loops around the components modulo ``sum (D_i . G) g_i = 0`` for G
    running over a basis of Pic.  Returns the lexicographically first
    tuple of monodromies with the requested orders that satisfies the
    relations and generates Z/m, or None.
    """
    choices = []
    for _, r in branch:
        if m % r:
            return None
        choices.append([g for g in range(m) if element_order(g, m) == r])
    gens = base.generators()
    rows = [[intersect(D, G, base) for D, _ in branch] for G in gens]
    for gs in itertools.product(*choices):
        if all(sum(c * g for c, g in zip(row, gs)) % m == 0 for row in rows):
            gg = m
            for g in gs:
                gg = gcd(gg, g)
            if gg == 1:
                return gs
    return None
