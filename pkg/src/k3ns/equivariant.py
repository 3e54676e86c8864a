"""Fixed-point types of cyclic actions on ruled surfaces.

A point fixed by the generator has local weights ``(w_t, w_x)``: the
generator acts as ``t -> xi**w_t * t`` along the base direction and
``x -> xi**w_x * x`` along the fibre.  Types are normalised with
``w_t = 1``, so the type of the point is just ``w_x``.

The ruled-surface model carries two disjoint invariant sections ``s1``
and ``s2`` and the four points where they meet the invariant fibres
``F1`` and ``F2``:

    a1 = s1 . F1    a2 = s1 . F2
    b1 = s2 . F1    b2 = s2 . F2
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from math import gcd

from .lattice import SurfaceModel, hirzebruch
from .modular import Residue, inverse_mod

CENTRES = ("a1", "a2", "b1", "b2")
_OPPOSITE = {"a1": "b1", "b1": "a1", "a2": "b2", "b2": "a2"}


class InvalidModelError(ValueError):
    pass


class QuotientError(ValueError):
    """The quotient is not a smooth Hirzebruch surface."""


class NoInvariantBranch(ValueError):
    pass


@dataclass(frozen=True)
class LocalWeights:
    w_t: int
    w_x: int
    d: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"order must be positive, got {self.d}")
        object.__setattr__(self, "w_t", self.w_t % self.d)
        object.__setattr__(self, "w_x", self.w_x % self.d)

    def __str__(self) -> str:
        return f"({self.w_t},{self.w_x}) mod {self.d}"


@dataclass(frozen=True)
class EquivariantRuledModel:
    n: int
    s1_sq: int
    s2_sq: int
    tau_a1: int
    tau_a2: int
    tau_b1: int
    tau_b2: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidModelError(f"order must be positive, got {self.n}")
        for name in ("tau_a1", "tau_a2", "tau_b1", "tau_b2"):
            object.__setattr__(self, name, getattr(self, name) % self.n)
        problems = self.violations()
        if problems:
            raise InvalidModelError("; ".join(problems))

    @classmethod
    def from_section_types(cls, n: int, s1_sq: int, tau1: int, tau2: int) -> EquivariantRuledModel:
        """Model determined by the types on ``s1``; ``s2`` gets the opposites."""
        return cls(n, s1_sq, -s1_sq, tau1, tau2, -tau1, -tau2)

    def violations(self) -> list[str]:
        out = []
        n = self.n
        if self.s1_sq + self.s2_sq != 0:
            out.append(f"section squares {self.s1_sq}, {self.s2_sq} do not sum to 0")
        if (self.tau_a1 + self.tau_b1) % n:
            out.append(f"types on F1 not opposite: {self.tau_a1} + {self.tau_b1} mod {n}")
        if (self.tau_a2 + self.tau_b2) % n:
            out.append(f"types on F2 not opposite: {self.tau_a2} + {self.tau_b2} mod {n}")
        if (self.tau_a1 + self.tau_a2 - self.s1_sq) % n:
            out.append(
                f"tau1 + tau2 + e = {self.tau_a1} + {self.tau_a2} + {-self.s1_sq} "
                f"is not 0 mod {n}")
        return out

    def type_at(self, centre: str) -> int:
        return getattr(self, "tau_" + centre)

    def types(self) -> tuple[int, int, int, int]:
        return (self.tau_a1, self.tau_a2, self.tau_b1, self.tau_b2)

    @property
    def e(self) -> int:
        return abs(self.s1_sq)

    def __str__(self) -> str:
        return (f"n={self.n} s1^2={self.s1_sq} "
                f"a=({self.tau_a1},{self.tau_a2}) b=({self.tau_b1},{self.tau_b2})")


def lemma6_check(tau1, tau2, e: int, n: int) -> bool:
    """True iff ``tau1 + tau2 + e = 0 (mod n)``."""
    vals = []
    for tau in (tau1, tau2):
        if isinstance(tau, Residue):
            if tau.modulus != n:
                raise ValueError(f"modulus mismatch: {tau.modulus} vs {n}")
            tau = tau.value
        vals.append(tau)
    return (vals[0] + vals[1] + e) % n == 0


def same_fibre_opposite(tau: Residue) -> Residue:
    return -tau


def weight_from_invariant_branch(k_t: int, k_x: int, w_t: Residue) -> Residue:
    """Fibre weight forced by an invariant branch ``t**k_t = c * x**k_x``.

    Invariance means ``k_t * w_t = k_x * w_x (mod n)``.  A smooth branch
    tangent to the fibre to order k is ``k_t = 1, k_x = k``.
    """
    n = w_t.modulus
    rhs = (k_t * w_t.value) % n
    g = gcd(k_x, n)
    if rhs % g:
        raise NoInvariantBranch(
            f"{k_x}*w_x = {rhs} (mod {n}) has no solution")
    if g != 1:
        raise NoInvariantBranch(
            f"contact order {k_x} shares a factor with {n}; weight not determined")
    return Residue(rhs * inverse_mod(k_x, n).value, n)


def elementary_transform(M: EquivariantRuledModel, centre: str) -> EquivariantRuledModel:
    """Blow up a marked fixed point and contract the fibre through it.

    The section through the centre loses one from its square and the
    other gains one; the centre's type drops by one and the opposite
    point on the same fibre gains one.
    """
    if centre not in CENTRES:
        raise ValueError(f"centre must be one of {CENTRES}, got {centre!r}")
    ds = -1 if centre.startswith("a") else 1
    changes = {
        "s1_sq": M.s1_sq + ds,
        "s2_sq": M.s2_sq - ds,
        "tau_" + centre: M.type_at(centre) - 1,
        "tau_" + _OPPOSITE[centre]: M.type_at(_OPPOSITE[centre]) + 1,
    }
    return replace(M, **changes)


def run_chain(M: EquivariantRuledModel, steps) -> list[EquivariantRuledModel]:
    """Apply ``(centre, count)`` steps; returns every intermediate model.

    Each model is re-validated on construction, so a returned history has
    all invariants holding at every step.
    """
    history = [M]
    for centre, count in steps:
        for _ in range(count):
            history.append(elementary_transform(history[-1], centre))
    return history


def opposite(centre: str) -> str:
    return _OPPOSITE[centre]


def free_quotient(M: EquivariantRuledModel) -> SurfaceModel:
    if any(M.types()):
        raise QuotientError(f"isolated fixed points remain: types {M.types()}")
    if M.s1_sq % M.n:
        raise QuotientError(f"{M.n} does not divide e = {-M.s1_sq}")
    return hirzebruch(abs(M.s1_sq) // M.n)


def symplectic_test(w: LocalWeights) -> bool:
    """Determinant-one test: weights ``(k, -k)``."""
    if w.d < 2:
        raise ValueError("symplectic test needs order >= 2")
    return (w.w_t + w.w_x) % w.d == 0


def restrict_to_subgroup(w: LocalWeights, d: int) -> LocalWeights:
    """Weights of ``g**(n/d)`` written against a primitive d-th root."""
    if d < 2 or w.d % d:
        raise ValueError(f"{d} is not a divisor >= 2 of {w.d}")
    return LocalWeights(w.w_t, w.w_x, d)


def lift_weights(w: LocalWeights, e_t: int, e_x: int) -> LocalWeights:
    """Weights upstairs of a local covering ``(t, x) -> (t**e_t, x**e_x)``."""
    if gcd(e_t * e_x, w.d) != 1:
        raise ValueError(
            f"local degree {e_t}*{e_x} not prime to {w.d}: lift order changes")
    return LocalWeights(inverse_mod(e_t, w.d).value * w.w_t,
                        inverse_mod(e_x, w.d).value * w.w_x, w.d)
