"""Picard lattices of the projective plane and of Hirzebruch surfaces.

Classes on the plane are ``d*H``; classes on ``F_e`` are ``a*C0 + b*F`` with
``C0^2 = -e``, ``C0.F = 1`` and ``F^2 = 0``.  Blow-ups are not modelled.
"""

from __future__ import annotations

from dataclasses import dataclass

MAX_E = 64

PLANE = "plane"
HIRZEBRUCH = "hirzebruch"


class LatticeError(ValueError):
    pass


@dataclass(frozen=True)
class SurfaceModel:
    kind: str
    e: int = 0

    def __post_init__(self):
        if self.kind not in (PLANE, HIRZEBRUCH):
            raise LatticeError(f"unknown surface kind {self.kind!r}")
        if self.kind == PLANE and self.e != 0:
            raise LatticeError("the plane carries no invariant e")
        if not 0 <= self.e <= MAX_E:
            raise LatticeError(f"e must lie in [0, {MAX_E}], got {self.e}")

    @property
    def is_plane(self) -> bool:
        return self.kind == PLANE

    @property
    def K_sq(self) -> int:
        return 9 if self.is_plane else 8

    @property
    def chi_top(self) -> int:
        return 3 if self.is_plane else 4

    @property
    def rho(self) -> int:
        return 10 - self.K_sq

    def generators(self) -> list[DivisorClass]:
        """A Z-basis of the Picard lattice."""
        if self.is_plane:
            return [DivisorClass(self, (1,))]
        return [DivisorClass(self, (1, 0)), DivisorClass(self, (0, 1))]

    def __str__(self) -> str:
        return "P2" if self.is_plane else f"F{self.e}"


def plane() -> SurfaceModel:
    return SurfaceModel(PLANE)


def hirzebruch(e: int) -> SurfaceModel:
    return SurfaceModel(HIRZEBRUCH, e)


@dataclass(frozen=True)
class DivisorClass:
    surface: SurfaceModel
    coeffs: tuple[int, ...]

    def __post_init__(self):
        want = 1 if self.surface.is_plane else 2
        if len(self.coeffs) != want:
            raise LatticeError(
                f"{self.surface} classes need {want} coefficients, got {self.coeffs}")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    def _check(self, other: DivisorClass):
        if other.surface != self.surface:
            raise LatticeError(f"classes live on {self.surface} and {other.surface}")

    def __add__(self, other: DivisorClass) -> DivisorClass:
        self._check(other)
        return DivisorClass(self.surface, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        return self + (-1) * other

    def __rmul__(self, k: int) -> DivisorClass:
        return DivisorClass(self.surface, tuple(k * c for c in self.coeffs))

    def __neg__(self) -> DivisorClass:
        return (-1) * self

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __str__(self) -> str:
        if self.surface.is_plane:
            return _term(self.coeffs[0], "H") or "0"
        a, b = self.coeffs
        parts = [t for t in (_term(a, "C0"), _term(b, "F")) if t]
        if not parts:
            return "0"
        out = parts[0]
        for t in parts[1:]:
            out += t if t.startswith("-") else "+" + t
        return out


def _term(k: int, name: str) -> str:
    if k == 0:
        return ""
    if k == 1:
        return name
    if k == -1:
        return "-" + name
    return f"{k}{name}"


def line(d: int = 1) -> DivisorClass:
    return DivisorClass(plane(), (d,))


def ruled_class(e: int, a: int, b: int) -> DivisorClass:
    """``a*C0 + b*F`` on ``F_e``."""
    return DivisorClass(hirzebruch(e), (a, b))


def intersect(D1: DivisorClass, D2: DivisorClass, X: SurfaceModel | None = None) -> int:
    if X is None:
        X = D1.surface
    if D1.surface != X or D2.surface != X:
        raise LatticeError(f"classes do not both live on {X}")
    if X.is_plane:
        return D1.coeffs[0] * D2.coeffs[0]
    a1, b1 = D1.coeffs
    a2, b2 = D2.coeffs
    return -X.e * a1 * a2 + a1 * b2 + a2 * b1


def canonical_class(X: SurfaceModel) -> DivisorClass:
    if X.is_plane:
        return DivisorClass(X, (-3,))
    return DivisorClass(X, (-2, -(X.e + 2)))


def anti_bicanonical(X: SurfaceModel) -> DivisorClass:
    """The class -2K_X of a smooth double-cover branch curve."""
    return -2 * canonical_class(X)


def genus_adjunction(D: DivisorClass, X: SurfaceModel | None = None) -> int:
    X = X or D.surface
    twice = intersect(D, D, X) + intersect(D, canonical_class(X), X)
    if twice % 2:
        raise LatticeError(f"D^2 + D.K is odd for {D}; not a curve class")
    return 1 + twice // 2


def fibre_degree_of_branch(X: SurfaceModel) -> int:
    if X.is_plane:
        raise LatticeError("the plane has no ruling")
    return intersect(anti_bicanonical(X), DivisorClass(X, (0, 1)), X)


def smooth_branch_invariants(e_max: int = MAX_E) -> list[int]:
    """Values of e for which -2K on F_e can carry a smooth member.

    Either C0 is not forced into the branch (-2K . C0 >= 0), or C0 splits
    off and the residual class meets it trivially, which gives the
    disjoint decomposition B = B0 + C0.
    """
    out = []
    for e in range(e_max + 1):
        X = hirzebruch(e)
        B = anti_bicanonical(X)
        C0 = DivisorClass(X, (1, 0))
        if intersect(B, C0) >= 0 or intersect(B - C0, C0) == 0:
            out.append(e)
    return out
