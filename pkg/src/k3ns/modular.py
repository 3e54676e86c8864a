"""Integer and modular arithmetic: totients, residues, inverses."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class Residue:
    """An integer class modulo ``modulus``, always stored reduced."""

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        object.__setattr__(self, "value", self.value % self.modulus)

    def _coerce(self, other) -> int:
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ValueError(
                    f"modulus mismatch: {self.modulus} vs {other.modulus}")
            return other.value
        return int(other)

    def __add__(self, other) -> Residue:
        return Residue(self.value + self._coerce(other), self.modulus)

    __radd__ = __add__

    def __sub__(self, other) -> Residue:
        return Residue(self.value - self._coerce(other), self.modulus)

    def __mul__(self, other) -> Residue:
        return Residue(self.value * self._coerce(other), self.modulus)

    __rmul__ = __mul__

    def __neg__(self) -> Residue:
        return Residue(-self.value, self.modulus)

    def __int__(self) -> int:
        return self.value

    def is_zero(self) -> bool:
        return self.value == 0

    def __str__(self) -> str:
        return f"{self.value} mod {self.modulus}"


@dataclass(frozen=True)
class OrderCandidate:
    m: int
    phi: int


def euler_phi(m: int) -> int:
    """Euler totient by trial division."""
    if m < 1:
        raise ValueError(f"euler_phi needs m >= 1, got {m}")
    result = m
    rest = m
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            while rest % p == 0:
                rest //= p
            result -= result // p
        p += 1
    if rest > 1:
        result -= result // rest
    return result


def inverse_mod(k: int, n: int) -> Residue:
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    if gcd(k, n) != 1:
        raise ValueError(f"no inverse: gcd({k}, {n}) = {gcd(k, n)}")
    if n == 1:
        return Residue(0, 1)
    return Residue(pow(k, -1, n), n)


def admissible_orders(phi_max: int) -> list[OrderCandidate]:
    """All m with phi(m) <= phi_max, ascending.

    phi(m) >= sqrt(m/2) for every m, so nothing past 2*phi_max**2 can
    qualify; the scan runs to 4*phi_max**2 for margin.
    """
    if phi_max < 1:
        raise ValueError(f"phi_max must be >= 1, got {phi_max}")
    out = []
    for m in range(1, 4 * phi_max * phi_max + 1):
        phi = euler_phi(m)
        if phi <= phi_max:
            out.append(OrderCandidate(m, phi))
    return out


def prime_divisors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def element_order(g: int, m: int) -> int:
    """Additive order of g in Z/m."""
    return m // gcd(g % m, m)
