"""Quadratic residues and the mod-2 congruences of ``b_{2,r,a,m}`` and ``b_{4,r,a,m}``.

For a prime ``p >= 5`` the coefficient ``b_{v,r,a,m}(pn + t)`` is even
whenever ``c t a^{-1} + 1`` is a quadratic nonresidue modulo ``p``, with
``(v, c) = (2, 24)`` for family ``thm3`` and ``(4, 8)`` for ``thm4``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .partition import FamilyParams
from .qseries import gf_b

__all__ = [
    "CongruenceReport",
    "FAMILIES",
    "eligible_residues",
    "is_prime",
    "legendre",
    "mod_inverse",
    "scan_congruence",
]

# family -> (v, multiplier of t a^{-1})
FAMILIES = {"thm3": (2, 24), "thm4": (4, 8)}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def mod_inverse(a: int, p: int) -> int:
    if gcd(a, p) != 1:
        raise ValueError(f"{a} has no inverse modulo {p}")
    return pow(a, -1, p)


def legendre(x: int, p: int) -> int:
    """Legendre symbol by Euler's criterion."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"legendre needs an odd prime, got {p}")
    x %= p
    if x == 0:
        return 0
    return 1 if pow(x, (p - 1) // 2, p) == 1 else -1


def _check_family(family: str, p: int, a: int) -> tuple[int, int]:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {sorted(FAMILIES)}")
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if p < 5:
        raise ValueError(f"{family} needs a prime p >= 5, got {p}")
    if gcd(a, p) != 1:
        raise ValueError(f"gcd(a, p) must be 1, got a={a}, p={p}")
    return FAMILIES[family]


def eligible_residues(family: str, p: int, a: int) -> set[int]:
    """Residues ``t`` in ``[0, p)`` with ``c t a^{-1} + 1`` a nonresidue.

    ``t`` with ``c t a^{-1} + 1 = 0 (mod p)`` is excluded since 0 is a square.
    """
    _, c = _check_family(family, p, a)
    a_inv = mod_inverse(a, p)
    return {t for t in range(p) if legendre(c * t * a_inv + 1, p) == -1}


@dataclass
class CongruenceReport:
    family: str
    p: int
    r: int
    a: int
    m: int
    N: int
    eligible_t: set[int] = field(default_factory=set)
    checked: int = 0
    violations: list[tuple[int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def params(self) -> dict:
        return {"family": self.family, "p": self.p, "r": self.r, "a": self.a,
                "m": self.m, "v": FAMILIES[self.family][0],
                "eligible_t": sorted(self.eligible_t)}


def scan_congruence(family: str, p: int, r: int, a: int, m: int, N: int) -> CongruenceReport:
    """Check the parity claim for every index ``pn + t <= N`` with eligible ``t``.

    Violations are ``(index, coefficient mod 2)`` pairs.
    """
    v, _ = _check_family(family, p, a)
    eligible = eligible_residues(family, p, a)
    report = CongruenceReport(family, p, r, a, m, N, eligible)
    series = gf_b(FamilyParams(p, r, a, m, v=v), N)
    for index in range(N + 1):
        if index % p in eligible:
            report.checked += 1
            if series[index] % 2:
                report.violations.append((index, 1))
    return report
