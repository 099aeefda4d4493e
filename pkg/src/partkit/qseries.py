"""Exact truncated power series in ``q`` and the product generating functions.

All products are expressed as lists of ``(k, e)`` factors standing for
``(1 - q^k)^e`` and expanded by :mod:`partkit.kernel`.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable

from . import kernel
from .partition import FamilyParams

__all__ = [
    "RecurrenceReport",
    "TruncatedSeries",
    "b_factors",
    "div_one_minus_qk",
    "e_factors",
    "gf_b",
    "gf_b_infinite",
    "gf_e",
    "gf_e_infinite",
    "mul_one_minus_qk",
    "partition_numbers",
    "pentagonal_expansion",
    "product_series",
    "scaled_pentagonals",
    "series_one",
    "verify_recurrence",
]


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients ``c_0 .. c_N`` of a power series known modulo ``q^(N+1)``."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a truncated series needs at least c_0")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @property
    def N(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, N: int) -> "TruncatedSeries":
        if N > self.N:
            raise ValueError(f"cannot extend a series known to order {self.N} to {N}")
        return TruncatedSeries(self.coeffs[: N + 1])

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        N = min(self.N, other.N)
        return TruncatedSeries(tuple(x + y for x, y in zip(self.coeffs[: N + 1], other.coeffs)))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        N = min(self.N, other.N)
        return TruncatedSeries(tuple(x - y for x, y in zip(self.coeffs[: N + 1], other.coeffs)))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        N = min(self.N, other.N)
        a, b = self.coeffs, other.coeffs
        out = [0] * (N + 1)
        for i in range(N + 1):
            if a[i]:
                ai = a[i]
                for j in range(N + 1 - i):
                    out[i + j] += ai * b[j]
        return TruncatedSeries(tuple(out))

    def apply(self, factors: Iterable[tuple[int, int]]) -> "TruncatedSeries":
        """Multiply by ``prod (1 - q^k)^e``."""
        return TruncatedSeries(tuple(kernel.apply_factors(self.coeffs, list(factors))))

    def to_json(self) -> str:
        """JSON array of decimal strings, which keeps large coefficients exact."""
        return json.dumps([str(c) for c in self.coeffs])

    @classmethod
    def from_json(cls, text: str) -> "TruncatedSeries":
        return cls(tuple(int(c) for c in json.loads(text)))


def series_one(N: int) -> TruncatedSeries:
    if N < 0:
        raise ValueError("N must be non-negative")
    return TruncatedSeries((1,) + (0,) * N)


def mul_one_minus_qk(s: TruncatedSeries, k: int) -> TruncatedSeries:
    return s.apply([(k, 1)])


def div_one_minus_qk(s: TruncatedSeries, k: int) -> TruncatedSeries:
    return s.apply([(k, -1)])


def _collect(factors: Iterable[tuple[int, int]], N: int) -> list[tuple[int, int]]:
    # merge repeated k and drop what cannot reach q^N
    net: Counter[int] = Counter()
    for k, e in factors:
        if k <= N:
            net[k] += e
    return sorted((k, e) for k, e in net.items() if e)


def product_series(factors: Iterable[tuple[int, int]], N: int) -> TruncatedSeries:
    return series_one(N).apply(_collect(factors, N))


def _multiples(step: int, N: int) -> range:
    return range(step, N + 1, step)


def b_factors(params: FamilyParams, N: int, v: int | None = None) -> list[tuple[int, int]]:
    """Factors of ``prod (1-q^{v(pr+a)n})(1-q^{pmn}) / ((1-q^{(pr+a)n})(1-q^{pn}))``."""
    v = params.v if v is None else v
    if v < 1:
        raise ValueError("v must be >= 1")
    p, base = params.p, params.base
    out = [(k, 1) for k in _multiples(v * base, N)]
    if params.finite:
        out += [(k, 1) for k in _multiples(p * params.m, N)]
    out += [(k, -1) for k in _multiples(base, N)]
    out += [(k, -1) for k in _multiples(p, N)]
    return out


def e_factors(params: FamilyParams, N: int) -> list[tuple[int, int]]:
    """Factors of ``prod_s prod_n 1/(1 - q^{p(pr+a)n - s(pr+a)})`` times the
    ``1/(1 - q^j)`` with ``p | j`` and, for finite ``m``, ``pm`` not dividing ``j``."""
    p, base, mod = params.p, params.base, params.modulus
    out = []
    for s in range(1, p):
        out += [(k, -1) for k in range(mod - s * base, N + 1, mod)]
    for j in _multiples(p, N):
        if not params.finite or j % (p * params.m):
            out.append((j, -1))
    return out


def _require_finite(params: FamilyParams, name: str) -> None:
    if not params.finite:
        raise ValueError(f"{name} needs finite m; use {name}_infinite")


def gf_b(params: FamilyParams, N: int, v: int | None = None) -> TruncatedSeries:
    """Generating function of ``b_{v,r,a,m}(n)`` to order ``N``.

    ``v`` overrides ``params.v`` and may exceed ``p``; the product is valid
    for every ``v >= 1`` even though the set ``B`` is defined for ``v <= p``.
    """
    _require_finite(params, "gf_b")
    return product_series(b_factors(params, N, v), N)


def gf_e(params: FamilyParams, N: int) -> TruncatedSeries:
    _require_finite(params, "gf_e")
    return product_series(e_factors(params, N), N)


def gf_b_infinite(params: FamilyParams, N: int) -> TruncatedSeries:
    if params.finite:
        raise ValueError("gf_b_infinite needs m = UNBOUNDED")
    return product_series(b_factors(params, N), N)


def gf_e_infinite(params: FamilyParams, N: int) -> TruncatedSeries:
    if params.finite:
        raise ValueError("gf_e_infinite needs m = UNBOUNDED")
    return product_series(e_factors(params, N), N)


def partition_numbers(N: int) -> TruncatedSeries:
    """``p(0) .. p(N)`` from ``prod 1/(1 - q^j)``."""
    return product_series(((k, -1) for k in range(1, N + 1)), N)


def _generalized_pentagonals(N: int):
    j = 1
    while j * (3 * j - 1) // 2 <= N:
        sign = -1 if j % 2 else 1
        yield j * (3 * j - 1) // 2, sign
        if j * (3 * j + 1) // 2 <= N:
            yield j * (3 * j + 1) // 2, sign
        j += 1


def pentagonal_expansion(N: int) -> TruncatedSeries:
    """``prod (1 - q^j)`` to order ``N``, written down from the pentagonal numbers."""
    if N < 0:
        raise ValueError("N must be non-negative")
    c = [0] * (N + 1)
    c[0] = 1
    for w, sign in _generalized_pentagonals(N):
        c[w] = sign
    return TruncatedSeries(tuple(c))


def scaled_pentagonals(scale: int, N: int) -> list[tuple[int, int]]:
    """``(scale * j(3j -+ 1)/2, (-1)^(j+1))`` for ``j >= 1``, ascending, values ``<= N``."""
    if scale < 1:
        raise ValueError("scale must be >= 1")
    out = []
    j = 1
    while scale * j * (3 * j - 1) // 2 <= N:
        sign = 1 if j % 2 else -1
        out.append((scale * j * (3 * j - 1) // 2, sign))
        if scale * j * (3 * j + 1) // 2 <= N:
            out.append((scale * j * (3 * j + 1) // 2, sign))
        j += 1
    return out


@dataclass
class RecurrenceReport:
    params: dict
    N: int
    g: int
    tested: list[int] = field(default_factory=list)
    violations: list[tuple[int, int, int]] = field(default_factory=list)

    @property
    def vacuous(self) -> bool:
        return not self.tested

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_recurrence(params: FamilyParams, N: int, v: int | None = None) -> RecurrenceReport:
    """Check ``b(n) = sum (-1)^(j+1) b(n - w(j))`` for every ``n <= N`` with
    ``gcd(v, p)`` not dividing ``n``; ``w`` runs over ``(pr + a)`` times the
    generalized pentagonal numbers."""
    v = params.v if v is None else v
    b = gf_b(params, N, v)
    g = gcd(v, params.p)
    info = params.as_dict() | {"v": v}
    report = RecurrenceReport(info, N, g)
    for n in range(1, N + 1):
        if n % g == 0:
            continue
        report.tested.append(n)
        rhs = sum(sign * b[n - w] for w, sign in scaled_pentagonals(params.base, n))
        if rhs != b[n]:
            report.violations.append((n, b[n], rhs))
    return report
