"""Partitions in multiplicity notation, enumeration, and class predicates.

A :class:`Partition` stores its blocks ``(part, mult)`` with strictly
decreasing parts, so two partitions are equal exactly when they are equal
as multisets.  The predicates at the bottom of the module decide membership
in the four families handled by this package:

* ``A(n, r)``: odd multiplicities are at least ``2r + 1``;
* ``C(n, r)``: odd parts are ``2r + 1`` modulo ``4r + 2``;
* ``B``: multiplicities of the form ``j(pr + a) + i p``;
* ``E``: parts divisible by ``p`` but not ``pm``, or ``-s(pr + a)``
  modulo ``p(pr + a)``.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field, replace
from functools import lru_cache
from math import gcd
from typing import Iterable, Iterator, Mapping

__all__ = [
    "UNBOUNDED",
    "BaseExpansion",
    "DomainError",
    "FamilyParams",
    "Partition",
    "PartitionSyntaxError",
    "base_expansion",
    "enumerate_partitions",
    "normalize",
    "ord_base",
    "parse_partition",
    "satisfies_A",
    "satisfies_B",
    "satisfies_C",
    "satisfies_E",
    "union",
    "weight",
]


class DomainError(ValueError):
    """An input lies outside the domain of a map or predicate.

    ``block`` holds the offending ``(part, mult)`` pair when one exists.
    """

    def __init__(self, message: str, block: tuple[int, int] | None = None):
        super().__init__(message)
        self.block = block


class PartitionSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class _Unbounded:
    """Sentinel for ``m = infinity`` in :class:`FamilyParams`."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNBOUNDED"

    def __str__(self) -> str:
        return "inf"

    def __reduce__(self):
        return (_Unbounded, ())


UNBOUNDED = _Unbounded()


@dataclass(frozen=True)
class Partition:
    """A partition as a tuple of ``(part, mult)`` blocks, parts decreasing."""

    blocks: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        blocks = tuple((int(x), int(c)) for x, c in self.blocks)
        prev = None
        for x, c in blocks:
            if x < 1 or c < 1:
                raise ValueError(f"invalid block {x}^{c}")
            if prev is not None and x >= prev:
                raise ValueError("parts must be strictly decreasing")
            prev = x
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> "Partition":
        """Build from a ``{part: mult}`` mapping; zero counts are dropped."""
        for x, c in counts.items():
            if x < 1 or c < 0:
                raise ValueError(f"invalid block {x}^{c}")
        return cls(tuple(sorted(((x, c) for x, c in counts.items() if c), reverse=True)))

    @property
    def weight(self) -> int:
        return sum(x * c for x, c in self.blocks)

    @property
    def length(self) -> int:
        """Number of parts counted with multiplicity."""
        return sum(c for _, c in self.blocks)

    def parts(self) -> tuple[int, ...]:
        return tuple(x for x, c in self.blocks for _ in range(c))

    def counts(self) -> dict[int, int]:
        return dict(self.blocks)

    def mult(self, part: int) -> int:
        for x, c in self.blocks:
            if x == part:
                return c
        return 0

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.blocks)

    def __bool__(self) -> bool:
        return bool(self.blocks)

    def __str__(self) -> str:
        return render_partition(self)

    def __repr__(self) -> str:
        return f"Partition({render_partition(self)!r})"


EMPTY = Partition()


def normalize(parts: Iterable[int]) -> Partition:
    """Canonical partition of a list of parts in any order."""
    counts: Counter[int] = Counter()
    for x in parts:
        if x <= 0:
            raise ValueError(f"parts must be positive, got {x}")
        counts[x] += 1
    return Partition.from_counts(counts)


def weight(lam: Partition) -> int:
    return lam.weight


def union(lam: Partition, mu: Partition) -> Partition:
    """Multiset union."""
    counts = Counter(dict(lam.blocks))
    counts.update(dict(mu.blocks))
    return Partition.from_counts(counts)


def union_blocks(blocks: Iterable[tuple[int, int]]) -> Partition:
    """Union of an arbitrary stream of blocks; repeated parts are merged."""
    counts: Counter[int] = Counter()
    for x, c in blocks:
        if c:
            counts[x] += c
    return Partition.from_counts(counts)


def _descending(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _descending(n - first, first):
            yield (first,) + rest


def _blocks_of(parts: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    blocks: list[list[int]] = []
    for x in parts:
        if blocks and blocks[-1][0] == x:
            blocks[-1][1] += 1
        else:
            blocks.append([x, 1])
    return tuple((x, c) for x, c in blocks)


@lru_cache(maxsize=128)
def _enumerate(n: int) -> tuple[Partition, ...]:
    return tuple(Partition(_blocks_of(parts)) for parts in _descending(n, n))


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in lexicographically decreasing order.

    ``(4), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)`` for ``n = 4``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    return list(_enumerate(n))


# -- family parameters ------------------------------------------------------


@dataclass(frozen=True)
class FamilyParams:
    """Parameters ``(p, r, a, m, v)`` of the B and E families.

    ``m`` is an integer ``>= 2`` or :data:`UNBOUNDED`; ``v`` defaults to ``p``.
    """

    p: int
    r: int
    a: int
    m: "int | _Unbounded"
    v: int = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if self.v is None:
            object.__setattr__(self, "v", self.p)
        if self.p < 2:
            raise ValueError(f"p must be >= 2, got {self.p}")
        if self.r < 0:
            raise ValueError(f"r must be >= 0, got {self.r}")
        if self.a < 1:
            raise ValueError(f"a must be >= 1, got {self.a}")
        if gcd(self.a, self.p) != 1:
            raise ValueError(f"gcd(a, p) must be 1, got a={self.a}, p={self.p}")
        if self.m is not UNBOUNDED and (isinstance(self.m, bool) or not isinstance(self.m, int) or self.m < 2):
            raise ValueError(f"m must be an integer >= 2 or UNBOUNDED, got {self.m!r}")
        if not 1 <= self.v <= self.p:
            raise ValueError(f"v must satisfy 1 <= v <= p, got v={self.v}, p={self.p}")

    @property
    def base(self) -> int:
        """``pr + a``."""
        return self.p * self.r + self.a

    @property
    def modulus(self) -> int:
        """``p^2 r + p a``."""
        return self.p * self.base

    @property
    def finite(self) -> bool:
        return self.m is not UNBOUNDED

    @property
    def a_inv(self) -> int:
        return pow(self.a, -1, self.p)

    def replace(self, **changes) -> "FamilyParams":
        return replace(self, **changes)

    def as_dict(self) -> dict:
        return {"p": self.p, "r": self.r, "a": self.a,
                "m": self.m if self.finite else "inf", "v": self.v}


# -- predicates --------------------------------------------------------------


def satisfies_A(lam: Partition, r: int) -> bool:
    """Every odd multiplicity is at least ``2r + 1``."""
    if r < 1:
        raise ValueError("r must be >= 1")
    return all(c % 2 == 0 or c >= 2 * r + 1 for _, c in lam.blocks)


def satisfies_C(lam: Partition, r: int) -> bool:
    """Every odd part is ``2r + 1`` modulo ``4r + 2``."""
    if r < 1:
        raise ValueError("r must be >= 1")
    return all(x % 2 == 0 or x % (4 * r + 2) == 2 * r + 1 for x, _ in lam.blocks)


def b_multiplicity_ok(c: int, params: FamilyParams) -> bool:
    """Whether ``c = j(pr + a) + i p`` with ``0 <= j < v`` and ``0 <= i < m``."""
    p = params.p
    j = c * params.a_inv % p
    if j >= params.v:
        return False
    rest = c - j * params.base
    if rest < 0:
        return False
    # rest is a multiple of p because pr + a = a (mod p)
    return not params.finite or rest // p <= params.m - 1


def satisfies_B(lam: Partition, params: FamilyParams) -> bool:
    return all(b_multiplicity_ok(c, params) for _, c in lam.blocks)


def e_part_ok(x: int, params: FamilyParams) -> bool:
    p = params.p
    if x % p == 0:
        return not params.finite or x % (p * params.m) != 0
    # -s(pr + a) mod p(pr + a) for some 1 <= s < p
    return x % params.base == 0 and (x // params.base) % p != 0


def satisfies_E(lam: Partition, params: FamilyParams) -> bool:
    return all(e_part_ok(x, params) for x, _ in lam.blocks)


# -- valuations and digit expansions -----------------------------------------


def ord_base(base: int, j: int) -> int:
    """Largest ``i`` with ``base**i`` dividing ``j``."""
    if base < 2:
        raise ValueError("base must be >= 2")
    if j == 0:
        raise ValueError("ord of 0 is unbounded")
    i = 0
    while j % base == 0:
        j //= base
        i += 1
    return i


@dataclass(frozen=True)
class BaseExpansion:
    """Digits of a non-negative integer, least significant first.

    No trailing zero digit is stored, so ``0`` has no digits at all.
    """

    base: int
    digits: tuple[int, ...]

    def value(self) -> int:
        total = 0
        for d in reversed(self.digits):
            total = total * self.base + d
        return total

    def nonzero(self) -> Iterator[tuple[int, int]]:
        """``(position, digit)`` pairs with a non-zero digit."""
        for pos, d in enumerate(self.digits):
            if d:
                yield pos, d


def base_expansion(omega: int, base: int) -> BaseExpansion:
    if base < 2:
        raise ValueError("base must be >= 2")
    if omega < 0:
        raise ValueError("omega must be non-negative")
    digits = []
    while omega:
        omega, d = divmod(omega, base)
        digits.append(d)
    return BaseExpansion(base, tuple(digits))


# -- text format -------------------------------------------------------------

_TOKEN = re.compile(r"\s*(\d+)\s*(?:\^\s*(\d+)\s*)?")


def parse_partition(text: str) -> Partition:
    """Parse ``"5^2,1^7"`` style text; the empty string is the empty partition."""
    if not text.strip():
        return EMPTY
    counts: Counter[int] = Counter()
    pos = 0
    while True:
        match = _TOKEN.match(text, pos)
        if match is None or match.end() == pos:
            raise PartitionSyntaxError("expected a block 'part' or 'part^mult'", pos)
        part = int(match.group(1))
        mult = int(match.group(2)) if match.group(2) is not None else 1
        if part == 0:
            raise PartitionSyntaxError("zero part", match.start(1))
        if mult == 0:
            raise PartitionSyntaxError("zero multiplicity", match.start(2))
        counts[part] += mult
        pos = match.end()
        if pos == len(text):
            break
        if text[pos] != ",":
            raise PartitionSyntaxError(f"unexpected character {text[pos]!r}", pos)
        pos += 1
    return Partition.from_counts(counts)


def render_partition(lam: Partition) -> str:
    return ",".join(str(x) if c == 1 else f"{x}^{c}" for x, c in lam.blocks)
