"""Explicit weight-preserving bijections between partition classes.

``beta_forward`` / ``beta_inverse``
    ``A(n, r) <-> C(n, r)`` (MacMahon for ``r = 1``, Andrews in general).
``gamma_forward`` / ``gamma_inverse``
    ``E_{p,r,a,m}(n) <-> B_{p,r,a,m}(n)`` for finite ``m``.
``sellers_fu_forward`` / ``sellers_fu_inverse``
    ``B_{p,r,a,inf}(n) <-> E_{p,r,a,inf}(n)``, built on Glaisher's map.

Every map checks its domain first and raises :class:`DomainError` naming the
offending block instead of returning a meaningless image.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator

from .partition import (
    DomainError,
    FamilyParams,
    Partition,
    b_multiplicity_ok,
    base_expansion,
    e_part_ok,
    enumerate_partitions,
    ord_base,
    satisfies_A,
    satisfies_B,
    satisfies_C,
    satisfies_E,
    union_blocks,
)

__all__ = [
    "BijectionReport",
    "beta_forward",
    "beta_inverse",
    "beta_one",
    "gamma_forward",
    "gamma_inverse",
    "glaisher_distinctify",
    "glaisher_regularize",
    "sellers_fu_forward",
    "sellers_fu_inverse",
    "verify_bijection",
]


def _check_r(r: int) -> None:
    if r < 1:
        raise DomainError(f"beta needs r >= 1, got r={r}")


# -- beta_r ------------------------------------------------------------------


def _beta_block(x: int, c: int, r: int) -> Iterator[tuple[int, int]]:
    R = 2 * r + 1
    rem = c % R
    # odd residue 2v+1 takes R + rem copies; even residue 2v takes rem copies
    take = rem if rem % 2 == 0 else rem + R
    keep = c - take
    if keep < 0:
        raise DomainError(f"block {x}^{c} has odd multiplicity below {R}", (x, c))
    if x % 2 == 0:
        yield x, keep
    else:
        yield R * x, keep // R
    yield 2 * x, take // 2


def beta_forward(lam: Partition, r: int) -> Partition:
    """Map ``A(n, r) -> C(n, r)``.

    >>> str(beta_forward(parse_partition("5^2,1^7"), 3))
    '10,7'
    """
    _check_r(r)
    for x, c in lam.blocks:
        if c % 2 == 1 and c < 2 * r + 1:
            raise DomainError(f"{lam} is not in A(n, {r}): block {x}^{c}", (x, c))
    return union_blocks(b for x, c in lam.blocks for b in _beta_block(x, c, r))


def beta_one(lam: Partition) -> Partition:
    """The ``r = 1`` map written out case by case on ``mult mod 3``."""
    out: list[tuple[int, int]] = []
    for x, c in lam.blocks:
        if c % 2 == 1 and c < 3:
            raise DomainError(f"{lam} is not in A(n, 1): block {x}^{c}", (x, c))
        rem = c % 3
        if x % 2 == 0:
            if rem == 1:
                out += [(x, c - 4), (2 * x, 2)]
            elif rem == 0:
                out += [(x, c)]
            else:
                out += [(x, c - 2), (2 * x, 1)]
        else:
            if rem == 1:
                out += [(3 * x, (c - 4) // 3), (2 * x, 2)]
            elif rem == 0:
                out += [(3 * x, c // 3)]
            else:
                out += [(3 * x, (c - 2) // 3), (2 * x, 1)]
    return union_blocks(out)


def beta_inverse(mu: Partition, r: int) -> Partition:
    """Map ``C(n, r) -> A(n, r)``, the two-sided inverse of :func:`beta_forward`."""
    _check_r(r)
    R = 2 * r + 1
    out: list[tuple[int, int]] = []
    for x, c in mu.blocks:
        if x % 2 == 1:
            if x % (2 * R) != R:
                raise DomainError(f"{mu} is not in C(n, {r}): part {x}", (x, c))
            out.append((x // R, R * c))
        else:
            q = c // R
            out.append((x, R * q))
            out.append((x // 2, 2 * (c - R * q)))
    return union_blocks(out)


# -- gamma -------------------------------------------------------------------


def _check_finite(params: FamilyParams, what: str) -> None:
    if not params.finite:
        raise DomainError(f"{what} needs finite m; use the sellers_fu maps for m = inf")
    if params.v != params.p:
        raise DomainError(f"{what} is defined for v = p only, got v={params.v}")


def gamma_forward(mu: Partition, params: FamilyParams) -> Partition:
    """Map ``E_{p,r,a,m}(n) -> B_{p,r,a,m}(n)``.

    Parts divisible by ``p`` split along the base-``m`` digits of their
    multiplicity; parts ``(pr + a) u`` with ``p`` not dividing ``u`` split
    along the base-``p`` digits.
    """
    _check_finite(params, "gamma")
    p, m, base = params.p, params.m, params.base
    out: list[tuple[int, int]] = []
    for x, w in mu.blocks:
        if not e_part_ok(x, params):
            raise DomainError(f"{mu} is not in E: part {x}", (x, w))
        if x % p == 0:
            u = x // p
            for pos, d in base_expansion(w, m).nonzero():
                out.append((m**pos * u, d * p))
        else:
            u = x // base
            for pos, d in base_expansion(w, p).nonzero():
                out.append((p**pos * u, d * base))
    return union_blocks(out)


def gamma_inverse(lam: Partition, params: FamilyParams) -> Partition:
    """Map ``B_{p,r,a,m}(n) -> E_{p,r,a,m}(n)``, the inverse of :func:`gamma_forward`."""
    _check_finite(params, "gamma")
    p, m, base = params.p, params.m, params.base
    out: list[tuple[int, int]] = []
    for x, c in lam.blocks:
        if not b_multiplicity_ok(c, params):
            raise DomainError(f"{lam} is not in B: block {x}^{c}", (x, c))
        j = c * params.a_inv % p
        if j:
            if x % p:
                out.append((base * x, j))
            else:
                t = ord_base(p, x)
                out.append((base * x // p**t, j * p**t))
            c -= j * base
        if c:
            e = ord_base(m, x)
            out.append((p * x // m**e, (c // p) * m**e))
    return union_blocks(out)


# -- Glaisher ----------------------------------------------------------------


def glaisher_regularize(delta: Partition, p: int) -> Partition:
    """Parts appearing fewer than ``p`` times -> parts not divisible by ``p``."""
    if p < 2:
        raise ValueError("p must be >= 2")
    out: list[tuple[int, int]] = []
    for x, d in delta.blocks:
        if d >= p:
            raise DomainError(f"multiplicity {d} of part {x} is not below {p}", (x, d))
        t = ord_base(p, x)
        out.append((x // p**t, d * p**t))
    return union_blocks(out)


def glaisher_distinctify(delta: Partition, p: int) -> Partition:
    """Parts not divisible by ``p`` -> parts appearing fewer than ``p`` times."""
    if p < 2:
        raise ValueError("p must be >= 2")
    out: list[tuple[int, int]] = []
    for u, c in delta.blocks:
        if u % p == 0:
            raise DomainError(f"part {u} is divisible by {p}", (u, c))
        for pos, d in base_expansion(c, p).nonzero():
            out.append((p**pos * u, d))
    return union_blocks(out)


# -- m = infinity --------------------------------------------------------------


def _check_infinite(params: FamilyParams) -> None:
    if params.finite:
        raise DomainError("the sellers_fu maps need m = inf")
    if params.v != params.p:
        raise DomainError(f"the sellers_fu maps are defined for v = p only, got v={params.v}")


def sellers_fu_forward(lam: Partition, params: FamilyParams) -> Partition:
    """Map ``B_{p,r,a,inf}(n) -> E_{p,r,a,inf}(n)``."""
    _check_infinite(params)
    p, base = params.p, params.base
    out: list[tuple[int, int]] = []
    split: dict[int, int] = {}
    for x, c in lam.blocks:
        if not b_multiplicity_ok(c, params):
            raise DomainError(f"{lam} is not in B_inf: block {x}^{c}", (x, c))
        j = c * params.a_inv % p
        if j:
            split[x] = j
        out.append((p * x, (c - j * base) // p))
    for u, d in glaisher_regularize(Partition.from_counts(split), p).blocks:
        out.append((base * u, d))
    return union_blocks(out)


def sellers_fu_inverse(mu: Partition, params: FamilyParams) -> Partition:
    """Map ``E_{p,r,a,inf}(n) -> B_{p,r,a,inf}(n)``."""
    _check_infinite(params)
    p, base = params.p, params.base
    out: list[tuple[int, int]] = []
    scaled: dict[int, int] = {}
    for x, w in mu.blocks:
        if not e_part_ok(x, params):
            raise DomainError(f"{mu} is not in E_inf: part {x}", (x, w))
        if x % p == 0:
            out.append((x // p, p * w))
        else:
            scaled[x // base] = w
    for y, d in glaisher_distinctify(Partition.from_counts(scaled), p).blocks:
        out.append((y, d * base))
    return union_blocks(out)


# -- exhaustive verification ------------------------------------------------------


@dataclass
class BijectionReport:
    """Outcome of an exhaustive check of one map on ``0 <= n <= n_max``.

    ``violations`` holds ``(partition text, failure kind)`` pairs with kind in
    ``weight-changed``, ``image-not-in-codomain``, ``round-trip-failed``,
    ``collision``, ``count-mismatch`` or ``map-error``.
    """

    kind: str
    params: dict
    n_range: tuple[int, int]
    checked: int = 0
    violations: list[tuple[str, str]] = field(default_factory=list)
    counts: dict[int, tuple[int, int]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations


def _bijection_kind(kind: str, params):
    if kind == "beta":
        r = params if isinstance(params, int) else params["r"]
        _check_r(r)
        return ({"r": r},
                lambda lam: satisfies_A(lam, r), lambda lam: satisfies_C(lam, r),
                lambda lam: beta_forward(lam, r), lambda mu: beta_inverse(mu, r))
    if kind == "gamma":
        _check_finite(params, "gamma")
        return (params.as_dict(),
                lambda lam: satisfies_E(lam, params), lambda lam: satisfies_B(lam, params),
                lambda lam: gamma_forward(lam, params), lambda mu: gamma_inverse(mu, params))
    if kind == "sellers_fu":
        _check_infinite(params)
        return (params.as_dict(),
                lambda lam: satisfies_B(lam, params), lambda lam: satisfies_E(lam, params),
                lambda lam: sellers_fu_forward(lam, params), lambda mu: sellers_fu_inverse(mu, params))
    raise ValueError(f"unknown bijection kind {kind!r}")


def _apply(f: Callable[[Partition], Partition], lam: Partition):
    try:
        return f(lam)
    except DomainError:
        return None


def verify_bijection(kind: str, params, n_max: int) -> BijectionReport:
    """Exhaustively check that the named map is a weight-preserving bijection.

    ``params`` is the integer ``r`` for ``beta`` and a :class:`FamilyParams`
    for ``gamma`` (finite ``m``) and ``sellers_fu`` (``m = UNBOUNDED``).
    """
    info, in_dom, in_cod, fwd, inv = _bijection_kind(kind, params)
    report = BijectionReport(kind, info, (0, n_max))
    bad = report.violations
    for n in range(n_max + 1):
        everything = enumerate_partitions(n)
        domain = [lam for lam in everything if in_dom(lam)]
        codomain = [mu for mu in everything if in_cod(mu)]
        report.counts[n] = (len(domain), len(codomain))
        seen: dict[Partition, Partition] = {}
        for lam in domain:
            report.checked += 1
            image = _apply(fwd, lam)
            if image is None:
                bad.append((str(lam), "map-error"))
                continue
            if image.weight != n:
                bad.append((str(lam), "weight-changed"))
            if not in_cod(image):
                bad.append((str(lam), "image-not-in-codomain"))
            if image in seen:
                bad.append((str(lam), "collision"))
            seen[image] = lam
            if _apply(inv, image) != lam:
                bad.append((str(lam), "round-trip-failed"))
        for mu in codomain:
            back = _apply(inv, mu)
            if back is None or _apply(fwd, back) != mu:
                bad.append((str(mu), "round-trip-failed"))
        if len(domain) != len(codomain):
            bad.append((f"n={n}", "count-mismatch"))
    return report
