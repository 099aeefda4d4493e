"""Theorem-level checks, each returning a :class:`VerificationReport`.

Every check compares at least two independent routes: brute-force
enumeration against a product expansion, or a map against its inverse.
"""
from __future__ import annotations

import functools
import time
from typing import Callable

from .bijections import BijectionReport, beta_forward, beta_one, verify_bijection
from .congruence import scan_congruence
from .partition import (
    FamilyParams,
    Partition,
    UNBOUNDED,
    enumerate_partitions,
    satisfies_A,
    satisfies_B,
    satisfies_E,
)
from .qseries import gf_b, gf_b_infinite, gf_e, gf_e_infinite, verify_recurrence
from .reports import VerificationReport

__all__ = [
    "THEOREMS",
    "in_subbarao_C",
    "in_subbarao_D",
    "run_scan",
    "verify_andrews",
    "verify_corollary",
    "verify_mac",
    "verify_recurrence_report",
    "verify_subbarao",
    "verify_thm1",
]


def _timed(fn: Callable[..., VerificationReport]):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs) -> VerificationReport:
        start = time.perf_counter()
        report = fn(*args, **kwargs)
        report.elapsed_ms = round((time.perf_counter() - start) * 1000.0, 3)
        return report

    return wrapper


def _absorb(report: VerificationReport, bij: BijectionReport) -> None:
    report.checked += bij.checked
    for text, kind in bij.violations:
        report.violations.append({"map": bij.kind, "partition": text, "kind": kind})


def _count(n: int, pred: Callable[[Partition], bool]) -> int:
    return sum(1 for lam in enumerate_partitions(n) if pred(lam))


def _beta_report(kind: str, r: int, n_max: int) -> VerificationReport:
    bij = verify_bijection("beta", r, n_max)
    report = VerificationReport(kind, {"r": r}, (0, n_max))
    _absorb(report, bij)
    report.extra["counts"] = {str(n): list(c) for n, c in bij.counts.items()}
    return report


@_timed
def verify_andrews(r: int, n_max: int) -> VerificationReport:
    """``|A(n, r)| = |C(n, r)|`` with ``beta_r`` as the witnessing bijection."""
    return _beta_report("andrews", r, n_max)


@_timed
def verify_mac(n_max: int) -> VerificationReport:
    """``r = 1``: the general map agrees with the case table for ``beta_1``."""
    report = _beta_report("mac", 1, n_max)
    for n in range(n_max + 1):
        for lam in enumerate_partitions(n):
            if satisfies_A(lam, 1):
                report.checked += 1
                if beta_one(lam) != beta_forward(lam, 1):
                    report.violations.append(
                        {"map": "beta_1", "partition": str(lam), "kind": "case-table-mismatch"})
    return report


@_timed
def verify_thm1(params: FamilyParams, n_max: int) -> VerificationReport:
    """``|B_{p,r,a,m}(n)| = |E_{p,r,a,m}(n)|`` by enumeration, by both products,
    and by the bijection ``gamma``."""
    if params.v != params.p:
        params = params.replace(v=params.p)
    report = VerificationReport("thm1", params.as_dict(), (0, n_max))
    gb, ge = gf_b(params, n_max), gf_e(params, n_max)
    counts = {}
    for n in range(n_max + 1):
        nb = _count(n, lambda lam: satisfies_B(lam, params))
        ne = _count(n, lambda lam: satisfies_E(lam, params))
        counts[str(n)] = [nb, ne]
        if not nb == ne == gb[n] == ge[n]:
            report.violations.append({"n": n, "kind": "count-mismatch", "B": nb, "E": ne,
                                      "gf_b": gb[n], "gf_e": ge[n]})
    _absorb(report, verify_bijection("gamma", params, n_max))
    report.extra["counts"] = counts
    return report


def in_subbarao_C(lam: Partition, m: int, r: int) -> bool:
    """Even multiplicities below ``2m``; odd ones in ``[2r + 1, 2(m + r) - 1]``."""
    return all(c < 2 * m if c % 2 == 0 else 2 * r + 1 <= c <= 2 * (m + r) - 1
               for _, c in lam.blocks)


def in_subbarao_D(lam: Partition, m: int, r: int) -> bool:
    """Odd parts ``2r + 1`` mod ``4r + 2``; even parts not ``0`` mod ``2m``."""
    return all(x % (2 * m) != 0 if x % 2 == 0 else x % (4 * r + 2) == 2 * r + 1
               for x, _ in lam.blocks)


@_timed
def verify_subbarao(m: int, r: int, n_max: int) -> VerificationReport:
    """``C_{m,r}(n) = D_{m,r}(n)``, and both classes coincide with ``B``/``E`` at ``p=2, a=1``."""
    params = FamilyParams(2, r, 1, m)
    report = VerificationReport("subbarao", {"m": m, "r": r}, (0, n_max))
    counts = {}
    for n in range(n_max + 1):
        nc = nd = 0
        for lam in enumerate_partitions(n):
            report.checked += 1
            in_c, in_d = in_subbarao_C(lam, m, r), in_subbarao_D(lam, m, r)
            nc += in_c
            nd += in_d
            if in_c != satisfies_B(lam, params) or in_d != satisfies_E(lam, params):
                report.violations.append({"n": n, "partition": str(lam), "kind": "class-mismatch"})
        counts[str(n)] = [nc, nd]
        if nc != nd:
            report.violations.append({"n": n, "kind": "count-mismatch", "C": nc, "D": nd})
    report.extra["counts"] = counts
    return report


@_timed
def verify_corollary(params: FamilyParams, n_max: int) -> VerificationReport:
    """``b_{p,r,a,inf}(n) = e_{p,r,a,inf}(n)`` with the Sellers-Fu map as witness."""
    params = params.replace(m=UNBOUNDED, v=params.p)
    report = VerificationReport("corollary", params.as_dict(), (0, n_max))
    gb, ge = gf_b_infinite(params, n_max), gf_e_infinite(params, n_max)
    counts = {}
    for n in range(n_max + 1):
        nb = _count(n, lambda lam: satisfies_B(lam, params))
        ne = _count(n, lambda lam: satisfies_E(lam, params))
        counts[str(n)] = [nb, ne]
        if not nb == ne == gb[n] == ge[n]:
            report.violations.append({"n": n, "kind": "count-mismatch", "B": nb, "E": ne,
                                      "gf_b": gb[n], "gf_e": ge[n]})
    _absorb(report, verify_bijection("sellers_fu", params, n_max))
    report.extra["counts"] = counts
    return report


@_timed
def verify_recurrence_report(params: FamilyParams, N: int, v: int | None = None) -> VerificationReport:
    rec = verify_recurrence(params, N, v)
    report = VerificationReport("recurrence", rec.params, (0, N), checked=len(rec.tested))
    report.violations = [{"n": n, "kind": "recurrence-failed", "lhs": lhs, "rhs": rhs}
                         for n, lhs, rhs in rec.violations]
    report.extra["gcd"] = rec.g
    report.extra["vacuous"] = rec.vacuous
    return report


@_timed
def run_scan(family: str, p: int, r: int, a: int, m: int, N: int) -> VerificationReport:
    scan = scan_congruence(family, p, r, a, m, N)
    report = VerificationReport(family, scan.params() | {"m": m}, (0, N), checked=scan.checked)
    report.violations = [{"index": i, "kind": "odd-coefficient", "parity": par}
                         for i, par in scan.violations]
    return report


THEOREMS = ("mac", "andrews", "thm1", "subbarao", "corollary", "recurrence")
