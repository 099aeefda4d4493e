import random

import pytest
from hypothesis import given, settings, strategies as st

from partkit.bijections import (
    beta_forward,
    beta_inverse,
    beta_one,
    gamma_forward,
    gamma_inverse,
    glaisher_distinctify,
    glaisher_regularize,
    sellers_fu_forward,
    sellers_fu_inverse,
    verify_bijection,
)
from partkit.partition import (
    UNBOUNDED,
    DomainError,
    FamilyParams,
    Partition,
    base_expansion,
    enumerate_partitions,
    parse_partition as P,
    satisfies_A,
    union,
)

BETA3_N17 = [
    ("5^2,1^7", "10,7"),
    ("4^2,1^9", "8,7,2"),
    ("3^2,2^2,1^7", "7,6,4"),
    ("3^2,1^11", "7,6,2^2"),
    ("2^4,1^9", "7,4^2,2"),
    ("2^2,1^13", "7,4,2^3"),
    ("1^17", "7,2^5"),
]

FP = FamilyParams(2, 1, 1, 2)
FP_INF = FamilyParams(2, 1, 1, UNBOUNDED)

GAMMA_GRID = [FamilyParams(p, r, a, m)
              for p, a_vals in ((2, (1,)), (3, (1, 2)))
              for a in a_vals for r in (0, 1, 2) for m in (2, 3)]
INF_GRID = [FamilyParams(p, r, a, UNBOUNDED)
            for p, a_vals in ((2, (1,)), (3, (1, 2)))
            for a in a_vals for r in (0, 1, 2)]


@pytest.mark.parametrize("src, dst", BETA3_N17)
def test_beta_r3_n17_pairs(src, dst):
    assert beta_forward(P(src), 3) == P(dst)
    assert beta_inverse(P(dst), 3) == P(src)


def test_beta_empty_and_errors():
    assert beta_forward(Partition(), 1) == Partition()
    assert beta_inverse(Partition(), 1) == Partition()
    with pytest.raises(DomainError) as info:
        beta_forward(P("3,1^2"), 1)
    assert info.value.block == (3, 1)
    with pytest.raises(DomainError):
        beta_inverse(P("5"), 1)
    with pytest.raises(DomainError):
        beta_forward(P("2"), 0)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_beta_bijection_to_30(r):
    report = verify_bijection("beta", r, 30)
    assert report.ok, report.violations[:5]
    assert all(a == c for a, c in report.counts.values())


def test_beta_report_edges():
    report = verify_bijection("beta", 1, 0)
    assert report.checked == 1 and report.ok
    assert verify_bijection("beta", 3, 17).counts[17] == (7, 7)


def test_beta_general_reproduces_beta_one():
    for n in range(21):
        for lam in enumerate_partitions(n):
            if satisfies_A(lam, 1):
                assert beta_one(lam) == beta_forward(lam, 1)


def test_gamma_examples():
    assert gamma_forward(P("6"), FP) == P("3^2")
    assert gamma_forward(P("3^2"), FP) == P("2^3")
    assert gamma_forward(P("2^3"), FP) == P("2^2,1^2")
    assert gamma_inverse(P("3^2"), FP) == P("6")
    assert gamma_inverse(P("2^3"), FP) == P("3^2")
    assert gamma_inverse(P("2^2,1^2"), FP) == P("2^3")


def _gamma_literal_case_split(mu, params):
    """gamma with Case 2 triggered by (pr + a) | part, as literally stated."""
    p, m, base = params.p, params.m, params.base
    out = Partition()
    for x, w in mu.blocks:
        if x % base:
            blocks = [(m**k * (x // p), d * p) for k, d in base_expansion(w, m).nonzero()]
        else:
            blocks = [(p**k * (x // base), d * base) for k, d in base_expansion(w, p).nonzero()]
        out = union(out, Partition.from_counts(dict(blocks)))
    return out


def test_literal_case_split_collides_and_corrected_does_not():
    assert _gamma_literal_case_split(P("6"), FP) == _gamma_literal_case_split(P("3^2"), FP) == P("2^3")
    assert gamma_forward(P("6"), FP) != gamma_forward(P("3^2"), FP)


def test_gamma_domain_errors():
    with pytest.raises(DomainError):
        gamma_forward(P("4"), FP)
    with pytest.raises(DomainError):
        gamma_inverse(P("1^6"), FP)
    with pytest.raises(DomainError):
        gamma_forward(P("6"), FP_INF)
    with pytest.raises(DomainError):
        gamma_forward(P("6"), FamilyParams(3, 1, 1, 2, v=2))


@pytest.mark.parametrize("params", GAMMA_GRID, ids=lambda f: str(f.as_dict()))
def test_gamma_bijection_grid(params):
    report = verify_bijection("gamma", params, 20)
    assert report.ok, report.violations[:5]


def test_gamma_block_order_irrelevant():
    rng = random.Random(7)
    for params in GAMMA_GRID[:6]:
        for n in range(21):
            for mu in enumerate_partitions(n):
                try:
                    whole = gamma_forward(mu, params)
                except DomainError:
                    continue
                pieces = [gamma_forward(Partition((b,)), params) for b in mu.blocks]
                rng.shuffle(pieces)
                acc = Partition()
                for piece in pieces:
                    acc = union(acc, piece)
                assert acc == whole


def test_glaisher_examples():
    assert glaisher_regularize(P("4,2,1"), 2) == P("1^7")
    assert glaisher_regularize(P("3"), 2) == P("3")
    assert glaisher_regularize(Partition(), 5) == Partition()
    assert glaisher_distinctify(P("1^7"), 2) == P("4,2,1")
    assert glaisher_distinctify(P("3"), 2) == P("3")
    assert glaisher_distinctify(P("1^3"), 2) == P("2,1")
    with pytest.raises(DomainError):
        glaisher_regularize(P("1^2"), 2)
    with pytest.raises(DomainError):
        glaisher_distinctify(P("2"), 2)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_glaisher_mutually_inverse(p):
    for n in range(21):
        few = [lam for lam in enumerate_partitions(n) if all(c < p for _, c in lam.blocks)]
        coprime = [lam for lam in enumerate_partitions(n) if all(x % p for x, _ in lam.blocks)]
        assert len(few) == len(coprime)
        images = set()
        for lam in few:
            reg = glaisher_regularize(lam, p)
            assert reg.weight == n and all(x % p for x, _ in reg.blocks)
            assert glaisher_distinctify(reg, p) == lam
            images.add(reg)
        assert images == set(coprime)


def test_sellers_fu_examples():
    assert sellers_fu_forward(P("1^7"), FP_INF) == P("3,2^2")
    assert sellers_fu_forward(P("1^3"), FP_INF) == P("3")
    assert sellers_fu_forward(Partition(), FP_INF) == Partition()
    assert sellers_fu_inverse(P("3,2^2"), FP_INF) == P("1^7")
    assert sellers_fu_inverse(P("3"), FP_INF) == P("1^3")
    assert sellers_fu_inverse(Partition(), FP_INF) == Partition()
    with pytest.raises(DomainError):
        sellers_fu_forward(P("1"), FP_INF)
    with pytest.raises(DomainError):
        sellers_fu_forward(P("1^3"), FP)


@pytest.mark.parametrize("params", INF_GRID, ids=lambda f: str(f.as_dict()))
def test_sellers_fu_bijection_grid(params):
    report = verify_bijection("sellers_fu", params, 20)
    assert report.ok, report.violations[:5]


def test_verify_bijection_reports_broken_maps(monkeypatch):
    import partkit.bijections as mod

    monkeypatch.setattr(mod, "beta_forward", lambda lam, r: lam)
    report = mod.verify_bijection("beta", 1, 6)
    kinds = {k for _, k in report.violations}
    assert "image-not-in-codomain" in kinds and "round-trip-failed" in kinds


@settings(max_examples=60, deadline=None)
@given(st.dictionaries(st.integers(1, 30), st.integers(1, 12), max_size=5), st.integers(1, 3))
def test_beta_round_trip_property(counts, r):
    lam = Partition.from_counts({x: c if c % 2 == 0 or c >= 2 * r + 1 else c + 2 * r
                                 for x, c in counts.items()})
    image = beta_forward(lam, r)
    assert image.weight == lam.weight
    assert beta_inverse(image, r) == lam
