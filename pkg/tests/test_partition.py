import pytest
from hypothesis import given, strategies as st

from partkit.partition import (
    UNBOUNDED,
    DomainError,
    FamilyParams,
    Partition,
    PartitionSyntaxError,
    base_expansion,
    enumerate_partitions,
    normalize,
    ord_base,
    parse_partition,
    render_partition,
    satisfies_A,
    satisfies_B,
    satisfies_C,
    satisfies_E,
    union,
    weight,
)
from partkit.qseries import partition_numbers

from oracles import b_member, e_member, partitions_bruteforce

P = parse_partition

parts_lists = st.lists(st.integers(min_value=1, max_value=12), max_size=15)


def test_normalize_examples():
    assert normalize([5, 1, 5, 1, 1]) == Partition(((5, 2), (1, 3)))
    assert normalize([]) == Partition()
    assert normalize([2, 2, 2]) == Partition(((2, 3),))


def test_normalize_rejects_nonpositive():
    with pytest.raises(ValueError):
        normalize([3, 0, 1])
    with pytest.raises(ValueError):
        normalize([-2])


def test_partition_invariants_enforced():
    with pytest.raises(ValueError):
        Partition(((1, 2), (3, 1)))
    with pytest.raises(ValueError):
        Partition(((3, 1), (3, 2)))
    with pytest.raises(ValueError):
        Partition(((3, 0),))


@given(parts_lists)
def test_normalize_idempotent(parts):
    once = normalize(parts)
    assert normalize(once.parts()) == once
    assert once.weight == sum(parts)


def test_weight_examples():
    assert weight(P("5^2,1^7")) == 17
    assert weight(Partition()) == 0
    assert weight(P("2^3")) == 6


def test_union_examples():
    assert union(P("2"), P("2")) == P("2^2")
    lam = P("4,3^2")
    assert union(lam, Partition()) == lam
    assert union(P("3"), P("2,1")) == P("3,2,1")


def test_union_weight_additive_small_n():
    pool = [lam for n in range(9) for lam in enumerate_partitions(n)]
    for lam in pool[::3]:
        for mu in pool[::5]:
            assert weight(union(lam, mu)) == weight(lam) + weight(mu)


@given(parts_lists, parts_lists)
def test_union_is_multiset_sum(xs, ys):
    assert union(normalize(xs), normalize(ys)) == normalize(xs + ys)


def test_enumerate_small_cases():
    assert enumerate_partitions(0) == [Partition()]
    assert len(enumerate_partitions(4)) == 5
    assert len(enumerate_partitions(5)) == 7
    assert [lam.parts() for lam in enumerate_partitions(4)] == [
        (4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


@pytest.mark.parametrize("n", range(9))
def test_enumerate_matches_bruteforce(n):
    got = [lam.parts() for lam in enumerate_partitions(n)]
    assert len(got) == len(set(got))
    assert set(got) == partitions_bruteforce(n)


def test_enumerate_counts_match_product():
    series = partition_numbers(30)
    for n in range(31):
        assert len(enumerate_partitions(n)) == series[n]


def test_satisfies_A():
    assert satisfies_A(P("2^4,1^9"), 3)
    assert not satisfies_A(P("3,1^2"), 1)
    assert satisfies_A(Partition(), 1)


def test_satisfies_C():
    assert satisfies_C(P("7,4,2^3"), 3)
    assert not satisfies_C(P("5"), 1)
    assert satisfies_C(Partition(), 1)


def test_predicates_need_positive_r():
    with pytest.raises(ValueError):
        satisfies_A(Partition(), 0)


FP = FamilyParams(2, 1, 1, 2)


def test_satisfies_B_examples():
    assert satisfies_B(P("2^2,1^2"), FP)
    assert not satisfies_B(P("1^6"), FP)
    assert satisfies_B(Partition(), FP)
    assert satisfies_B(Partition(), FamilyParams(3, 2, 2, UNBOUNDED))


def test_satisfies_E_examples():
    assert satisfies_E(P("6"), FP)
    assert not satisfies_E(P("4"), FP)
    assert not satisfies_E(P("1"), FP)


GRID = [FamilyParams(p, r, a, m, v)
        for p, a_vals in ((2, (1,)), (3, (1, 2)), (5, (2,)))
        for a in a_vals for r in (0, 1, 2) for m in (2, 3, UNBOUNDED)
        for v in range(1, p + 1)]


@pytest.mark.parametrize("params", GRID, ids=lambda f: str(f.as_dict()))
def test_B_and_E_predicates_match_literal_scan(params):
    m = None if params.m is UNBOUNDED else params.m
    for n in range(13):
        for lam in enumerate_partitions(n):
            parts = lam.parts()
            assert satisfies_B(lam, params) == b_member(parts, params.p, params.r, params.a, m, params.v)
            assert satisfies_E(lam, params) == e_member(parts, params.p, params.r, params.a, m)


def test_family_params_validation():
    fp = FamilyParams(3, 1, 2, 2)
    assert fp.v == 3 and fp.base == 5 and fp.modulus == 15
    with pytest.raises(ValueError):
        FamilyParams(4, 1, 2, 2)
    with pytest.raises(ValueError):
        FamilyParams(3, 1, 1, 2, v=4)
    with pytest.raises(ValueError):
        FamilyParams(3, 1, 1, 2, v=0)
    with pytest.raises(ValueError):
        FamilyParams(3, 1, 1, 1)
    assert not FamilyParams(2, 0, 1, UNBOUNDED).finite


@pytest.mark.parametrize("p, r, a", [(2, 1, 1), (3, 0, 2), (3, 2, 1), (5, 1, 3)])
def test_theorem_counts_small(p, r, a):
    for m in (2, 3):
        fp = FamilyParams(p, r, a, m)
        for n in range(26):
            parts = enumerate_partitions(n)
            assert sum(satisfies_B(x, fp) for x in parts) == sum(satisfies_E(x, fp) for x in parts)


def test_ord_base():
    assert ord_base(2, 12) == 2
    assert ord_base(3, 5) == 0
    assert ord_base(2, 8) == 3
    assert ord_base(6, 72) == 2
    with pytest.raises(ValueError):
        ord_base(2, 0)


def test_base_expansion_examples():
    e = base_expansion(1 + 2 * 4 + 2 * 4**2 + 3 * 4**4, 4)
    assert e.digits == (1, 2, 2, 0, 3)
    assert list(e.nonzero()) == [(0, 1), (1, 2), (2, 2), (4, 3)]
    assert base_expansion(7, 2).digits == (1, 1, 1)
    assert base_expansion(0, 5).digits == ()


def test_base_expansion_round_trip_exhaustive():
    for b in range(2, 11):
        for omega in range(10_001):
            e = base_expansion(omega, b)
            assert e.value() == omega
            assert not e.digits or e.digits[-1] != 0
            assert all(0 <= d < b for d in e.digits)


def test_parse_partition():
    assert parse_partition("5^2,1^7") == Partition(((5, 2), (1, 7)))
    assert parse_partition("") == Partition()
    assert parse_partition("3,3") == Partition(((3, 2),))
    assert parse_partition(" 4 ^ 2 , 1 ") == Partition(((4, 2), (1, 1)))


@pytest.mark.parametrize("text, pos", [("5^0", 2), ("0", 0), ("3,,1", 2), ("3;1", 1), ("a", 0), ("3^", 1)])
def test_parse_partition_errors(text, pos):
    with pytest.raises(PartitionSyntaxError) as info:
        parse_partition(text)
    assert info.value.position == pos


def test_render_parse_round_trip():
    for n in range(16):
        for lam in enumerate_partitions(n):
            assert parse_partition(render_partition(lam)) == lam


def test_domain_error_is_value_error():
    err = DomainError("bad", (3, 1))
    assert isinstance(err, ValueError) and err.block == (3, 1)
