import itertools

import pytest
from hypothesis import given
from sympy import partition as npartitions

from origami.kchar import Character
from origami.partitions import (
    Partition,
    PartitionTuple,
    RankVector,
    enumerate_tuples,
    k_char,
    partitions_of,
)
from strategies import partitions


def test_hook_examples():
    assert Partition((1,)).hook(0, 0) == 1
    assert Partition((2, 2)).hook(0, 0) == 3
    assert Partition((3, 1)).hook(0, 0) == 4
    assert Partition((3, 1)).hook(1, 1) == 0


@given(partitions())
def test_hook_matches_set_count(lam):
    for i, j in itertools.product(range(5), range(5)):
        if (i, j) in lam:
            hook_set = {(i, jj) for jj in range(j, 10) if (i, jj) in lam} | {
                (ii, j) for ii in range(i + 1, 10) if (ii, j) in lam
            }
            assert lam.hook(i, j) == len(hook_set)
            assert lam.hook(i, j) == lam.arm(i, j) + lam.leg(i, j) + 1
        else:
            assert lam.hook(i, j) == 0


@given(partitions())
def test_conjugate_involution(lam):
    assert lam.conjugate().conjugate() == lam
    assert lam.conjugate().size == lam.size


def test_partition_validation_and_text():
    with pytest.raises(ValueError):
        Partition((1, 2))
    assert str(Partition((3, 1, 1))) == "(3,1,1)"
    assert Partition.parse("(3,1,1)") == Partition((3, 1, 1))


def test_enumerate_examples():
    assert len(enumerate_tuples(RankVector({"12": 1}), 2)) == 2
    assert len(enumerate_tuples(RankVector({"12": 1, "34": 1}), 2)) == 5
    assert enumerate_tuples(RankVector(), 1) == ()
    assert len(enumerate_tuples(RankVector(), 0)) == 1
    with pytest.raises(ValueError):
        enumerate_tuples(RankVector({"12": 1}), -1)


def _convolved_counts(k, nmax):
    """Coefficients of (sum p(n) q^n)^k using sympy's partition counts."""
    single = [int(npartitions(n)) for n in range(nmax + 1)]
    out = [1] + [0] * nmax
    for _ in range(k):
        out = [sum(out[i] * single[n - i] for i in range(n + 1)) for n in range(nmax + 1)]
    return out


@pytest.mark.parametrize("ranks", [{"12": 1}, {"12": 1, "34": 1}, {"14": 2}, {"12": 1, "13": 1, "23": 1}])
def test_enumeration_generating_function(ranks):
    rv = RankVector(ranks)
    nmax = 8 if rv.total < 3 else 6
    expected = _convolved_counts(rv.total, nmax)
    assert [len(enumerate_tuples(rv, n)) for n in range(nmax + 1)] == expected


def test_enumeration_is_deterministic_and_distinct():
    rv = RankVector({"12": 1, "34": 1})
    tups = enumerate_tuples(rv, 4)
    assert len(set(tups)) == len(tups)
    assert all(t.size == 4 for t in tups)
    assert list(tups) == list(enumerate_tuples(rv, 4))


def test_k_char_examples():
    w = Character.w(("12", 1))
    assert k_char(Partition(()), "12", 1) == Character()
    assert k_char(Partition((1,)), "12", 1) == w
    w24 = Character.w(("24", 1))
    expected = w24 + Character.t(2) * w24 + Character.t(4) * w24
    assert k_char(Partition((2, 1)), "24", 1) == expected


@given(partitions())
def test_k_char_rank(lam):
    assert k_char(lam, "13", 2).rank() == lam.size


def test_tuple_text_roundtrip():
    rv = RankVector({"12": 1, "34": 1})
    tup = PartitionTuple(rv, {("12", 1): Partition((2,)), ("34", 1): Partition((1, 1))})
    assert str(tup) == "{12.1:(2), 34.1:(1,1)}"
    assert PartitionTuple.parse(rv, str(tup)) == tup
    with pytest.raises(ValueError):
        PartitionTuple(rv, {("13", 1): Partition((1,))})


def test_rank_vector():
    rv = RankVector({"12": 1, "34": 2})
    assert rv["34"] == 2 and rv.total == 3
    assert rv.slots() == [("12", 1), ("34", 1), ("34", 2)]
    with pytest.raises(ValueError):
        RankVector({"15": 1})
    with pytest.raises(ValueError):
        RankVector({"12": -1})


def test_partitions_of_order():
    assert [tuple(p) for p in partitions_of(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
