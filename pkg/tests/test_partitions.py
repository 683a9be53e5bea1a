import pytest
from hypothesis import given, strategies as st

from coxchar.partitions import (
    SignedPartition,
    format_partition,
    format_signed_partition,
    mu_bar,
    parse_partition,
    parse_signed_partition,
    partitions,
    signed_partitions,
)


def test_partitions_of_zero():
    assert partitions(0) == ((),)


def test_partition_counts():
    counts = [len(partitions(m)) for m in range(9)]
    assert counts == [1, 1, 2, 3, 5, 7, 11, 15, 22]


def test_partitions_canonical():
    for lam in partitions(6):
        assert all(a >= b for a, b in zip(lam, lam[1:]))
    assert len(set(partitions(6))) == 11


@pytest.mark.parametrize(
    "n,count", [(0, 1), (1, 2), (2, 5), (3, 10), (4, 20), (5, 36), (6, 65), (7, 110), (8, 185)]
)
def test_signed_partition_counts(n, count):
    # sum over k of p(k) p(n-k)
    assert len(signed_partitions(n)) == count


def test_signed_partition_validation():
    with pytest.raises(ValueError):
        SignedPartition((2, 1), ())  # neg must ascend
    with pytest.raises(ValueError):
        SignedPartition((), (1, 2))  # pos must descend
    SignedPartition((1, 2), (3, 1))


def test_mu_bar():
    mu = SignedPartition((1, 2), (3, 1))
    assert mu_bar(mu) == SignedPartition((3,), (3, 1))
    unchanged = SignedPartition((), (2, 2))
    assert mu_bar(unchanged) == unchanged
    assert mu_bar(SignedPartition((1, 1, 1), ())) == SignedPartition((3,), ())


def test_parse_and_format():
    assert parse_partition("3+1") == (3, 1)
    assert parse_partition("") == ()
    assert parse_partition("()") == ()
    mu = parse_signed_partition("-1-2+3+1")
    assert mu == SignedPartition((1, 2), (3, 1))
    assert format_signed_partition(mu) == "-1-2+3+1"
    assert format_partition((3, 1)) == "3+1"
    assert str(SignedPartition((1, 2), ())) == "-1-2"
    assert str(SignedPartition((), (2, 1))) == "2+1"


@pytest.mark.parametrize("bad", ["3-1", "1+2", "-2-1+1", "3++1", "+", "0", "3+0"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_signed_partition(bad)


@given(st.integers(min_value=0, max_value=7))
def test_roundtrip_all_signed_partitions(n):
    for mu in signed_partitions(n):
        assert parse_signed_partition(format_signed_partition(mu)) == mu


def test_identity_label_first():
    mus = signed_partitions(4)
    assert mus[0] == SignedPartition((), (1, 1, 1, 1))
