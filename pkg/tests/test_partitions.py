import pytest

from spinorcrystals.groups import GroupSpec, in_group_range
from spinorcrystals.partitions import (conjugate, contains, is_type_partition,
                                       normalize, partitions, partitions_upto,
                                       subpartitions)


@pytest.mark.parametrize("lam,expected", [
    ((3, 1), (2, 1, 1)),
    ((), ()),
    ((2, 2), (2, 2)),
    ((4, 2, 1), (3, 2, 1, 1)),
])
def test_conjugate(lam, expected):
    assert conjugate(lam) == expected


def test_conjugate_involution_and_size():
    for lam in partitions_upto(8):
        assert conjugate(conjugate(lam)) == lam
        assert sum(conjugate(lam)) == sum(lam)


def test_normalize():
    assert normalize((2, 2, 0, 0)) == (2, 2)
    assert normalize([]) == ()
    with pytest.raises(ValueError):
        normalize((1, 2))


@pytest.mark.parametrize("lam,g,expected", [
    ((2, 2), "c", True),
    ((2, 1), "d", False),
    ((3, 1), "b", True),
    ((2, 2), "d", True),
    ((3,), "c", False),
])
def test_type_partition(lam, g, expected):
    assert is_type_partition(lam, g) is expected


@pytest.mark.parametrize("lam,family,n,expected", [
    ((2, 2), "O", 4, True),
    ((3, 1), "Sp", 2, False),
    ((1, 1), "O", 2, True),
    ((1,), "Spin", 3, True),
    ((1, 1), "Spin", 3, False),
    ((2, 1, 1, 1), "O", 4, False),  # column sums 4+1 exceed 4
])
def test_group_range(lam, family, n, expected):
    assert in_group_range(lam, GroupSpec(family, n)) is expected


def test_group_parities():
    with pytest.raises(ValueError):
        GroupSpec("Sp", 3)
    with pytest.raises(ValueError):
        GroupSpec("Spin", 4)
    with pytest.raises(ValueError):
        GroupSpec("Pin", 5)


def test_partition_generators():
    assert partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert len(partitions_upto(6)) == 1 + 1 + 2 + 3 + 5 + 7 + 11
    subs = subpartitions((2, 1))
    assert set(subs) == {(), (1,), (2,), (1, 1), (2, 1)}
    for mu in subs:
        assert contains((2, 1), mu)
