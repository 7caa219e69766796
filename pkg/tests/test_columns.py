"""Spinor-column regression tests: residue and both sliding algorithms
pinned to the worked displays, and the admissibility predicate checked
against connected-component membership in the product of factor crystals."""

import pytest

from spinorcrystals.alphabets import NATURAL, GradedAlphabet
from spinorcrystals.columns import (SpinorColumn, is_admissible, residue,
                                    split_lr, split_star)
from spinorcrystals.groups import GroupSpec
from spinorcrystals.spinor import SpinorTableau, _candidates, highest_column


def test_residue_worked_examples():
    s = SpinorColumn("b", "std", (4, 5, 6, 7), (3, 4, 6, 8), 2)
    t = SpinorColumn("b", "std", (4, 5, 6, 7), (4, 6, 7, 8), 2)
    assert residue(s) == 1
    assert residue(t) == 2
    assert residue(SpinorColumn("b", "sp", (1, 2, 3))) == 1
    # a single right column sits at residue zero regardless of height
    assert residue(SpinorColumn("d", "std", (), (1, 2), 0)) == 0


def test_split_down_worked_example():
    t = SpinorColumn("d", "std", (2, 4, 6, 8, 9), (2, 3, 7, 9), 3)
    assert split_lr(t) == ((2, 6, 9), (2, 3, 4, 7, 8, 9))


def test_split_up_worked_example():
    t = SpinorColumn("d", "std", (2, 4, 6, 8, 9), (2, 3, 7, 9), 3)
    assert split_star(t) == ((2, 3, 4, 6, 8, 9), (2, 7, 9))


def test_split_empty_tail():
    t = SpinorColumn("c", "std", (1, 2), (1, 3), 0)
    assert split_lr(t) == ((1, 2), (1, 3))


def test_split_highest_column():
    t = SpinorColumn("b", "std", (1, 2, 3), (), 3)
    lt, rt = split_lr(t)
    assert lt == () and rt == (1, 2, 3)


def test_split_star_requires_residue_one():
    t = SpinorColumn("c", "std", (1, 2), (1, 3), 0)
    with pytest.raises(ValueError):
        split_star(t)


def test_split_preserves_boxes():
    key = (GradedAlphabet.natural(4).names, GradedAlphabet.natural(4).parities)
    for g in ("b", "c", "d"):
        for a in (0, 1, 2):
            for col in _candidates(g, ("std", a), key, 7):
                lt, rt = split_lr(col)
                assert sorted(lt + rt) == sorted(col.left + col.right)
                # the number of boxes that changed columns is a - residue
                moved = len(rt) - len(col.right)
                assert moved == col.a - residue(col)
                if g == "d" and residue(col) == 1:
                    ls, rs = split_star(col)
                    assert sorted(ls + rs) == sorted(col.left + col.right)
                    assert len(ls) == len(col.left) + 1


def test_admissibility_worked_example():
    t = SpinorColumn("c", "std", (2, 3, 4, 5), (4, 6), 2)
    s = SpinorColumn("c", "std", (1, 2, 5, 6), (3, 6, 7), 1)
    assert is_admissible(t, s)
    # oracle-verified perturbation: pushing the right factor's lowest left
    # entries up past the slid column breaks the pair
    s_bad = SpinorColumn("c", "std", (3, 4, 5, 6), (3, 6, 7), 1)
    assert not is_admissible(t, s_bad)


def test_highest_columns_admissible():
    for g in ("b", "c", "d"):
        for a in (3, 2, 1, 0):
            for ap in range(a, -1, -1):
                t = highest_column(g, ("std", a))
                s = highest_column(g, ("std", ap))
                assert is_admissible(t, s)


def test_admissibility_type_errors():
    sp = SpinorColumn("d", "sp", (1,))
    std = SpinorColumn("d", "std", (1,), (), 1)
    dbar = SpinorColumn("d", "dbar", (1,), (1,))
    with pytest.raises(TypeError):
        is_admissible(sp, std)
    with pytest.raises(TypeError):
        is_admissible(dbar, std)
    with pytest.raises(TypeError):
        is_admissible(std, SpinorColumn("c", "std", (1,), (), 1))
    # a dbar factor cannot precede an even single column
    with pytest.raises(TypeError):
        is_admissible(dbar, SpinorColumn("d", "sp", (1, 2)))


def test_column_validation():
    with pytest.raises(ValueError):
        SpinorColumn("c", "std", (1, 1), (), 0).validate()
    with pytest.raises(ValueError):
        # type c allows no upper single column
        SpinorColumn("c", "std", (2,), (1, 3), 1).validate()
    with pytest.raises(ValueError):
        # residue 1 is too large for type b
        SpinorColumn("b", "std", (1,), (1,), 1).validate()
    SpinorColumn("d", "std", (1,), (1,), 1).validate()


# ---------------------------------------------------------------------------
# component oracle: a pair is admissible exactly when it lies in the
# connected component of the highest pair

K = 3
_ALPHA = GradedAlphabet.natural(K)
_KEY = (_ALPHA.names, _ALPHA.parities)
_DUMMY = {"b": GroupSpec("Pin", 4), "c": GroupSpec("Sp", 4),
          "d": GroupSpec("O", 4)}

PAIR_KINDS = (
    [("c", ("std", a), ("std", ap)) for a in (2, 1, 0)
     for ap in range(a, -1, -1)]
    + [("b", ("std", a), ("std", ap)) for a in (2, 1, 0)
       for ap in range(a, -1, -1)]
    + [("d", ("std", a), ("std", ap)) for a in (2, 1, 0)
       for ap in range(a, -1, -1)]
    + [("b", ("std", a), ("sp", 0)) for a in (2, 1, 0)]
    + [("d", ("std", a), ("sp", 1)) for a in (2, 1, 0)]
    # deficit-side profiles never place an empty-tail standard factor
    # before a dbar or odd single column
    + [("d", ("std", a), ("sp", -1)) for a in (2, 1)]
    + [("d", ("std", a), ("dbar",)) for a in (2, 1)]
    + [("d", ("dbar",), ("dbar",)), ("d", ("dbar",), ("sp", -1))]
)


def _raise_to_source(pair: SpinorTableau) -> SpinorTableau:
    cur = pair
    progress = True
    while progress:
        progress = False
        for i in range(0, K):
            nxt = cur.e(i)
            if nxt is not None:
                cur = nxt
                progress = True
                break
    return cur


@pytest.mark.parametrize("gtype,kind_t,kind_s", PAIR_KINDS)
def test_admissibility_matches_component(gtype, kind_t, kind_s):
    budget = 5
    ht = highest_column(gtype, kind_t)
    hs = highest_column(gtype, kind_s)
    for t in _candidates(gtype, kind_t, _KEY, budget):
        for s in _candidates(gtype, kind_s, _KEY, budget):
            pair = SpinorTableau(gtype, _DUMMY[gtype], (), (t, s))
            src = _raise_to_source(pair)
            in_component = src.columns == (ht, hs)
            assert is_admissible(t, s, _ALPHA) is in_component, (t, s)
