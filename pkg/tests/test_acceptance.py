"""Acceptance suite: every criterion prints one pass/fail line.

Grids and tolerances are fixed here; all comparisons are exact.
"""

import time

import pytest

from spinorcrystals.alphabets import GradedAlphabet
from spinorcrystals.branching import (lr_set_branch, lr_set_tensor,
                                      branch_table, stable_branch_count,
                                      stable_branch_forward,
                                      stable_branch_inverse,
                                      stable_tensor_count,
                                      stable_tensor_forward,
                                      stable_tensor_inverse)
from spinorcrystals.characters import (char_unitarizable, delta_series, schur,
                                       verify_oscillator_identity)
from spinorcrystals.columns import SpinorColumn
from spinorcrystals.groups import GroupSpec, family_for, in_group_range
from spinorcrystals.oracle import (lr_coef_latticeword, sp_restriction_oracle,
                                   sp_tensor_oracle, spinor_dimension)
from spinorcrystals.partitions import (conjugate, length, partitions,
                                       partitions_upto, subpartitions)
from spinorcrystals.spinor import crystal_set, highest_spinor
from spinorcrystals.tableaux import lr_coef


def _report(name: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    print(f"[{status}] {name}" + (f": {detail}" if detail else ""))
    assert ok, f"{name} failed: {detail}"


GOLDEN_BRANCH = {
    ((2, 2), 2): {(): 1},
    ((2, 2), 3): {(): 1, (2,): 1},
    ((2, 2), 4): {(): 1, (2,): 1, (2, 2): 1},
    ((2, 2), 5): {(): 1, (2,): 1, (2, 2): 1},
    ((2, 2), 6): {(): 1, (2,): 1, (2, 2): 1},
    ((3, 1), 2): {(2,): 1, (1, 1): 1},
    ((3, 1), 3): {(3, 1): 1, (2,): 1, (1, 1): 1},
    ((3, 1), 4): {(3, 1): 1, (2,): 1, (1, 1): 1},
    ((3, 1), 5): {(3, 1): 1, (2,): 1, (1, 1): 1},
}

# witness tableaux as displayed: (mu, n) -> list of factor (left, right, a)
GOLDEN_WITNESSES = {
    ((2, 2), (2, 2), 4): [((1, 2), (), 2), ((1, 2), (), 2)],
    ((2, 2), (2,), 4): [((1, 2), (), 2), ((), (1, 2), 0)],
    ((2, 2), (), 4): [((), (), 0), ((1, 2), (1, 2), 0)],
    ((2, 2), (2,), 3): [((1, 2), (), 2), ((1, 2), (), 0)],
    ((2, 2), (), 3): [((), (1, 2), 0), ((1, 2), (), 0)],
    ((2, 2), (), 2): [((1, 2), (1, 2), 0)],
    ((3, 1), (3, 1), 4): [((1, 2, 3), (), 3), ((1,), (), 1)],
    ((3, 1), (2,), 4): [((1, 3), (), 2), ((), (1, 2), 0)],
    ((3, 1), (1, 1), 4): [((1,), (), 1), ((3,), (1, 2), 1)],
    ((3, 1), (3, 1), 3): [((1, 2, 3), (), 3), ((1,), (), 0)],
    ((3, 1), (2,), 3): [((1, 3), (), 2), ((1, 2), (), 0)],
    ((3, 1), (1, 1), 3): [((1,), (), 1), ((1, 2, 3), (), 0)],
    ((3, 1), (2,), 2): [((1, 3), (1, 2), 2)],
    ((3, 1), (1, 1), 2): [((1,), (1, 2, 3), 0)],
}


def test_criterion_1_golden_examples():
    t0 = time.time()
    for (lam, n), want in GOLDEN_BRANCH.items():
        got = branch_table("d", GroupSpec("O", n), lam)
        assert got == want, f"branch O_{n} {lam}: {got} != {want}"
    for (lam, mu, n), cols in GOLDEN_WITNESSES.items():
        elems = lr_set_branch("d", GroupSpec("O", n), mu, lam)
        assert len(elems) == 1
        got = [(c.left, c.right, c.a) for c in elems[0].columns]
        assert got == cols, f"witness O_{n} {lam} {mu}: {got} != {cols}"
    elapsed = time.time() - t0
    _report("criterion 1: golden branching tables and witnesses",
            elapsed < 1.0, f"{elapsed:.2f}s")


def test_criterion_2_littlewood_stable_formula():
    t0 = time.time()
    checked = 0
    for g in ("b", "c", "d"):
        for lam in partitions_upto(6):
            for n in range(max(2, 2 * length(lam)), 13):
                try:
                    grp = family_for(g, n)
                except ValueError:
                    continue
                if grp.n != n:
                    continue
                for mu in partitions_upto(sum(lam)):
                    if not in_group_range(mu, grp):
                        continue
                    got = lr_set_branch(g, grp, mu, lam, as_count=True)
                    want = stable_branch_count(g, lam, mu)
                    assert got == want, (g, lam, mu, n, got, want)
                    checked += 1
    elapsed = time.time() - t0
    _report("criterion 2: stable branching formula",
            elapsed < 60.0, f"{checked} cases in {elapsed:.1f}s")


def test_criterion_3_stable_tensor_formula():
    t0 = time.time()
    checked = rts = 0
    for g in ("b", "c", "d"):
        for lam in partitions_upto(5):
            lo = max(2, 2 * length(lam))
            for m in range(lo, 13):
                for n in range(lo, 13):
                    try:
                        gm, gn = family_for(g, m), family_for(g, n)
                        family_for(g, m + n)
                    except ValueError:
                        continue
                    for mu in subpartitions(lam):
                        if not in_group_range(mu, gm):
                            continue
                        for nu in partitions_upto(sum(lam) - sum(mu)):
                            if not in_group_range(nu, gn):
                                continue
                            elems = lr_set_tensor(g, m, n, lam, mu, nu)
                            want = stable_tensor_count(g, lam, mu, nu)
                            assert len(elems) == want, (g, lam, mu, nu, m, n)
                            checked += 1
                            for t in elems:
                                img = stable_tensor_forward(t, m, lam, mu)
                                back = stable_tensor_inverse(
                                    g, m, n, lam, mu, nu, img.body, img.tail)
                                assert back == t, (g, lam, mu, nu, m, n)
                                rts += 1
    elapsed = time.time() - t0
    _report("criterion 3: stable tensor formula and bijection",
            elapsed < 300.0, f"{checked} counts, {rts} round-trips in "
                             f"{elapsed:.1f}s")


def test_criterion_4_dimension_oracle():
    t0 = time.time()
    checked = 0
    for g, fam in (("c", "Sp"), ("b", "Pin"), ("b", "Spin"), ("d", "O")):
        for n in range(2, 9):
            try:
                grp = GroupSpec(fam, n)
            except ValueError:
                continue
            for lam in partitions_upto(4):
                if not in_group_range(lam, grp):
                    continue
                for k in (1, 2, 3):
                    if g == "d" and k < 2:
                        continue  # the affine node needs two letters
                    if lam and lam[0] > k:
                        continue
                    cnt = len(crystal_set(g, grp, lam, k))
                    dim = spinor_dimension(g, k, n, lam)
                    assert cnt == dim, (g, fam, n, lam, k, cnt, dim)
                    checked += 1
    elapsed = time.time() - t0
    _report("criterion 4: dimension oracle",
            elapsed < 60.0, f"{checked} cases in {elapsed:.1f}s")


def test_criterion_5_lr_double_entry():
    t0 = time.time()
    checked = 0
    for lam in partitions_upto(8):
        for mu in subpartitions(lam):
            rest = sum(lam) - sum(mu)
            for nu in partitions(rest):
                assert lr_coef(lam, mu, nu) == \
                    lr_coef_latticeword(lam, mu, nu), (lam, mu, nu)
                checked += 1
    elapsed = time.time() - t0
    _report("criterion 5: LR double entry up to size 8",
            elapsed < 60.0, f"{checked} triples in {elapsed:.1f}s")


def test_criterion_6_sp_character_oracle():
    t0 = time.time()
    checked = 0
    for lam in partitions_upto(5):
        for n in (2, 4):
            if length(lam) > n:
                continue
            want = {tuple(x for x in mu if x): c
                    for mu, c in sp_restriction_oracle(lam, n).items() if c}
            got = {}
            for mu in partitions_upto(sum(lam), max_length=n // 2):
                c = lr_set_branch("c", GroupSpec("Sp", n), mu, lam,
                                  as_count=True)
                if c:
                    got[mu] = c
            assert got == want, (lam, n, got, want)
            checked += 1
    for m in (2, 4):
        for n in (2, 4):
            for lam in partitions_upto(5, max_length=(m + n) // 2):
                want = {((tuple(x for x in mu if x)),
                         (tuple(x for x in nu if x))): c
                        for (mu, nu), c in sp_tensor_oracle(lam, m, n).items()
                        if c}
                got = {}
                for mu in partitions_upto(sum(lam), max_length=m // 2):
                    for nu in partitions_upto(sum(lam) - sum(mu),
                                              max_length=n // 2):
                        c = lr_set_tensor("c", m, n, lam, mu, nu,
                                          as_count=True)
                        if c:
                            got[(mu, nu)] = c
                assert got == want, (lam, m, n)
                checked += 1
    elapsed = time.time() - t0
    _report("criterion 6: symplectic character oracle",
            True, f"{checked} decompositions in {elapsed:.1f}s")


def test_criterion_7_holomorphic_discrete_series():
    t0 = time.time()
    checked = 0
    for g in ("bb", "c", "d"):
        for k in (1, 2):
            for lam in partitions_upto(3, max_length=k):
                for n in (2 * k, 2 * k + 1, 2 * k + 2):
                    gv = {"bb": "b", "c": "d", "d": "c"}[g]
                    try:
                        grp = family_for(gv, n)
                    except ValueError:
                        continue
                    if not in_group_range(lam, grp):
                        continue
                    ok, diff = verify_oscillator_identity(g, k, lam, n, 8)
                    assert ok, (g, k, lam, n, diff)
                    checked += 1
    elapsed = time.time() - t0
    _report("criterion 7: holomorphic discrete series identity",
            elapsed < 120.0, f"{checked} identities in {elapsed:.1f}s")


def test_criterion_8_crystal_axioms():
    t0 = time.time()
    checked = 0
    for g, fam in (("c", "Sp"), ("b", "Pin"), ("b", "Spin"), ("d", "O")):
        for n in range(2, 9):
            try:
                grp = GroupSpec(fam, n)
            except ValueError:
                continue
            for lam in partitions_upto(4):
                if not in_group_range(lam, grp):
                    continue
                for k in (1, 2, 3):
                    if g == "d" and k < 2:
                        continue
                    if lam and lam[0] > k:
                        continue
                    elems = crystal_set(g, grp, lam, k)
                    members = {t.columns for t in elems}
                    h = highest_spinor(g, grp, lam)
                    sources = 0
                    for t in elems:
                        killed = True
                        for i in range(0, k):
                            up = t.e(i)
                            dn = t.f(i)
                            if up is not None:
                                killed = False
                                assert up.columns in members, (g, lam, n, k, i)
                                assert up.f(i) == t, (g, lam, n, k, i)
                                wt, wu = t.weight(), up.weight()
                                assert _alpha_shift(g, wu, wt, i), (g, lam, i)
                            if dn is not None:
                                assert dn.columns in members, (g, lam, n, k, i)
                                assert dn.e(i) == t, (g, lam, n, k, i)
                        if killed:
                            sources += 1
                            assert t.columns == h.columns
                        checked += 1
                    assert sources == 1, (g, fam, lam, n, k)
    elapsed = time.time() - t0
    _report("criterion 8: crystal axioms and unique source",
            elapsed < 180.0, f"{checked} elements checked in {elapsed:.1f}s")


def _alpha_shift(g, w_up, w_down, i) -> bool:
    """w_down = w_up - alpha_i in the Lambda_0/eps coordinates."""
    d = {}
    m = max(len(w_up.eps), len(w_down.eps)) + 1
    for j in range(1, m + 1):
        d[j] = w_down.eps_coef(j) - w_up.eps_coef(j)
    if w_down.lambda0 != w_up.lambda0:
        return False
    if i == 0:
        if g == "b":
            want = {1: 1}
        elif g == "c":
            want = {1: 2}
        else:
            want = {1: 1, 2: 1}
        return all(d.get(j, 0) == want.get(j, 0) for j in range(1, m + 1))
    return all(d.get(j, 0) == (-1 if j == i else 1 if j == i + 1 else 0)
               for j in range(1, m + 1))
