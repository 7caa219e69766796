"""Cross-check: component by downward BFS from the highest pair vs the
raising walk vs the admissibility formula."""

from collections import deque

from spinorcrystals.alphabets import GradedAlphabet
from spinorcrystals.columns import is_admissible
from spinorcrystals.groups import GroupSpec
from spinorcrystals.spinor import SpinorTableau, _candidates, highest_column

K = 3
ALPHA = GradedAlphabet.natural(K)
KEY = (ALPHA.names, ALPHA.parities)
DUMMY = {"b": GroupSpec("Pin", 4), "c": GroupSpec("Sp", 4), "d": GroupSpec("O", 4)}


def bfs_component(gtype, kind_t, kind_s):
    ht = highest_column(gtype, kind_t)
    hs = highest_column(gtype, kind_s)
    src = SpinorTableau(gtype, DUMMY[gtype], (), (ht, hs))
    seen = {src.columns}
    queue = deque([src])
    while queue:
        cur = queue.popleft()
        for i in range(0, K):
            nxt = cur.f(i)
            if nxt is None:
                continue
            if any(x > K for col in nxt.columns for x in col.left + col.right):
                continue
            if nxt.columns not in seen:
                seen.add(nxt.columns)
                queue.append(nxt)
    return seen


def raise_to_source(pair):
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


def run(gtype, kind_t, kind_s, budget=6):
    comp = bfs_component(gtype, kind_t, kind_s)
    ht = highest_column(gtype, kind_t)
    hs = highest_column(gtype, kind_s)
    n_walk_bad = n_formula_bad = 0
    for t in _candidates(gtype, kind_t, KEY, budget):
        for s in _candidates(gtype, kind_s, KEY, budget):
            pair = SpinorTableau(gtype, DUMMY[gtype], (), (t, s))
            in_bfs = pair.columns in comp
            src = raise_to_source(pair)
            by_walk = src.columns == (ht, hs)
            if by_walk != in_bfs:
                n_walk_bad += 1
                if n_walk_bad < 5:
                    print(f"  WALK!=BFS {gtype}: T={t.left}/{t.right} "
                          f"S={s.left}/{s.right} walk={by_walk} bfs={in_bfs}")
            try:
                adm = is_admissible(t, s, ALPHA)
            except TypeError:
                adm = None
            if adm != in_bfs:
                n_formula_bad += 1
                if n_formula_bad < 6:
                    print(f"  FORMULA!=BFS {gtype}: T={t.left}/{t.right} "
                          f"S={s.left}/{s.right} formula={adm} bfs={in_bfs}")
    print(f"{gtype} {kind_t} x {kind_s}: walk/bfs disagreements={n_walk_bad}, "
          f"formula/bfs disagreements={n_formula_bad}")


run("b", ("std", 1), ("sp", 0))
run("b", ("std", 0), ("sp", 0))
run("d", ("std", 1), ("sp", -1))
run("d", ("std", 2), ("sp", -1))
run("d", ("std", 1), ("dbar",))
