"""Generalized Littlewood-Richardson sets, the body/tail decomposition, and
the stable-range bijections onto pairs of classical LR tableaux."""

from dataclasses import dataclass

from .alphabets import NATURAL, GradedAlphabet
from .columns import SpinorColumn
from .groups import GroupSpec, group_weight, in_group_range, pair_with_coroot
from .partitions import (base_type, conjugate, contains, is_type_partition,
                         length, normalize, part, partitions_upto)
from .spinor import SpinorTableau, enumerate_spinor, factor_profile
from .tableaux import (Shape, Tableau, eps_word, highest_tableau, insert_word,
                       is_lattice_word, lr_coef, ssyt,
                       tableau_from_bottom_columns, tableau_from_columns)


def l_statistic(t: SpinorTableau) -> int:
    """Longest weakly decreasing subsequence of the reading word."""
    word = t.word()
    best = []  # best[j] = length of the longest weakly decreasing subword ending at j
    out = 0
    for j, x in enumerate(word):
        b = 1
        for i in range(j):
            if word[i] >= x and best[i] + 1 > b:
                b = best[i] + 1
        best.append(b)
        out = max(out, b)
    return out


@dataclass(frozen=True)
class BodyTailPair:
    body: Tableau | None
    tail: Tableau | None
    body_columns: tuple[tuple[int, ...], ...]
    tail_columns: tuple[tuple[int, ...], ...]
    body_valid: bool
    tail_valid: bool
    delta: tuple[int, ...] | None  # body shape as a straight partition


def _column_pieces(col: SpinorColumn):
    """(body columns, tail piece) of one factor."""
    if col.variant == "std":
        ov = col.overlap
        return (col.left[:ov], col.right), col.left[ov:]
    if col.variant == "sp":
        if col.gtype == "d" and len(col.left) % 2 == 1:
            return (col.left[:-1],), col.left[-1:]
        return (col.left,), ()
    # dbar: the bottom row is the tail
    return (col.left[:-1], col.right[:-1]), col.left[-1:] + col.right[-1:]


def body_tail_split(t: SpinorTableau) -> BodyTailPair:
    """Split every factor at the common horizontal line above its tail and
    assemble the tails into a single tableau and the bodies into a
    bottom-aligned rotated one.  Outside the stable range the assembled
    parts may fail to be semistandard; validity flags report this."""
    body_cols: list[tuple[int, ...]] = []
    tail_cols: list[tuple[int, ...]] = []
    row_tails = False
    for col in t.columns:
        bodies, tail = _column_pieces(col)
        body_cols.extend(b for b in bodies)
        tail_cols.append(tail)
        if col.variant == "dbar":
            row_tails = True
    while body_cols and not body_cols[0]:
        body_cols.pop(0)
    while tail_cols and not tail_cols[-1]:
        tail_cols.pop()

    body = None
    body_valid = False
    delta = None
    heights = [len(c) for c in body_cols]
    if all(heights[i] <= heights[i + 1] for i in range(len(heights) - 1)):
        body = tableau_from_bottom_columns(body_cols)
        body_valid = body.is_semistandard(t.alphabet)
        delta = conjugate(tuple(sorted(heights, reverse=True)))
    tail = None
    tail_valid = False
    if not row_tails:
        theights = [len(c) for c in tail_cols]
        if all(theights[i] >= theights[i + 1] for i in range(len(theights) - 1)):
            tail = tableau_from_columns(tail_cols)
            tail_valid = tail.is_semistandard(t.alphabet)
    return BodyTailPair(body, tail, tuple(body_cols), tuple(tail_cols),
                        body_valid, tail_valid, delta)


# ---------------------------------------------------------------------------
# generalized LR sets

def _entry_bound(content) -> int:
    top = 0
    for i, c in enumerate(content, start=1):
        if c:
            top = i
    return top


def lr_set_tensor(gtype: str, m: int, n: int, lam, mu, nu,
                  as_count: bool = False):
    """Elements of the crystal attached to (nu, n) whose weight matches
    lam - mu and whose string lengths are bounded by the mu-weight; their
    number is the tensor multiplicity."""
    g = base_type(gtype)
    gm, gn, gmn = family_for_checked(g, m), family_for_checked(g, n), \
        family_for_checked(g, m + n)
    lam, mu, nu = normalize(lam), normalize(mu), normalize(nu)
    for (p, grp) in ((mu, gm), (nu, gn), (lam, gmn)):
        if not in_group_range(p, grp):
            raise ValueError(f"{p} is not a valid highest weight for {grp}")
    lamc, muc = conjugate(lam), conjugate(mu)
    width = max(len(lamc), len(muc), 1)
    content = tuple(part(lamc, i) - part(muc, i) for i in range(1, width + 1))
    if any(c < 0 for c in content):
        return 0 if as_count else []
    wmu = group_weight(gm, mu)
    out = []
    bound = _entry_bound(content)
    for t in enumerate_spinor(g, gn, nu, NATURAL, content=content):
        ok = True
        for i in range(0, bound + 1):
            if t.eps(i) > pair_with_coroot(wmu, i, g):
                ok = False
                break
        if ok:
            out.append(t)
    return len(out) if as_count else out


def lr_set_branch(gtype: str, group: GroupSpec, mu, lam,
                  as_count: bool = False):
    """Highest elements of the type-A subcrystals of shape conjugate(lam)
    inside the crystal attached to (mu, n); their number is the branching
    multiplicity of mu in the lam-module of the general linear group."""
    g = base_type(gtype)
    mu, lam = normalize(mu), normalize(lam)
    if not in_group_range(mu, group):
        raise ValueError(f"{mu} is not a valid highest weight for {group}")
    content = conjugate(lam)
    if not content:
        content = (0,)
    out = []
    for t in enumerate_spinor(g, group, mu, NATURAL, content=content):
        if is_lattice_word(t.word()):
            out.append(t)
    return len(out) if as_count else out


def family_for_checked(gtype: str, n: int) -> GroupSpec:
    from .groups import family_for

    return family_for(gtype, n)


def branch_table(gtype: str, group: GroupSpec, lam) -> dict:
    """All mu with nonzero branching multiplicity for the given lam."""
    lam = normalize(lam)
    out = {}
    for mu in partitions_upto(sum(lam)):
        if not in_group_range(mu, group):
            continue
        cnt = lr_set_branch(gtype, group, mu, lam, as_count=True)
        if cnt:
            out[mu] = cnt
    return out


def stable_branch_count(gtype: str, lam, mu) -> int:
    """Sum of LR coefficients over the type family; equals the branching
    multiplicity in the stable range."""
    from .partitions import partitions

    lamc, muc = conjugate(lam), conjugate(mu)
    rest = sum(lamc) - sum(muc)
    if rest < 0:
        return 0
    return sum(lr_coef(lamc, delta, muc)
               for delta in partitions(rest)
               if is_type_partition(delta, gtype))


def stable_tensor_count(gtype: str, lam, mu, nu) -> int:
    """Sum of products of LR coefficients over the type family; equals the
    tensor multiplicity in the stable range."""
    from .partitions import partitions

    lamc, muc, nuc = conjugate(lam), conjugate(mu), conjugate(nu)
    dsize = sum(lamc) - sum(muc) - sum(nuc)
    if dsize < 0:
        return 0
    total = 0
    for delta in partitions(dsize):
        if not is_type_partition(delta, gtype):
            continue
        gsize = sum(muc) + dsize
        for gamma in partitions(gsize):
            c1 = lr_coef(gamma, muc, delta)
            if not c1:
                continue
            c2 = lr_coef(lamc, gamma, nuc)
            if c2:
                total += c1 * c2
    return total


# ---------------------------------------------------------------------------
# rotated-shape LR companions

def canonical_rotated(delta) -> Tableau:
    """The unique rotated-shape tableau equivalent to the highest tableau of
    delta: each column holds 1..h from the top."""
    delta = normalize(delta)
    heights = list(conjugate(delta))
    heights.reverse()
    cols = [tuple(range(1, h + 1)) for h in heights]
    return tableau_from_bottom_columns(cols)


def lr_bodies(delta, mu, gamma):
    """Rotated-shape tableaux of shape delta(rotated) with content
    gamma - mu and raising bounds from mu; counted by c^gamma_{mu,delta}."""
    delta, mu, gamma = normalize(delta), normalize(mu), normalize(gamma)
    if sum(gamma) != sum(mu) + sum(delta) or not contains(gamma, mu):
        return []
    width = max(len(gamma), 1)
    content = tuple(part(gamma, i) - part(mu, i) for i in range(1, width + 1))
    if any(c < 0 for c in content):
        return []
    out = []
    for t in ssyt(Shape.rotated_of(delta), content=content):
        w = t.column_word()
        if all(eps_word(w, i) <= part(mu, i) - part(mu, i + 1)
               for i in range(1, width + 1)):
            out.append(t)
    return out


# ---------------------------------------------------------------------------
# the stable bijections

@dataclass(frozen=True)
class StableTensorImage:
    body: Tableau
    tail: Tableau
    gamma: tuple[int, ...]
    delta: tuple[int, ...]


def _stable_range_tensor(lam, m: int, n: int) -> bool:
    return 2 * length(normalize(lam)) <= min(m, n)


def stable_tensor_forward(t: SpinorTableau, m: int, lam, mu) -> StableTensorImage:
    """Send an element of the generalized LR set to its (body, tail) pair of
    classical LR tableaux.  Requires the stable range."""
    lam, mu = normalize(lam), normalize(mu)
    n = t.group.n
    if not _stable_range_tensor(lam, m, n):
        raise ValueError("outside the stable range")
    pair = body_tail_split(t)
    if not (pair.body_valid and pair.tail_valid):
        raise ValueError("body/tail decomposition failed; not an LR element?")
    muc = conjugate(mu)
    gamma = _sum_partition(muc, pair.body.content())
    return StableTensorImage(pair.body, pair.tail, gamma, pair.delta)


def _sum_partition(base, content) -> tuple[int, ...]:
    width = max(len(base), len(content))
    out = tuple(part(base, i) + (content[i - 1] if i <= len(content) else 0)
                for i in range(1, width + 1))
    return normalize(out)


def _slot_columns(body: Tableau, nslots: int):
    """Distribute the body columns into n right-aligned slots."""
    cols = body.columns() if body.shape.outer else []
    slots = [()] * nslots
    for j, col in enumerate(cols):
        slots[nslots - len(cols) + j] = tuple(col)
    return slots


def _assemble(gtype: str, group: GroupSpec, lam, body: Tableau, tail: Tableau,
              alphabet: GradedAlphabet = NATURAL) -> SpinorTableau:
    """Rebuild a spinor tableau from body columns (paired two per standard
    factor, rightmost to the trailing single-column factor when n is odd)
    and tail columns."""
    g = base_type(gtype)
    lam = normalize(lam)
    kinds = factor_profile(g, group, lam)
    n = group.n
    slots = _slot_columns(body, n)
    tail_cols = tail.columns() if tail.shape.outer else []
    cols = []
    for i, kind in enumerate(kinds):
        if kind[0] == "sp":
            if 2 * i != n - 1:
                raise AssertionError("single-column factor out of place")
            cols.append(SpinorColumn(g, "sp", slots[n - 1]))
            continue
        if kind[0] != "std":
            raise ValueError("profile outside the stable range")
        lcol, rcol = slots[2 * i], slots[2 * i + 1]
        tcol = tuple(tail_cols[i]) if i < len(tail_cols) else ()
        if kind[1] != len(tcol):
            raise AssertionError("tail column does not match the profile")
        col = SpinorColumn(g, "std", lcol + tcol, rcol, len(tcol))
        col.validate(alphabet)
        cols.append(col)
    t = SpinorTableau(g, group, lam, tuple(cols), alphabet)
    t.validate()
    return t


def stable_tensor_inverse(gtype: str, m: int, n: int, lam, mu, nu,
                          body: Tableau, tail: Tableau) -> SpinorTableau:
    """Reassemble the LR element from its (body, tail) image."""
    g = base_type(gtype)
    lam, mu, nu = normalize(lam), normalize(mu), normalize(nu)
    if not _stable_range_tensor(lam, m, n):
        raise ValueError("outside the stable range")
    gn = family_for_checked(g, n)
    _check_tensor_pair(g, lam, mu, nu, body, tail)
    t = _assemble(g, gn, nu, body, tail)
    muc = conjugate(mu)
    wmu = group_weight(family_for_checked(g, m), mu)
    lamc = conjugate(lam)
    width = max(len(lamc), 1)
    got = t.content(width)
    want = tuple(part(lamc, i) - part(muc, i) for i in range(1, width + 1))
    if got != want:
        raise ValueError("weight condition fails for the assembled element")
    for i in range(0, _entry_bound(want) + 1):
        if t.eps(i) > pair_with_coroot(wmu, i, g):
            raise ValueError("string condition fails for the assembled element")
    return t


def _check_tensor_pair(g, lam, mu, nu, body: Tableau, tail: Tableau) -> None:
    muc, nuc, lamc = conjugate(mu), conjugate(nu), conjugate(lam)
    delta = conjugate(tuple(sorted(
        (len(c) for c in body.columns() if c), reverse=True))) \
        if body.shape.outer else ()
    if not is_type_partition(delta, g):
        raise ValueError(f"body shape {delta} is not in the type family")
    if tail.shape.outer != nuc or tail.shape.inner != ():
        raise ValueError(f"tail must have straight shape {nuc}")
    gamma = _sum_partition(muc, body.content())  # raises unless a partition
    w = body.column_word()
    for i in range(1, max(len(gamma), 1) + 1):
        if eps_word(w, i) > part(muc, i) - part(muc, i + 1):
            raise ValueError("body is not an LR tableau for mu")
    width = max(len(lamc), len(gamma), 1)
    if tail.content(width) != tuple(part(lamc, i) - part(gamma, i)
                                    for i in range(1, width + 1)):
        raise ValueError("tail content does not match")
    wt = tail.column_word()
    for i in range(1, width + 1):
        if eps_word(wt, i) > part(gamma, i) - part(gamma, i + 1):
            raise ValueError("tail is not an LR tableau for gamma")


def stable_branch_forward(t: SpinorTableau, lam):
    """Drop the forced body; returns (tail, delta)."""
    lam = normalize(lam)
    if 2 * length(lam) > t.group.n:
        raise ValueError("outside the stable range")
    pair = body_tail_split(t)
    if not (pair.body_valid and pair.tail_valid):
        raise ValueError("body/tail decomposition failed; not an LR element?")
    if pair.body is not None and pair.body.shape.outer:
        if insert_word(pair.body.column_word()) != highest_tableau(pair.delta):
            raise AssertionError("body is not equivalent to a highest tableau")
    return pair.tail, (pair.delta or ())


def stable_branch_inverse(gtype: str, group: GroupSpec, mu, lam,
                          tail: Tableau, delta) -> SpinorTableau:
    """Rebuild the unique preimage from a tail and the body shape delta."""
    g = base_type(gtype)
    mu, lam, delta = normalize(mu), normalize(lam), normalize(delta)
    if 2 * length(lam) > group.n:
        raise ValueError("outside the stable range")
    if not is_type_partition(delta, g):
        raise ValueError(f"{delta} is not in the type family")
    body = canonical_rotated(delta)
    t = _assemble(g, group, mu, body, tail)
    lamc = conjugate(lam)
    if t.content(max(len(lamc), 1)) != tuple(
            part(lamc, i) for i in range(1, max(len(lamc), 1) + 1)):
        raise ValueError("content does not match the branching weight")
    if not is_lattice_word(t.word()):
        raise ValueError("assembled element is not a highest element")
    return t


# ---------------------------------------------------------------------------
# iterated tensor products of general linear modules

def _multi_lr(lams, lam) -> int:
    """Multiplicity of lam in the iterated product of the given shapes."""
    lams = [normalize(p) for p in lams]
    lam = normalize(lam)
    acc = {lams[0]: 1} if lams else {(): 1}
    for nxt in lams[1:]:
        new: dict = {}
        total = None
        for sigma, cnt in acc.items():
            size = sum(sigma) + sum(nxt)
            for rho in partitions_upto(size):
                if sum(rho) != size:
                    continue
                c = lr_coef(rho, sigma, nxt)
                if c:
                    new[rho] = new.get(rho, 0) + cnt * c
        acc = new
    return acc.get(lam, 0)


def gl_tensor_restriction(gtype: str, group: GroupSpec, lams, mu) -> int:
    """Multiplicity of the mu-module of the group inside an iterated tensor
    product of general linear modules."""
    g = base_type(gtype)
    mu = normalize(mu)
    lams = [normalize(p) for p in lams]
    total_size = sum(sum(p) for p in lams)
    out = 0
    for lam in partitions_upto(total_size, max_length=group.n):
        if sum(lam) != total_size:
            continue
        c = _multi_lr(lams, lam)
        if not c:
            continue
        b = lr_set_branch(g, group, mu, lam, as_count=True)
        if b:
            out += b * c
    return out
