"""Spinor tableaux: admissible sequences of spinor columns realizing the
highest-weight crystals of the classical affine types, with their crystal
operators and bounded enumeration."""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .alphabets import NATURAL, GradedAlphabet
from .columns import (SpinorColumn, col0_eps, col0_lower, col0_phi,
                      col0_raise, empty_column, heights_allowed,
                      is_admissible, residue)
from .groups import GroupSpec, Weight, epsilon, in_group_range
from .partitions import base_type, conjugate, normalize, part
from .tableaux import lower_position, raise_position, word_content

# factor kinds: ("std", a) | ("dbar",) | ("sp", sign) with sign in {0, +1, -1}
FactorKind = tuple


def factor_profile(gtype: str, group: GroupSpec, lam) -> tuple[FactorKind, ...]:
    """The sequence of factor kinds hosting a highest weight lam."""
    g = base_type(gtype)
    lam = normalize(lam)
    if g != group.gtype:
        raise ValueError(f"type {gtype!r} does not pair with {group.family}")
    if not in_group_range(lam, group):
        raise ValueError(f"{lam} is not a valid highest weight for {group}")
    n = group.n
    if group.family == "Sp" or group.family == "Pin":
        return tuple(("std", part(lam, i)) for i in range(1, n // 2 + 1))
    if group.family == "Spin":
        stds = tuple(("std", part(lam, i)) for i in range(1, (n - 1) // 2 + 1))
        return stds + (("sp", 0),)
    # type d / O_n
    ell = len(lam)
    if n - 2 * ell >= 0:
        q, r = divmod(n - 2 * ell, 2)
        return (
            tuple(("std", lam[i]) for i in range(ell))
            + (("std", 0),) * q
            + (("sp", 1),) * r
        )
    q, r = divmod(2 * ell - n, 2)
    lamc = conjugate(lam)
    barc = (n - ell,) + lamc[1:]
    bar = conjugate(barc)
    m = n - ell
    return (
        tuple(("std", part(bar, i)) for i in range(1, m + 1))
        + (("dbar",),) * q
        + (("sp", -1),) * r
    )


def highest_column(gtype: str, kind: FactorKind) -> SpinorColumn:
    g = base_type(gtype)
    if kind[0] == "std":
        a = kind[1]
        return SpinorColumn(g, "std", tuple(range(1, a + 1)), (), a)
    if kind[0] == "dbar":
        return SpinorColumn(g, "dbar", (1,), (1,))
    sign = kind[1]
    return SpinorColumn(g, "sp", (1,) if sign == -1 else ())


def column_kind(col: SpinorColumn) -> FactorKind:
    if col.variant == "std":
        return ("std", col.a)
    if col.variant == "dbar":
        return ("dbar",)
    return ("sp", 0)


def _kind_matches(col: SpinorColumn, kind: FactorKind) -> bool:
    if col.variant != kind[0]:
        return False
    if kind[0] == "std":
        return col.a == kind[1]
    if kind[0] == "sp" and kind[1] != 0:
        return len(col.left) % 2 == (0 if kind[1] == 1 else 1)
    return True


@dataclass(frozen=True)
class SpinorTableau:
    gtype: str
    group: GroupSpec
    lam: tuple[int, ...]
    columns: tuple[SpinorColumn, ...]
    alphabet: GradedAlphabet = field(default=NATURAL)

    def __post_init__(self):
        object.__setattr__(self, "gtype", base_type(self.gtype))
        object.__setattr__(self, "lam", normalize(self.lam))
        object.__setattr__(self, "columns", tuple(self.columns))

    def profile(self) -> tuple[FactorKind, ...]:
        return factor_profile(self.gtype, self.group, self.lam)

    def validate(self) -> None:
        kinds = self.profile()
        if len(kinds) != len(self.columns):
            raise ValueError("factor count does not match the profile")
        for col, kind in zip(self.columns, kinds):
            col.validate(self.alphabet)
            if not _kind_matches(col, kind):
                raise ValueError(f"column {col} does not match factor {kind}")
        for t, s in zip(self.columns, self.columns[1:]):
            if not is_admissible(t, s, self.alphabet):
                raise ValueError(f"inadmissible pair ({t}, {s})")

    def word(self) -> tuple[int, ...]:
        out = []
        for col in reversed(self.columns):
            out.extend(col.word())
        return tuple(out)

    def content(self, m: int | None = None) -> tuple[int, ...]:
        return word_content(self.word(), m)

    def nboxes(self) -> int:
        return sum(col.nboxes() for col in self.columns)

    def weight(self) -> Weight:
        lam0 = Fraction(0)
        eps = epsilon(self.gtype)
        for col in self.columns:
            lam0 += Fraction(1) if col.variant == "sp" else Fraction(2, eps)
        return Weight(lam0, self.content())

    def sort_key(self):
        return tuple((c.variant, c.a, c.left, c.right) for c in self.columns)

    # crystal operators -----------------------------------------------------
    def e(self, i: int) -> "SpinorTableau | None":
        return _raise_op(self, i) if i == 0 else _letter_op(self, i, raising=True)

    def f(self, i: int) -> "SpinorTableau | None":
        return _lower_op(self, i) if i == 0 else _letter_op(self, i, raising=False)

    def eps(self, i: int) -> int:
        if i == 0:
            return _string_length(self, raising=True)
        from .tableaux import eps_word

        return eps_word(self.word(), i)

    def phi(self, i: int) -> int:
        if i == 0:
            return _string_length(self, raising=False)
        from .tableaux import phi_word

        return phi_word(self.word(), i)

    def to_json(self) -> dict:
        return {
            "type": self.gtype,
            "group": self.group.to_json(),
            "lambda": list(self.lam),
            "columns": [c.to_json(self.alphabet) for c in self.columns],
        }

    @classmethod
    def from_json(cls, data, alphabet: GradedAlphabet = NATURAL) -> "SpinorTableau":
        gtype = data["type"]
        return cls(
            gtype,
            GroupSpec.from_json(data["group"]),
            tuple(data["lambda"]),
            tuple(SpinorColumn.from_json(c, gtype, alphabet) for c in data["columns"]),
            alphabet,
        )


def highest_spinor(gtype: str, group: GroupSpec, lam,
                   alphabet: GradedAlphabet = NATURAL) -> SpinorTableau:
    kinds = factor_profile(gtype, group, lam)
    cols = tuple(highest_column(gtype, k) for k in kinds)
    return SpinorTableau(gtype, group, lam, cols, alphabet)


# ---------------------------------------------------------------------------
# crystal operators

def _letter_op(t: SpinorTableau, i: int, raising: bool) -> SpinorTableau | None:
    word = []
    where = []
    for idx in range(len(t.columns) - 1, -1, -1):
        col = t.columns[idx]
        for p, x in enumerate(col.right):
            word.append(x)
            where.append((idx, "R", p))
        for p, x in enumerate(col.left):
            word.append(x)
            where.append((idx, "L", p))
    pos = raise_position(word, i) if raising else lower_position(word, i)
    if pos is None:
        return None
    idx, side, p = where[pos]
    col = t.columns[idx]
    new_value = i if raising else i + 1
    if side == "R":
        new_col = SpinorColumn(col.gtype, col.variant, col.left,
                               col.right[:p] + (new_value,) + col.right[p + 1:], col.a)
    else:
        new_col = SpinorColumn(col.gtype, col.variant,
                               col.left[:p] + (new_value,) + col.left[p + 1:],
                               col.right, col.a)
    new_col.validate(t.alphabet)
    cols = t.columns[:idx] + (new_col,) + t.columns[idx + 1:]
    return SpinorTableau(t.gtype, t.group, t.lam, cols, t.alphabet)


def _factor_eps0_phi0(col: SpinorColumn) -> tuple[int, int]:
    g = col.gtype
    if col.variant == "sp":
        return col0_eps(col.left, g), col0_phi(col.left, g)
    if g == "c":
        ep = 1 if col.right and col.left and col.left[0] == 1 and col.right[0] == 1 else 0
        ph = 1 if col.nboxes() == 0 or col.left[0] > 1 else 0
        return ep, ph
    ep_r, ph_r = col0_eps(col.right, g), col0_phi(col.right, g)
    ep_l, ph_l = col0_eps(col.left, g), col0_phi(col.left, g)
    return ep_r + max(0, ep_l - ph_r), ph_l + max(0, ph_r - ep_l)


def _factor_raise0(col: SpinorColumn) -> SpinorColumn | None:
    g = col.gtype
    if col.variant == "sp":
        new = col0_raise(col.left, g)
        return None if new is None else SpinorColumn(g, "sp", new)
    if g == "c":
        if not (col.right and col.left and col.left[0] == 1 and col.right[0] == 1):
            return None
        return SpinorColumn(g, "std", col.left[1:], col.right[1:], col.a)
    ep_l = col0_eps(col.left, g)
    ph_r = col0_phi(col.right, g)
    if ph_r >= ep_l:
        new = col0_raise(col.right, g)
        if new is None:
            return None
        return SpinorColumn(g, col.variant, col.left, new, col.a)
    new = col0_raise(col.left, g)
    if new is None:
        return None
    return SpinorColumn(g, col.variant, new, col.right, col.a)


def _factor_lower0(col: SpinorColumn) -> SpinorColumn | None:
    g = col.gtype
    if col.variant == "sp":
        new = col0_lower(col.left, g)
        return None if new is None else SpinorColumn(g, "sp", new)
    if g == "c":
        if col.nboxes() and col.left[0] == 1:
            return None
        return SpinorColumn(g, "std", (1,) + col.left, (1,) + col.right, col.a)
    ep_l = col0_eps(col.left, g)
    ph_r = col0_phi(col.right, g)
    if ph_r > ep_l:
        new = col0_lower(col.right, g)
        if new is None:
            return None
        return SpinorColumn(g, col.variant, col.left, new, col.a)
    new = col0_lower(col.left, g)
    if new is None:
        return None
    return SpinorColumn(g, col.variant, new, col.right, col.a)


def _signature_owner(marks, raising: bool) -> int | None:
    """Expand (eps, phi) factor marks and pick the owner of the acting
    position: rightmost surviving minus for raising, leftmost surviving
    plus for lowering."""
    plus_stack = []
    minus = []
    for owner, (ep, ph) in marks:
        for _ in range(ep):
            if plus_stack:
                plus_stack.pop()
            else:
                minus.append(owner)
        for _ in range(ph):
            plus_stack.append(owner)
    if raising:
        return minus[-1] if minus else None
    return plus_stack[0] if plus_stack else None


def _raise_op(t: SpinorTableau, _i: int = 0) -> SpinorTableau | None:
    marks = [(idx, _factor_eps0_phi0(t.columns[idx]))
             for idx in range(len(t.columns) - 1, -1, -1)]
    owner = _signature_owner(marks, raising=True)
    if owner is None:
        return None
    new_col = _factor_raise0(t.columns[owner])
    if new_col is None:
        return None
    new_col.validate(t.alphabet)
    cols = t.columns[:owner] + (new_col,) + t.columns[owner + 1:]
    return SpinorTableau(t.gtype, t.group, t.lam, cols, t.alphabet)


def _lower_op(t: SpinorTableau, _i: int = 0) -> SpinorTableau | None:
    marks = [(idx, _factor_eps0_phi0(t.columns[idx]))
             for idx in range(len(t.columns) - 1, -1, -1)]
    owner = _signature_owner(marks, raising=False)
    if owner is None:
        return None
    new_col = _factor_lower0(t.columns[owner])
    if new_col is None:
        return None
    new_col.validate(t.alphabet)
    cols = t.columns[:owner] + (new_col,) + t.columns[owner + 1:]
    return SpinorTableau(t.gtype, t.group, t.lam, cols, t.alphabet)


def _string_length(t: SpinorTableau, raising: bool) -> int:
    k = 0
    cur = t
    while True:
        cur = cur.e(0) if raising else cur.f(0)
        if cur is None:
            return k
        k += 1


# ---------------------------------------------------------------------------
# candidate columns and enumeration

def _alphabet_key(alphabet: GradedAlphabet):
    return (alphabet.names, alphabet.parities)


@lru_cache(maxsize=None)
def _columns_of_height(h: int, key, max_letter: int) -> tuple[tuple[int, ...], ...]:
    alphabet = GradedAlphabet(*key)

    def rec(prev, length):
        if length == 0:
            yield ()
            return
        for v in range(1, max_letter + 1):
            if prev is not None and not alphabet.col_le(prev, v):
                continue
            for rest in rec(v, length - 1):
                yield (v,) + rest

    return tuple(rec(None, h))


@lru_cache(maxsize=None)
def _candidates(gtype: str, kind: FactorKind, key, budget: int
                ) -> tuple[SpinorColumn, ...]:
    """All valid columns of the given kind with at most `budget` boxes."""
    alphabet = GradedAlphabet(*key)
    k = alphabet.size
    if k is None:
        raise ValueError("enumeration needs a bounded alphabet")
    strict_cols = alphabet.all_even()
    out = []
    g = base_type(gtype)
    if kind[0] == "sp":
        sign = kind[1]
        for h in range(0, budget + 1):
            if strict_cols and h > k:
                break
            if sign == 1 and h % 2 == 1:
                continue
            if sign == -1 and h % 2 == 0:
                continue
            for colv in _columns_of_height(h, key, k):
                out.append(SpinorColumn(g, "sp", colv))
        out.sort(key=lambda s: (len(s.left), s.left))
        return tuple(out)
    if kind[0] == "dbar":
        a, variant = 0, "dbar"
        ov_range = range(1, budget + 1, 2)  # overlap = c + 1, c even
    else:
        a, variant = kind[1], "std"
        ov_range = range(0, budget + 1)
    for ov in ov_range:
        hl = a + ov
        if strict_cols and hl > k:
            break
        if hl + ov > budget:
            break
        bmax = budget - hl - ov
        if strict_cols:
            bmax = min(bmax, k - ov)
        for b in range(0, bmax + 1):
            if variant == "dbar":
                if not heights_ok_dbar(b, ov):
                    continue
            elif not heights_allowed(g, b, ov):
                continue
            hr = b + ov
            for lv in _columns_of_height(hl, key, k):
                for rv in _columns_of_height(hr, key, k):
                    ok = all(alphabet.row_le(lv[j], rv[b + j]) for j in range(ov))
                    if not ok:
                        continue
                    col = SpinorColumn(g, variant, lv, rv, a)
                    if variant == "std" and residue(col, alphabet) > (
                            1 if g == "d" else 0):
                        continue
                    out.append(col)
    out.sort(key=lambda s: (s.b, s.overlap, s.left, s.right))
    return tuple(out)


def heights_ok_dbar(b: int, ov: int) -> bool:
    return b >= 0 and b % 2 == 0 and (ov - 1) >= 0 and (ov - 1) % 2 == 0


def _kind_min_boxes(kind: FactorKind) -> int:
    if kind[0] == "std":
        return kind[1]
    if kind[0] == "dbar":
        return 2
    return 1 if kind[1] == -1 else 0


def enumerate_spinor(gtype: str, group: GroupSpec, lam,
                     alphabet: GradedAlphabet = NATURAL,
                     max_boxes: int | None = None,
                     content=None,
                     limit: int | None = None):
    """Yield the spinor tableaux for (gtype, group, lam) with entries in the
    alphabet, at most max_boxes boxes, and optionally exact content."""
    g = base_type(gtype)
    kinds = factor_profile(g, group, lam)
    key = _alphabet_key(alphabet)
    if content is not None:
        content = tuple(content)
        if alphabet.size is not None and len(content) > alphabet.size:
            if any(content[alphabet.size:]):
                return
            content = content[: alphabet.size]
        total = sum(content)
        max_boxes = total if max_boxes is None else min(max_boxes, total)
    if alphabet.size is None:
        if content is None:
            raise ValueError("unbounded alphabet needs a content filter")
        key = (tuple(str(i) for i in range(1, len(content) + 1)),
               (0,) * len(content))
    if max_boxes is None:
        if not alphabet.all_even() or alphabet.size is None:
            raise ValueError("graded enumeration needs max_boxes or content")
        max_boxes = 2 * alphabet.size * len(kinds)
    suffix_min = [0] * (len(kinds) + 1)
    for i in range(len(kinds) - 1, -1, -1):
        suffix_min[i] = suffix_min[i + 1] + _kind_min_boxes(kinds[i])
    # strict columns bound a factor at 2k boxes; normalizing the cap keeps
    # the candidate cache shared across enumerations
    cand_cap = max_boxes
    if alphabet.all_even():
        k_sz = alphabet.size if alphabet.size is not None else len(content)
        cand_cap = min(cand_cap, 2 * k_sz)

    found = 0
    remaining = list(content) if content is not None else None

    def fits_content(col: SpinorColumn) -> bool:
        counts: dict[int, int] = {}
        for x in col.left + col.right:
            counts[x] = counts.get(x, 0) + 1
        for x, cnt in counts.items():
            if x > len(remaining) or remaining[x - 1] < cnt:
                return False
        return True

    def take(col: SpinorColumn, sign: int) -> None:
        for x in col.left + col.right:
            remaining[x - 1] -= sign

    def rec(i: int, prev: SpinorColumn | None, boxes_left: int):
        nonlocal found
        if limit is not None and found >= limit:
            return
        if i == len(kinds):
            if remaining is None or not any(remaining):
                found += 1
                yield SpinorTableau(g, group, lam, tuple(stack), alphabet)
            return
        budget = boxes_left - suffix_min[i + 1]
        for col in _candidates(g, kinds[i], key, cand_cap):
            if col.nboxes() > budget:
                continue
            if remaining is not None and not fits_content(col):
                continue
            if prev is not None and not is_admissible(prev, col, alphabet):
                continue
            if remaining is not None:
                take(col, 1)
            stack.append(col)
            yield from rec(i + 1, col, boxes_left - col.nboxes())
            stack.pop()
            if remaining is not None:
                take(col, -1)
            if limit is not None and found >= limit:
                return

    stack: list[SpinorColumn] = []
    yield from rec(0, None, max_boxes)


def crystal_set(gtype: str, group: GroupSpec, lam, k: int) -> list[SpinorTableau]:
    """The finite truncation with entries bounded by k, as a list."""
    lam = normalize(lam)
    if lam and lam[0] > k:
        raise ValueError("entry bound must be at least the largest part")
    return list(enumerate_spinor(gtype, group, lam, GradedAlphabet.natural(k)))
