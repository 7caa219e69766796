"""Spinor columns: at-most-two-column tableaux, their residue, the two
sliding algorithms, and the admissibility relation between neighbours.

A standard column of tail height a occupies a skew shape with left column
of height a+c and right column of height b+c; the left column extends a
rows below the right one.  Columns are stored top to bottom.  U(i) denotes
the i-th entry from the bottom throughout.
"""

from dataclasses import dataclass
from functools import lru_cache

from .alphabets import NATURAL, GradedAlphabet
from .partitions import base_type

VARIANTS = ("std", "sp", "dbar")


def heights_allowed(gtype: str, b: int, c: int) -> bool:
    """Allowed (b, c) pairs for standard two-column shapes."""
    g = base_type(gtype)
    if b < 0 or c < 0:
        return False
    if g == "c":
        return b == 0
    if g == "d":
        return b % 2 == 0 and c % 2 == 0
    return True


def max_residue(gtype: str) -> int:
    return 1 if base_type(gtype) == "d" else 0


@dataclass(frozen=True)
class SpinorColumn:
    gtype: str
    variant: str  # std | sp | dbar
    left: tuple[int, ...]
    right: tuple[int, ...] = ()
    a: int = 0  # tail height (std only)

    def __post_init__(self):
        object.__setattr__(self, "gtype", base_type(self.gtype))
        object.__setattr__(self, "left", tuple(self.left))
        object.__setattr__(self, "right", tuple(self.right))
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")

    # shape parameters -----------------------------------------------------
    @property
    def overlap(self) -> int:
        return len(self.left) - self.a

    @property
    def b(self) -> int:
        return len(self.right) - self.overlap

    @property
    def c(self) -> int:
        return self.overlap if self.variant != "dbar" else self.overlap - 1

    def tail(self) -> tuple[int, ...]:
        """Boxes below the two-column body: the bottom a left entries for a
        standard column, the bottom row for the other variants."""
        if self.variant == "std":
            return self.left[self.overlap:]
        if self.variant == "sp":
            return self.left[-1:] if len(self.left) % 2 == 1 else ()
        return self.left[-1:]  # dbar: left box of the bottom row

    def word(self) -> tuple[int, ...]:
        return self.right + self.left

    def nboxes(self) -> int:
        return len(self.left) + len(self.right)

    def bottom_up(self, side: str, i: int) -> int | None:
        col = self.left if side == "L" else self.right
        return col[len(col) - i] if 1 <= i <= len(col) else None

    def validate(self, alphabet: GradedAlphabet = NATURAL) -> None:
        if not alphabet.is_column(self.left) or not alphabet.is_column(self.right):
            raise ValueError(f"columns not increasing: {self}")
        if self.variant == "sp":
            if self.right or self.a:
                raise ValueError("single-column variant carries one column")
            return
        ov = self.overlap
        if self.a < 0 or ov < 0 or len(self.right) < ov:
            raise ValueError(f"bad column heights: {self}")
        b = self.b
        if self.variant == "dbar":
            if self.gtype != "d" or self.a or ov < 1:
                raise ValueError(f"invalid dbar column: {self}")
            if not heights_allowed("d", b, ov - 1):
                raise ValueError(f"dbar heights not allowed: {self}")
        else:
            if not heights_allowed(self.gtype, b, ov):
                raise ValueError(f"heights (b={b}, c={ov}) not allowed for {self.gtype}")
        # rows of the overlapped region weakly increase
        for j in range(ov):
            if not alphabet.row_le(self.left[j], self.right[b + j]):
                raise ValueError(f"overlap row fails: {self}")
        if self.variant == "std" and residue(self, alphabet) > max_residue(self.gtype):
            raise ValueError(f"residue too large: {self}")

    def to_json(self, alphabet: GradedAlphabet = NATURAL) -> dict:
        if self.variant == "sp":
            return {"variant": "sp", "column": [alphabet.name(x) for x in self.left]}
        name = "standard" if self.variant == "std" else "dbar_zero"
        return {
            "variant": name,
            "a": self.a,
            "b": self.b,
            "c": self.c,
            "left": [alphabet.name(x) for x in self.left],
            "right": [alphabet.name(x) for x in self.right],
        }

    @classmethod
    def from_json(cls, data, gtype: str, alphabet: GradedAlphabet = NATURAL):
        if data["variant"] == "sp":
            return cls(gtype, "sp", tuple(alphabet.letter(x) for x in data["column"]))
        variant = "std" if data["variant"] == "standard" else "dbar"
        return cls(
            gtype,
            variant,
            tuple(alphabet.letter(x) for x in data["left"]),
            tuple(alphabet.letter(x) for x in data["right"]),
            int(data.get("a", 0)),
        )


def empty_column(gtype: str) -> SpinorColumn:
    return SpinorColumn(gtype, "std", (), (), 0)


@lru_cache(maxsize=1 << 16)
def residue(col: SpinorColumn, alphabet: GradedAlphabet = NATURAL) -> int:
    """Maximal downward slide of the right column keeping semistandardness;
    height parity for single columns."""
    if col.variant == "sp":
        return len(col.left) % 2
    if col.variant == "dbar":
        raise ValueError("residue is not defined for dbar columns")
    b, ov = col.b, col.overlap
    best = 0
    for k in range(1, min(col.a, b) + 1):
        ok = True
        for j in range(ov + k):
            if not alphabet.row_le(col.left[j], col.right[b - k + j]):
                ok = False
                break
        if ok:
            best = k
    return best


def _slide_rows(col: SpinorColumn):
    """Absolute row positions: left occupies rows b+1..b+len(left), right
    rows 1..len(right)."""
    b = col.b
    left_rows = {b + 1 + j: col.left[j] for j in range(len(col.left))}
    right_rows = {1 + j: col.right[j] for j in range(len(col.right))}
    return left_rows, right_rows


@lru_cache(maxsize=1 << 16)
def split_lr(col: SpinorColumn, alphabet: GradedAlphabet = NATURAL):
    """Slide the right-column boxes down as far as rows stay weakly
    increasing, then push every uncovered left box to the right.  Returns
    the resulting (left, right) columns, top to bottom."""
    left_rows, right_rows = _slide_rows(col)
    new_right: dict[int, int] = {}
    floor = max(left_rows) if left_rows else 0
    cap = floor
    for r0 in sorted(right_rows, reverse=True):
        y = right_rows[r0]
        if not left_rows:
            cap = r0
        rho = r0
        s = r0 + 1
        while s <= cap and (s not in left_rows or alphabet.row_le(left_rows[s], y)):
            rho = s
            s += 1
        new_right[rho] = y
        cap = rho - 1
    moved = [s for s in left_rows if s not in new_right]
    for s in moved:
        new_right[s] = left_rows.pop(s)
    lt = tuple(left_rows[s] for s in sorted(left_rows))
    rt = tuple(new_right[s] for s in sorted(new_right))
    return lt, rt


@lru_cache(maxsize=1 << 16)
def split_star(col: SpinorColumn, alphabet: GradedAlphabet = NATURAL):
    """Slide the left-column boxes up as far as rows stay weakly increasing,
    then pull the lowest uncovered right box to the left.  Defined only for
    residue one."""
    if col.variant != "std" or residue(col, alphabet) != 1:
        raise ValueError("upward split requires a standard column of residue 1")
    left_rows, right_rows = _slide_rows(col)
    new_left: dict[int, int] = {}
    cap = 1
    for r0 in sorted(left_rows):
        x = left_rows[r0]
        rho = r0
        s = r0 - 1
        while s >= cap and (s not in right_rows or alphabet.row_le(x, right_rows[s])):
            rho = s
            s -= 1
        new_left[rho] = x
        cap = rho + 1
    free = [s for s in sorted(right_rows) if s not in new_left]
    if not free:
        raise AssertionError(f"no right box can move left in {col}")
    s = free[-1]
    new_left[s] = right_rows.pop(s)
    lstar = tuple(new_left[s] for s in sorted(new_left))
    rstar = tuple(right_rows[s] for s in sorted(right_rows))
    return lstar, rstar


# ---------------------------------------------------------------------------
# admissibility

def _pairs_leq(upper: tuple[int, ...], lower: tuple[int, ...], shift: int,
               alphabet: GradedAlphabet) -> bool:
    """upper(i + shift) <= lower(i), indices from the bottom, required
    whenever both entries exist."""
    for i in range(1, len(lower) + 1):
        j = i + shift
        if j < 1:
            continue
        if j > len(upper):
            break
        if not alphabet.row_le(upper[len(upper) - j], lower[len(lower) - i]):
            return False
    return True


def _single_column_view(s: SpinorColumn):
    """Right factors that act as a bare column: single columns themselves and
    the left column of a dbar factor."""
    if s.variant == "sp":
        return s.left
    if s.variant == "dbar":
        return s.left
    return None


def _admissible_std(t: SpinorColumn, s: SpinorColumn,
                    alphabet: GradedAlphabet) -> bool:
    """The standard-left cases: t is a standard column, s is standard or acts
    as a single column.

    The effective tail height of a single-column right factor is its height
    parity in type d (the bottom box of an odd column is a tail box) and
    zero in type b.  The odd single-column case also shifts the starred
    comparison by one.  Both readings are pinned down by crystal closure
    and verified against the component oracle in the tests.
    """
    r_t = residue(t, alphabet)
    col = _single_column_view(s)
    if col is None:
        if t.a < s.a:
            return False
        r_s = residue(s, alphabet)
        a_s = s.a
        s_left = s.left
        ls, _ = split_lr(s, alphabet)
        sp_minus = 0
    else:
        r_s = len(col) % 2
        a_s = r_s if t.gtype == "d" else 0
        s_left = col
        ls = col
        sp_minus = 1 if r_s == 1 else 0
    if len(t.right) > len(s_left) - a_s + 2 * r_t * r_s:
        return False
    if r_t == 1 and r_s == 1:
        t_rstar = split_star(t, alphabet)[1]
        if not _pairs_leq(t_rstar, ls, 0, alphabet):
            return False
        s_lstar = col if col is not None else split_star(s, alphabet)[0]
        rt = split_lr(t, alphabet)[1]
        return _pairs_leq(rt, s_lstar, t.a - a_s + sp_minus, alphabet)
    if not _pairs_leq(t.right, ls, 0, alphabet):
        return False
    rt = split_lr(t, alphabet)[1]
    return _pairs_leq(rt, s_left, t.a - a_s, alphabet)


def _admissible_dbar(t: SpinorColumn, s: SpinorColumn,
                     alphabet: GradedAlphabet) -> bool:
    """dbar left factor: the pair (right column of t, left column of s) must
    itself form a valid dbar shape."""
    col = _single_column_view(s)
    if col is None:
        raise TypeError(f"pair ({t.variant}, {s.variant}) is not comparable")
    tr, sl = t.right, col
    if len(tr) % 2 == 0 or len(sl) % 2 == 0:
        raise AssertionError("dbar comparison expects odd column heights")
    if len(tr) > len(sl):
        return False
    return _pairs_leq(tr, sl, 0, alphabet)


@lru_cache(maxsize=1 << 18)
def is_admissible(t: SpinorColumn, s: SpinorColumn,
                  alphabet: GradedAlphabet = NATURAL) -> bool:
    """Whether the ordered pair of neighbouring factors is admissible."""
    if t.gtype != s.gtype:
        raise TypeError("factors of different types are not comparable")
    if t.variant == "std":
        if s.variant == "dbar" and t.gtype != "d":
            raise TypeError("dbar factors exist only in type d")
        return _admissible_std(t, s, alphabet)
    if t.variant == "dbar":
        if s.variant == "std":
            raise TypeError("a dbar factor cannot precede a standard one")
        if s.variant == "sp" and len(s.left) % 2 == 0:
            raise TypeError("a dbar factor must precede an odd single column")
        return _admissible_dbar(t, s, alphabet)
    raise TypeError("a single-column factor cannot precede another factor")


# ---------------------------------------------------------------------------
# affine operators on bare columns (all-even alphabet)

def col0_raise(column: tuple[int, ...], gtype: str):
    """Remove the type-specific top piece (one box for b, a 1-2 domino for
    d); None when absent."""
    g = base_type(gtype)
    if g == "b":
        return column[1:] if column[:1] == (1,) else None
    if g == "d":
        return column[2:] if column[:2] == (1, 2) else None
    raise ValueError("single-column operators exist for types b and d only")


def col0_lower(column: tuple[int, ...], gtype: str):
    g = base_type(gtype)
    if g == "b":
        return (1,) + column if (not column or column[0] > 1) else None
    if g == "d":
        return (1, 2) + column if (not column or column[0] > 2) else None
    raise ValueError("single-column operators exist for types b and d only")


def col0_eps(column: tuple[int, ...], gtype: str) -> int:
    return 0 if col0_raise(column, gtype) is None else 1


def col0_phi(column: tuple[int, ...], gtype: str) -> int:
    return 0 if col0_lower(column, gtype) is None else 1
