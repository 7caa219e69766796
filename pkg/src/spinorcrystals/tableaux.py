"""Semistandard tableaux over graded alphabets, column insertion, and the
type-A crystal structure on column words."""

from dataclasses import dataclass
from functools import lru_cache

from .alphabets import NATURAL, GradedAlphabet
from .partitions import conjugate, contains, normalize, part


@dataclass(frozen=True)
class Shape:
    outer: tuple[int, ...]
    inner: tuple[int, ...] = ()
    rotated: bool = False

    def __post_init__(self):
        object.__setattr__(self, "outer", normalize(self.outer))
        object.__setattr__(self, "inner", normalize(self.inner))
        if not contains(self.outer, self.inner):
            raise ValueError(f"inner shape {self.inner} not inside {self.outer}")

    @classmethod
    def straight(cls, lam) -> "Shape":
        return cls(normalize(lam))

    @classmethod
    def rotated_of(cls, mu) -> "Shape":
        """The 180-degree rotation of mu inside its bounding box."""
        mu = normalize(mu)
        if not mu:
            return cls((), (), True)
        ell, w = len(mu), mu[0]
        outer = (w,) * ell
        inner = tuple(w - mu[ell - i] for i in range(1, ell + 1))
        return cls(outer, inner, True)

    @property
    def nrows(self) -> int:
        return len(self.outer)

    @property
    def ncols(self) -> int:
        return self.outer[0] if self.outer else 0

    def row_span(self, r: int) -> tuple[int, int]:
        """Columns (first, last) occupied in 1-based row r."""
        return part(self.inner, r) + 1, part(self.outer, r)

    def ncells(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def column_heights(self) -> tuple[int, ...]:
        inner_c = conjugate(self.inner)
        outer_c = conjugate(self.outer)
        return tuple(outer_c[j] - part(inner_c, j + 1) for j in range(len(outer_c)))


@dataclass(frozen=True)
class Tableau:
    shape: Shape
    rows: tuple[tuple[int, ...], ...]  # row r holds columns inner_r+1..outer_r

    def __post_init__(self):
        if len(self.rows) != self.shape.nrows:
            raise ValueError("row count does not match shape")
        for r, row in enumerate(self.rows, start=1):
            lo, hi = self.shape.row_span(r)
            if len(row) != hi - lo + 1:
                raise ValueError(f"row {r} has wrong length")

    @classmethod
    def from_rows(cls, rows) -> "Tableau":
        rows = tuple(tuple(r) for r in rows if len(r) > 0)
        return cls(Shape.straight(tuple(len(r) for r in rows)), rows)

    def cell(self, r: int, c: int) -> int | None:
        """Entry at 1-based (row, column), None outside the shape."""
        if not (1 <= r <= self.shape.nrows):
            return None
        lo, hi = self.shape.row_span(r)
        if not (lo <= c <= hi):
            return None
        return self.rows[r - 1][c - lo]

    def column(self, c: int) -> tuple[int, ...]:
        """Entries of column c, top to bottom."""
        out = []
        for r in range(1, self.shape.nrows + 1):
            x = self.cell(r, c)
            if x is not None:
                out.append(x)
        return tuple(out)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(c) for c in range(1, self.shape.ncols + 1)]

    def column_word(self) -> tuple[int, ...]:
        """Read columns right to left, each top to bottom."""
        out = []
        for c in range(self.shape.ncols, 0, -1):
            out.extend(self.column(c))
        return tuple(out)

    def content(self, m: int | None = None) -> tuple[int, ...]:
        return word_content(self.column_word(), m)

    def size(self) -> int:
        return self.shape.ncells()

    def is_semistandard(self, alphabet: GradedAlphabet = NATURAL) -> bool:
        for r in range(1, self.shape.nrows + 1):
            lo, hi = self.shape.row_span(r)
            for c in range(lo, hi + 1):
                x = self.cell(r, c)
                right = self.cell(r, c + 1)
                if right is not None and not alphabet.row_le(x, right):
                    return False
                below = self.cell(r + 1, c)
                if below is not None and not alphabet.col_le(x, below):
                    return False
        return True

    def to_json(self, alphabet: GradedAlphabet = NATURAL) -> dict:
        return {
            "shape": {
                "outer": list(self.shape.outer),
                "inner": list(self.shape.inner),
                "rotated": self.shape.rotated,
            },
            "rows": [[alphabet.name(x) for x in row] for row in self.rows],
        }

    @classmethod
    def from_json(cls, data, alphabet: GradedAlphabet = NATURAL) -> "Tableau":
        sh = Shape(
            tuple(data["shape"]["outer"]),
            tuple(data["shape"].get("inner", ())),
            bool(data["shape"].get("rotated", False)),
        )
        rows = tuple(tuple(alphabet.letter(x) for x in row) for row in data["rows"])
        return cls(sh, rows)


def highest_tableau(lam) -> Tableau:
    """The tableau of shape lam whose row i is filled with i."""
    lam = normalize(lam)
    return Tableau.from_rows([(i,) * lam[i - 1] for i in range(1, len(lam) + 1)])


def tableau_from_columns(cols) -> Tableau:
    """Straight-shape tableau from top-aligned columns (heights weakly
    decreasing left to right)."""
    cols = [tuple(c) for c in cols]
    while cols and not cols[-1]:
        cols.pop()
    heights = [len(c) for c in cols]
    if any(heights[i] < heights[i + 1] for i in range(len(heights) - 1)):
        raise ValueError("column heights must weakly decrease")
    nrows = heights[0] if heights else 0
    rows = []
    for r in range(nrows):
        rows.append(tuple(c[r] for c in cols if len(c) > r))
    return Tableau.from_rows(rows)


def tableau_from_bottom_columns(cols) -> Tableau:
    """Rotated-shape tableau from bottom-aligned columns (heights weakly
    increasing left to right)."""
    cols = [tuple(c) for c in cols]
    while cols and not cols[0]:
        cols.pop(0)
    heights = [len(c) for c in cols]
    if any(heights[i] > heights[i + 1] for i in range(len(heights) - 1)):
        raise ValueError("column heights must weakly increase")
    if not cols:
        return Tableau(Shape((), (), True), ())
    # column heights determine the rotated shape via its conjugate
    mu_shape = conjugate(tuple(sorted(heights, reverse=True)))
    sh = Shape.rotated_of(mu_shape)
    nrows = max(heights)
    rows = []
    for r in range(nrows):
        row = []
        for c in cols:
            i = r - (nrows - len(c))
            if i >= 0:
                row.append(c[i])
        rows.append(tuple(row))
    return Tableau(sh, tuple(rows))


# ---------------------------------------------------------------------------
# words

def word_content(word, m: int | None = None) -> tuple[int, ...]:
    top = max(word, default=0) if m is None else m
    out = [0] * top
    for x in word:
        if x <= top:
            out[x - 1] += 1
    return tuple(out)


def eps_word(word, i: int) -> int:
    """Number of unbracketed letters i+1, bracketing i+1 against a later i."""
    plus = 0
    minus = 0
    for x in word:
        if x == i:
            plus += 1
        elif x == i + 1:
            if plus:
                plus -= 1
            else:
                minus += 1
    return minus


def phi_word(word, i: int) -> int:
    plus = 0
    for x in word:
        if x == i:
            plus += 1
        elif x == i + 1 and plus:
            plus -= 1
    return plus


def raise_position(word, i: int) -> int | None:
    """Position of the rightmost unbracketed i+1, the letter changed to i."""
    stack_plus = []
    minus = []
    for pos, x in enumerate(word):
        if x == i:
            stack_plus.append(pos)
        elif x == i + 1:
            if stack_plus:
                stack_plus.pop()
            else:
                minus.append(pos)
    return minus[-1] if minus else None


def lower_position(word, i: int) -> int | None:
    """Position of the leftmost unbracketed i, the letter changed to i+1."""
    stack_plus = []
    for pos, x in enumerate(word):
        if x == i:
            stack_plus.append(pos)
        elif x == i + 1 and stack_plus:
            stack_plus.pop()
    return stack_plus[0] if stack_plus else None


def is_lattice_word(word) -> bool:
    """Every prefix contains at least as many i as i+1, for every i."""
    counts: dict[int, int] = {}
    for x in word:
        counts[x] = counts.get(x, 0) + 1
        if counts.get(x, 0) > counts.get(x - 1, 0) and x > 1:
            return False
    return True


def is_type_a_highest(word) -> bool:
    return is_lattice_word(word)


def knuth_neighbors(word):
    """Words reachable by one elementary Knuth move.

    The moves are xzy ~ zxy (x <= y < z) and yxz ~ yzx (x < y <= z),
    applied to any window of three consecutive letters.
    """
    w = list(word)
    out = []
    for j in range(len(w) - 2):
        a, b, c = w[j], w[j + 1], w[j + 2]
        # swap the first two letters: (x,z,y) <-> (z,x,y)
        if (a <= c < b) or (b <= c < a):
            out.append(tuple(w[:j] + [b, a, c] + w[j + 3 :]))
        # swap the last two letters: (y,x,z) <-> (y,z,x)
        if (b < a <= c) or (c < a <= b):
            out.append(tuple(w[:j] + [a, c, b] + w[j + 3 :]))
    return out


# ---------------------------------------------------------------------------
# column insertion and rectification (all-even alphabets)

def _insert_into_columns(cols: list[list[int]], a: int) -> None:
    j = 0
    while True:
        if j == len(cols):
            cols.append([a])
            return
        col = cols[j]
        # bump the topmost entry >= a, else settle at the bottom
        k = None
        for idx, x in enumerate(col):
            if x >= a:
                k = idx
                break
        if k is None:
            col.append(a)
            return
        a, col[k] = col[k], a
        j += 1


def insert_word(word) -> Tableau:
    cols: list[list[int]] = []
    for a in word:
        _insert_into_columns(cols, a)
    return tableau_from_columns(cols)


def column_insert(t: Tableau, a: int) -> Tableau:
    """Column-bump a single letter into a straight-shape tableau."""
    cols = [list(c) for c in t.columns()]
    _insert_into_columns(cols, a)
    return tableau_from_columns(cols)


def rectify(t: Tableau) -> Tableau:
    """The unique straight-shape tableau Knuth-equivalent to t."""
    return insert_word(t.column_word())


def rectify_word(word) -> Tableau:
    return insert_word(word)


# ---------------------------------------------------------------------------
# crystal operators on tableaux (type A, index i >= 1)

def _positions_in_word_order(t: Tableau):
    pos = []
    for c in range(t.shape.ncols, 0, -1):
        for r in range(1, t.shape.nrows + 1):
            if t.cell(r, c) is not None:
                pos.append((r, c))
    return pos


def _replace_cell(t: Tableau, r: int, c: int, value: int) -> Tableau:
    lo, _ = t.shape.row_span(r)
    rows = list(t.rows)
    row = list(rows[r - 1])
    row[c - lo] = value
    rows[r - 1] = tuple(row)
    return Tableau(t.shape, tuple(rows))


def crystal_e(t: Tableau, i: int) -> Tableau | None:
    word = t.column_word()
    p = raise_position(word, i)
    if p is None:
        return None
    r, c = _positions_in_word_order(t)[p]
    return _replace_cell(t, r, c, i)


def crystal_f(t: Tableau, i: int) -> Tableau | None:
    word = t.column_word()
    p = lower_position(word, i)
    if p is None:
        return None
    r, c = _positions_in_word_order(t)[p]
    return _replace_cell(t, r, c, i + 1)


def eps(t: Tableau, i: int) -> int:
    return eps_word(t.column_word(), i)


def phi(t: Tableau, i: int) -> int:
    return phi_word(t.column_word(), i)


# ---------------------------------------------------------------------------
# enumeration

def ssyt(shape: Shape, content=None, max_entry: int | None = None,
         alphabet: GradedAlphabet = NATURAL):
    """All semistandard fillings of the shape, smallest column word first.

    `content` fixes the exact multiplicity of every letter; `max_entry`
    bounds entries when no content is given.
    """
    if content is not None:
        content = tuple(content)
        max_entry = len(content)
    elif max_entry is None:
        if alphabet.size is None:
            raise ValueError("need content or max_entry for enumeration")
        max_entry = alphabet.size
    if alphabet.size is not None:
        max_entry = min(max_entry, alphabet.size)

    cells = []
    for r in range(1, shape.nrows + 1):
        lo, hi = shape.row_span(r)
        cells.extend((r, c) for c in range(lo, hi + 1))
    if content is not None and sum(content) != len(cells):
        return
    remaining = list(content) if content is not None else None
    grid: dict[tuple[int, int], int] = {}

    def rec(idx):
        if idx == len(cells):
            rows = []
            for r in range(1, shape.nrows + 1):
                lo, hi = shape.row_span(r)
                rows.append(tuple(grid[(r, c)] for c in range(lo, hi + 1)))
            yield Tableau(shape, tuple(rows))
            return
        r, c = cells[idx]
        lo = 1
        left = grid.get((r, c - 1))
        up = grid.get((r - 1, c))
        for v in range(1, max_entry + 1):
            if left is not None and not alphabet.row_le(left, v):
                continue
            if up is not None and not alphabet.col_le(up, v):
                continue
            if remaining is not None:
                if remaining[v - 1] == 0:
                    continue
                remaining[v - 1] -= 1
            grid[(r, c)] = v
            yield from rec(idx + 1)
            del grid[(r, c)]
            if remaining is not None:
                remaining[v - 1] += 1

    yield from rec(0)


# ---------------------------------------------------------------------------
# Littlewood-Richardson tableaux via the crystal characterization

def lr_tableaux(lam, mu, nu):
    """Tableaux of shape nu with content lam-mu whose raising operators are
    bounded by the highest-weight tableau of mu; their number is the LR
    coefficient c^lam_{mu,nu}."""
    lam, mu, nu = normalize(lam), normalize(mu), normalize(nu)
    if sum(lam) != sum(mu) + sum(nu) or not contains(lam, mu):
        return []
    width = max(len(lam), 1)
    content = tuple(part(lam, i) - part(mu, i) for i in range(1, width + 1))
    if any(c < 0 for c in content):
        return []
    out = []
    for t in ssyt(Shape.straight(nu), content=content):
        w = t.column_word()
        if all(eps_word(w, i) <= part(mu, i) - part(mu, i + 1)
               for i in range(1, width + 1)):
            out.append(t)
    return out


@lru_cache(maxsize=None)
def lr_coef(lam, mu, nu) -> int:
    return len(lr_tableaux(lam, mu, nu))
