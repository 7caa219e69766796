"""Linearly ordered alphabets with a Z2-grading.

Letters are 1-based ranks into the alphabet.  Entry comparisons inside
tableaux depend on parity: even letters repeat along rows and are strict
down columns, odd letters are strict along rows and repeat down columns.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class GradedAlphabet:
    # names/parities are None for the unbounded all-even alphabet 1,2,3,...
    names: tuple[str, ...] | None = None
    parities: tuple[int, ...] | None = None

    @classmethod
    def natural(cls, k: int | None = None) -> "GradedAlphabet":
        """All-even alphabet {1..k}, or unbounded when k is None."""
        if k is None:
            return cls(None, None)
        return cls(tuple(str(i) for i in range(1, k + 1)), (0,) * k)

    @classmethod
    def primed(cls, k: int) -> "GradedAlphabet":
        """All-odd alphabet {1'..k'}."""
        return cls(tuple(f"{i}'" for i in range(1, k + 1)), (1,) * k)

    @classmethod
    def from_symbols(cls, symbols) -> "GradedAlphabet":
        """Build from symbol names; a trailing apostrophe marks an odd letter."""
        names = tuple(str(s) for s in symbols)
        return cls(names, tuple(1 if s.endswith("'") else 0 for s in names))

    @property
    def size(self) -> int | None:
        return None if self.names is None else len(self.names)

    def parity(self, letter: int) -> int:
        if self.parities is None:
            return 0
        return self.parities[letter - 1]

    def name(self, letter: int) -> str:
        if self.names is None:
            return str(letter)
        return self.names[letter - 1]

    def letter(self, name: str) -> int:
        if self.names is None:
            return int(name)
        return self.names.index(str(name)) + 1

    def row_le(self, a: int, b: int) -> bool:
        """Horizontal adjacency a (left) then b (right) is allowed."""
        return a < b or (a == b and self.parity(a) == 0)

    def col_le(self, a: int, b: int) -> bool:
        """Vertical adjacency a (above) then b (below) is allowed."""
        return a < b or (a == b and self.parity(a) == 1)

    def is_column(self, entries) -> bool:
        return all(self.col_le(a, b) for a, b in zip(entries, entries[1:]))

    def all_even(self) -> bool:
        return self.parities is None or all(p == 0 for p in self.parities)


NATURAL = GradedAlphabet.natural()
