"""Integer partitions as normalized tuples (no trailing zeros)."""

from functools import lru_cache

GTYPES = ("b", "bb", "c", "d")


def base_type(gtype: str) -> str:
    """Collapse the odd variant 'bb' onto 'b'; they share all combinatorics."""
    if gtype not in GTYPES:
        raise ValueError(f"unknown type {gtype!r}")
    return "b" if gtype == "bb" else gtype


def normalize(parts) -> tuple[int, ...]:
    """Return the partition as a tuple without trailing zeros; validate."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(x < 0 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"not a partition: {parts!r}")
    return p


def size(lam) -> int:
    return sum(lam)


def length(lam) -> int:
    return len(lam)


def part(lam, i: int) -> int:
    """1-based part, 0 beyond the length."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def conjugate(lam) -> tuple[int, ...]:
    lam = normalize(lam)
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x >= j) for j in range(1, lam[0] + 1))


def contains(lam, mu) -> bool:
    """Cellwise containment mu subseteq lam."""
    return all(part(lam, i) >= part(mu, i) for i in range(1, len(mu) + 1))


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None, max_length: int | None = None):
    """All partitions of n, largest first part first (reverse lexicographic)."""
    if n < 0:
        return ()
    if n == 0:
        return ((),)
    top = n if max_part is None else min(n, max_part)
    if max_length is not None and max_length <= 0:
        return ()
    out = []
    for first in range(top, 0, -1):
        rest_len = None if max_length is None else max_length - 1
        for rest in partitions(n - first, first, rest_len):
            out.append((first,) + rest)
    return tuple(out)


def partitions_upto(n: int, max_length: int | None = None):
    """All partitions of size 0..n."""
    out = []
    for m in range(n + 1):
        out.extend(partitions(m, None, max_length))
    return out


def subpartitions(lam):
    """All mu with mu subseteq lam, in deterministic order."""
    lam = normalize(lam)

    def rec(i, prev):
        if i == len(lam):
            yield ()
            return
        for x in range(min(lam[i], prev), -1, -1):
            if x == 0:
                yield ()
                return
            for rest in rec(i + 1, x):
                yield (x,) + rest

    return [p for p in rec(0, lam[0] if lam else 0)] if lam else [()]


def is_type_partition(lam, gtype: str) -> bool:
    """Membership in the partition family indexing the delta-sums: all
    partitions for type b, even rows for c, even columns for d."""
    lam = normalize(lam)
    g = base_type(gtype)
    if g == "b":
        return True
    if g == "c":
        return all(x % 2 == 0 for x in lam)
    return all(x % 2 == 0 for x in conjugate(lam))


def type_partitions_upto(n: int, gtype: str, max_length: int | None = None):
    return [p for p in partitions_upto(n, max_length) if is_type_partition(p, gtype)]
