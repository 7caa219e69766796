"""Truncated character series: Schur and super Schur polynomials, spinor
tableau characters, and the product form of the unitarizable characters."""

from dataclasses import dataclass, field
from fractions import Fraction

from .alphabets import GradedAlphabet
from .groups import GroupSpec, epsilon, family_for, in_group_range
from .partitions import base_type, length, normalize
from .spinor import enumerate_spinor
from .tableaux import Shape, ssyt

_DUAL = {"d": "c", "c": "d", "bb": "b", "b": "b"}


@dataclass
class CharacterSeries:
    """Polynomial in x_1..x_k truncated at total degree `trunc`, with a
    global power of the grading variable z."""

    k: int
    trunc: int
    zexp: Fraction = Fraction(0)
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        self.zexp = Fraction(self.zexp)
        self.terms = {tuple(e): int(c) for e, c in self.terms.items() if c}

    def copy(self) -> "CharacterSeries":
        return CharacterSeries(self.k, self.trunc, self.zexp, dict(self.terms))

    def coefficient(self, exps) -> int:
        return self.terms.get(tuple(exps), 0)

    def add_term(self, exps, coef: int) -> None:
        e = tuple(exps)
        if sum(e) > self.trunc:
            return
        c = self.terms.get(e, 0) + coef
        if c:
            self.terms[e] = c
        else:
            self.terms.pop(e, None)

    def __add__(self, other: "CharacterSeries") -> "CharacterSeries":
        if self.k != other.k or self.zexp != other.zexp:
            raise ValueError("series are not compatible for addition")
        out = CharacterSeries(self.k, min(self.trunc, other.trunc), self.zexp)
        for e, c in self.terms.items():
            out.add_term(e, c)
        for e, c in other.terms.items():
            out.add_term(e, c)
        return out

    def __mul__(self, other: "CharacterSeries") -> "CharacterSeries":
        if self.k != other.k:
            raise ValueError("series are not compatible for multiplication")
        out = CharacterSeries(self.k, min(self.trunc, other.trunc),
                              self.zexp + other.zexp)
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            for e2, c2 in other.terms.items():
                if d1 + sum(e2) > out.trunc:
                    continue
                out.add_term(tuple(a + b for a, b in zip(e1, e2)), c1 * c2)
        return out

    def scale(self, c: int) -> "CharacterSeries":
        return CharacterSeries(self.k, self.trunc, self.zexp,
                               {e: c * v for e, v in self.terms.items()})

    def x_part(self) -> "CharacterSeries":
        return CharacterSeries(self.k, self.trunc, 0, dict(self.terms))

    def specialize_ones(self) -> int:
        return sum(self.terms.values())

    def __eq__(self, other) -> bool:
        return (isinstance(other, CharacterSeries) and self.k == other.k
                and self.zexp == other.zexp and self.terms == other.terms)

    def first_difference(self, other: "CharacterSeries"):
        keys = sorted(set(self.terms) | set(other.terms))
        for e in keys:
            a, b = self.terms.get(e, 0), other.terms.get(e, 0)
            if a != b:
                return {"x": list(e), "left": a, "right": b}
        return None

    def sorted_terms(self):
        return sorted(self.terms.items())

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "truncation": self.trunc,
            "terms": [
                {"z": _num(self.zexp), "x": list(e), "coef": c}
                for e, c in self.sorted_terms()
            ],
        }


def _num(q: Fraction):
    return int(q) if q.denominator == 1 else float(q)


def one_series(k: int, trunc: int) -> CharacterSeries:
    return CharacterSeries(k, trunc, 0, {(0,) * k: 1})


def geometric(k: int, trunc: int, exps) -> CharacterSeries:
    """The expansion of 1/(1 - x^exps) up to the truncation degree."""
    out = CharacterSeries(k, trunc, 0)
    step = sum(exps)
    if step <= 0:
        raise ValueError("need a positive-degree monomial")
    j = 0
    while j * step <= trunc:
        out.add_term(tuple(j * e for e in exps), 1)
        j += 1
    return out


def schur(lam, k: int, trunc: int | None = None,
          alphabet: GradedAlphabet | None = None) -> CharacterSeries:
    """Tableau generating function of shape lam; ordinary Schur polynomial
    for the all-even alphabet, super Schur otherwise."""
    lam = normalize(lam)
    if alphabet is None:
        alphabet = GradedAlphabet.natural(k)
    if trunc is None:
        trunc = sum(lam)
    out = CharacterSeries(k, trunc, 0)
    if sum(lam) > trunc:
        return out
    for t in ssyt(Shape.straight(lam), max_entry=k, alphabet=alphabet):
        out.add_term(t.content(k), 1)
    return out


def super_schur(lam, alphabet: GradedAlphabet, trunc: int | None = None
                ) -> CharacterSeries:
    return schur(lam, alphabet.size, trunc, alphabet)


def delta_series(gtype: str, k: int, trunc: int) -> CharacterSeries:
    """The product generating function attached to the type family: over
    distinct pairs always, plus single-variable factors for types bb and c."""
    g = gtype if gtype == "bb" else base_type(gtype)
    out = one_series(k, trunc)
    unit = [0] * k
    for i in range(k):
        for j in range(i + 1, k):
            e = list(unit)
            e[i] = e[j] = 1
            out = out * geometric(k, trunc, e)
    if g in ("bb", "b"):
        for i in range(k):
            e = list(unit)
            e[i] = 1
            out = out * geometric(k, trunc, e)
    elif g == "c":
        for i in range(k):
            e = list(unit)
            e[i] = 2
            out = out * geometric(k, trunc, e)
    elif g != "d":
        raise ValueError(f"no product form for type {gtype!r}")
    return out


def char_spinor(gtype: str, group: GroupSpec, lam, alphabet: GradedAlphabet,
                trunc: int) -> CharacterSeries:
    """Generating function of the spinor tableaux over the alphabet, graded
    by content, with the level recorded in the z exponent."""
    g = base_type(gtype)
    k = alphabet.size
    if k is None:
        raise ValueError("character needs a bounded alphabet")
    out = CharacterSeries(k, trunc, Fraction(group.n, epsilon(g)))
    for t in enumerate_spinor(g, group, lam, alphabet, max_boxes=trunc):
        out.add_term(t.content(k), 1)
    return out


def char_unitarizable(gtype: str, k: int, lam, n: int,
                      trunc: int) -> CharacterSeries:
    """Character of the infinite-dimensional unitarizable module attached to
    lam, computed from the dual-type spinor model over the odd alphabet."""
    if gtype not in ("bb", "c", "d"):
        raise ValueError("unitarizable characters exist for types bb, c, d")
    gv = _DUAL[gtype]
    group = family_for(gv, n)
    lam = normalize(lam)
    if length(lam) > k:
        raise ValueError(f"{lam} needs more than {k} rows")
    if not in_group_range(lam, group):
        raise ValueError(f"{lam} is not a valid highest weight for {group}")
    return char_spinor(gv, group, lam, GradedAlphabet.primed(k), trunc)


def verify_oscillator_identity(gtype: str, k: int, lam, n: int, trunc: int):
    """Compare the unitarizable character against the closed product form;
    valid for n >= 2k.  Returns (True, None) or (False, first discrepancy)."""
    if n < 2 * k:
        raise ValueError("the product form requires n >= 2k")
    lhs = char_unitarizable(gtype, k, lam, n, trunc).x_part()
    rhs = delta_series(gtype, k, trunc) * schur(lam, k, trunc)
    if lhs == rhs:
        return True, None
    return False, lhs.first_difference(rhs)


def schur_expand(series: CharacterSeries) -> dict:
    """Schur expansion of a symmetric truncated series by leading-monomial
    elimination, degree by degree."""
    out: dict = {}
    by_degree: dict[int, dict] = {}
    for e, c in series.terms.items():
        by_degree.setdefault(sum(e), {})[e] = c
    for d, terms in sorted(by_degree.items()):
        work = dict(terms)
        while work:
            e = max(work)
            c = work[e]
            mu = normalize(e) if all(
                e[i] >= e[i + 1] for i in range(len(e) - 1)) else None
            if mu is None or c < 0:
                raise ValueError(f"series is not Schur-positive at {e}")
            out[mu] = out.get(mu, 0) + c
            for e2, c2 in schur(mu, series.k, d).terms.items():
                nc = work.get(e2, 0) - c * c2
                if nc:
                    work[e2] = nc
                else:
                    work.pop(e2, None)
    return out
