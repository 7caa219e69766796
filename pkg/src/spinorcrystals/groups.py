"""Classical group parameters and the associated affine weights."""

from dataclasses import dataclass
from fractions import Fraction

from .partitions import base_type, conjugate, length, normalize, part

FAMILIES = ("Sp", "O", "Spin", "Pin")

_FAMILY_TYPE = {"Sp": "c", "O": "d", "Spin": "b", "Pin": "b"}


def epsilon(gtype: str) -> int:
    """Scaling of the level: 2 for type c, 1 otherwise."""
    return 2 if base_type(gtype) == "c" else 1


@dataclass(frozen=True)
class GroupSpec:
    family: str
    n: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if self.family in ("Sp", "Pin") and self.n % 2 != 0:
            raise ValueError(f"{self.family}_n requires even n")
        if self.family == "Spin" and self.n % 2 != 1:
            raise ValueError("Spin_n requires odd n")

    @property
    def gtype(self) -> str:
        return _FAMILY_TYPE[self.family]

    def to_json(self) -> dict:
        return {"family": self.family, "n": self.n}

    @classmethod
    def from_json(cls, data) -> "GroupSpec":
        return cls(data["family"], int(data["n"]))


def family_for(gtype: str, n: int) -> GroupSpec:
    """The dual group of rank parameter n for a given type."""
    g = base_type(gtype)
    if g == "c":
        return GroupSpec("Sp", n)
    if g == "d":
        return GroupSpec("O", n)
    return GroupSpec("Pin" if n % 2 == 0 else "Spin", n)


def in_group_range(lam, group: GroupSpec) -> bool:
    """Whether lam indexes an irreducible module of the group."""
    lam = normalize(lam)
    n = group.n
    if group.family in ("Sp", "Pin"):
        return length(lam) <= n // 2
    if group.family == "Spin":
        return length(lam) <= (n - 1) // 2
    lamc = conjugate(lam)
    return length(lam) <= n and part(lamc, 1) + part(lamc, 2) <= n


@dataclass(frozen=True)
class Weight:
    """Element c*Lambda_0 + sum_i m_i * eps_i of the weight lattice."""

    lambda0: Fraction
    eps: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "lambda0", Fraction(self.lambda0))
        e = tuple(self.eps)
        while e and e[-1] == 0:
            e = e[:-1]
        object.__setattr__(self, "eps", e)

    def __add__(self, other: "Weight") -> "Weight":
        m = max(len(self.eps), len(other.eps))
        return Weight(
            self.lambda0 + other.lambda0,
            tuple(self.eps_coef(i) + other.eps_coef(i) for i in range(1, m + 1)),
        )

    def eps_coef(self, i: int) -> int:
        return self.eps[i - 1] if 1 <= i <= len(self.eps) else 0


def alpha0_eps_pairing(j: int, gtype: str) -> int:
    """Pairing of eps_j with the affine coroot, per type."""
    g = base_type(gtype)
    if g == "b":
        return -2 if j == 1 else 0
    if g == "c":
        return -1 if j == 1 else 0
    return -1 if j in (1, 2) else 0


def pair_with_coroot(w: Weight, i: int, gtype: str) -> Fraction:
    """Evaluate the weight against the i-th simple coroot."""
    if i == 0:
        val = w.lambda0
        for j in (1, 2):
            val += w.eps_coef(j) * alpha0_eps_pairing(j, gtype)
        return val
    return Fraction(w.eps_coef(i) - w.eps_coef(i + 1))


def group_weight(group: GroupSpec, lam) -> Weight:
    """The dominant weight attached to lam for the dual pair of the group."""
    lam = normalize(lam)
    if not in_group_range(lam, group):
        raise ValueError(f"{lam} is not a valid highest weight for {group}")
    return Weight(Fraction(group.n, epsilon(group.gtype)), conjugate(lam))


def fundamental_weight(gtype: str, i: int) -> Weight:
    """Fundamental weights in Lambda_0/eps coordinates."""
    g = base_type(gtype)
    if i == 0:
        return Weight(Fraction(1), ())
    if g == "c":
        return Weight(Fraction(1), (1,) * i)
    if g == "d" and i == 1:
        return Weight(Fraction(1), (1,))
    return Weight(Fraction(2), (1,) * i)
