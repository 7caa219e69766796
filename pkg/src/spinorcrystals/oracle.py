"""Independent brute-force verifiers: lattice-word LR counting, Weyl
dimension and character arithmetic for the classical families, and
character-side decomposition of restrictions and tensor products.

Everything here deliberately avoids the crystal/enumeration code paths so
that agreements are genuine double-entry checks.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product

from .partitions import conjugate, normalize, part

# ---------------------------------------------------------------------------
# lattice-word Littlewood-Richardson counting


@lru_cache(maxsize=None)
def lr_coef_latticeword(lam, mu, nu) -> int:
    """Count fillings of the skew shape lam/mu with content nu whose column
    word is a lattice word, by direct backtracking over cells."""
    lam, mu, nu = normalize(lam), normalize(mu), normalize(nu)
    if sum(lam) != sum(mu) + sum(nu):
        return 0
    if any(part(lam, i) < part(mu, i) for i in range(1, len(mu) + 1)):
        return 0
    rows = len(lam)
    cells = []
    for r in range(rows):
        for c in range(part(mu, r + 1), lam[r]):
            cells.append((r, c))
    counts = [0] * (len(nu) + 1)
    grid = {}
    hits = 0

    def lattice_ok() -> bool:
        seen = [0] * (len(nu) + 1)
        for c in range(lam[0] - 1, -1, -1) if lam else []:
            for r in range(rows):
                v = grid.get((r, c))
                if v is None:
                    continue
                seen[v - 1] += 1
                if v > 1 and seen[v - 1] > seen[v - 2]:
                    return False
        return True

    def rec(i: int):
        nonlocal hits
        if i == len(cells):
            if lattice_ok():
                hits += 1
            return
        r, c = cells[i]
        left = grid.get((r, c - 1))
        up = grid.get((r - 1, c))
        for v in range(1, len(nu) + 1):
            if counts[v - 1] >= nu[v - 1]:
                continue
            if left is not None and v < left:
                continue
            if up is not None and v <= up:
                continue
            grid[(r, c)] = v
            counts[v - 1] += 1
            rec(i + 1)
            counts[v - 1] -= 1
            del grid[(r, c)]

    rec(0)
    return hits


# ---------------------------------------------------------------------------
# Weyl dimension and character formulas

_SERIES = ("A", "B", "C", "D")


def _rho(series: str, k: int) -> tuple[Fraction, ...]:
    if series == "B":
        return tuple(Fraction(2 * (k - i) + 1, 2) for i in range(1, k + 1))
    if series == "C":
        return tuple(Fraction(k - i + 1) for i in range(1, k + 1))
    if series == "D":
        return tuple(Fraction(k - i) for i in range(1, k + 1))
    raise ValueError(f"unknown series {series!r}")


def _positive_roots(series: str, k: int):
    roots = []
    for i in range(k):
        for j in range(i + 1, k):
            e = [0] * k
            e[i], e[j] = 1, -1
            roots.append(tuple(e))
            e2 = [0] * k
            e2[i], e2[j] = 1, 1
            roots.append(tuple(e2))
    if series == "B":
        for i in range(k):
            e = [0] * k
            e[i] = 1
            roots.append(tuple(e))
    elif series == "C":
        for i in range(k):
            e = [0] * k
            e[i] = 2
            roots.append(tuple(e))
    elif series != "D":
        raise ValueError(f"unknown series {series!r}")
    return roots


def weyl_dimension(series: str, k: int, weight) -> int:
    """Dimension by the product formula; weight in standard coordinates,
    half-integers allowed."""
    if series == "A":
        lam = [Fraction(x) for x in weight]
        lam += [Fraction(0)] * (k - len(lam))
        dim = Fraction(1)
        for i in range(k):
            for j in range(i + 1, k):
                dim *= (lam[i] - lam[j] + j - i) / Fraction(j - i)
        return int(dim)
    w = [Fraction(x) for x in weight]
    if len(w) != k:
        raise ValueError("weight length must equal the rank")
    rho = _rho(series, k)
    dim = Fraction(1)
    for alpha in _positive_roots(series, k):
        num = sum((w[i] + rho[i]) * alpha[i] for i in range(k))
        den = sum(rho[i] * alpha[i] for i in range(k))
        if den == 0:
            raise ValueError("degenerate root pairing")
        if num == 0:
            raise ValueError(f"weight {weight} is not strictly dominant-regular")
        dim *= num / den
    if dim.denominator != 1 or dim <= 0:
        raise ValueError(f"non-integral dimension for {weight}")
    return int(dim)


@lru_cache(maxsize=None)
def _signed_group(series: str, k: int):
    sign_choices = list(product((1, -1), repeat=k))
    if series == "D":
        sign_choices = [s for s in sign_choices
                        if s.count(-1) % 2 == 0]
    out = []
    for perm in permutations(range(k)):
        inv = sum(1 for i in range(k) for j in range(i + 1, k)
                  if perm[i] > perm[j])
        psign = -1 if inv % 2 else 1
        for signs in sign_choices:
            det = psign
            for s in signs:
                det *= s
            out.append((perm, signs, det))
    return out


def _alternant(series: str, k: int, v) -> dict:
    out: dict = {}
    for perm, signs, det in _signed_group(series, k):
        img = tuple(signs[i] * v[perm[i]] for i in range(k))
        out[img] = out.get(img, 0) + det
    return {e: c for e, c in out.items() if c}


def _poly_sub(target: dict, other: dict, coef: int, shift) -> None:
    for e, c in other.items():
        key = tuple(a + b for a, b in zip(e, shift))
        nc = target.get(key, 0) - coef * c
        if nc:
            target[key] = nc
        else:
            target.pop(key, None)


@lru_cache(maxsize=None)
def weyl_character(series: str, k: int, weight) -> dict:
    """Character as a Laurent polynomial {exponent tuple: coefficient} via
    the ratio of alternants.  Callers must not mutate the result."""
    if series == "A":
        return gl_character(weight, k)
    w = [Fraction(x) for x in weight]
    rho = _rho(series, k)
    scale = 2 if any((x + r).denominator != 1 for x, r in zip(w, rho)) or \
        series == "B" else 1
    top = [int(scale * (x + r)) for x, r in zip(w, rho)]
    bot = [int(scale * r) for r in rho]
    num = _alternant(series, k, top)
    den = _alternant(series, k, bot)
    den_lead = max(den)
    quot: dict = {}
    while num:
        lead = max(num)
        c = num[lead]
        if c % den[den_lead]:
            raise ArithmeticError("alternant division failed")
        q = c // den[den_lead]
        shift = tuple(a - b for a, b in zip(lead, den_lead))
        if any(s % scale for s in shift):
            raise ArithmeticError("non-integral character exponent")
        quot[tuple(s // scale for s in shift)] = q
        _poly_sub(num, den, q, shift)
    return quot


@lru_cache(maxsize=None)
def gl_character(lam, nvars: int) -> dict:
    """Schur polynomial as {exponent tuple: coefficient}, by filling shapes
    cell by cell (independent of the tableau module)."""
    lam = normalize(lam)
    if len(lam) > nvars:
        return {}
    out: dict = {}
    rows = len(lam)
    grid = {}

    def rec(r: int, c: int):
        if r == rows:
            e = [0] * nvars
            for v in grid.values():
                e[v - 1] += 1
            key = tuple(e)
            out[key] = out.get(key, 0) + 1
            return
        nr, nc = (r, c + 1) if c + 1 < lam[r] else (r + 1, 0)
        lo = 1
        if c > 0:
            lo = max(lo, grid[(r, c - 1)])
        if r > 0:
            lo = max(lo, grid[(r - 1, c)] + 1)
        for v in range(lo, nvars + 1):
            grid[(r, c)] = v
            rec(nr, nc)
            del grid[(r, c)]

    if rows:
        rec(0, 0)
    else:
        out[(0,) * nvars] = 1
    return out


# ---------------------------------------------------------------------------
# restriction of torus variables and decomposition

def restrict_gl_to_pair_torus(chi: dict, n: int) -> dict:
    """Substitute x_{l+i} = 1/x_i (and x_n = 1 for odd n) in a character in
    n variables."""
    ell = n // 2
    out: dict = {}
    for e, c in chi.items():
        img = tuple(e[i] - e[ell + i] for i in range(ell))
        out[img] = out.get(img, 0) + c
    return {e: c for e, c in out.items() if c}


def split_torus(chi: dict, k1: int) -> dict:
    """Reindex exponents as pairs (first k1 coordinates, rest)."""
    out: dict = {}
    for e, c in chi.items():
        key = (tuple(e[:k1]), tuple(e[k1:]))
        out[key] = out.get(key, 0) + c
    return out


def _dominant_from(series: str, e):
    if series in ("B", "C"):
        return tuple(sorted((abs(x) for x in e), reverse=True))
    vals = sorted((abs(x) for x in e), reverse=True)
    neg = sum(1 for x in e if x < 0)
    if neg % 2 == 1:
        if vals[-1] == 0:
            return tuple(vals)
        return tuple(vals[:-1] + [-vals[-1]])
    return tuple(vals)


def decompose(chi: dict, series: str, k: int) -> dict:
    """Write a Weyl-group-symmetric Laurent polynomial as a sum of
    irreducible characters by leading-term elimination."""
    work = dict(chi)
    out: dict = {}
    zero = (0,) * k
    while work:
        lead = max(work)
        mu = _dominant_from(series, lead)
        if mu != lead:
            raise ArithmeticError(f"leading term {lead} is not dominant")
        c = work[lead]
        if c < 0:
            raise ArithmeticError(f"negative multiplicity at {lead}")
        out[mu] = out.get(mu, 0) + c
        _poly_sub(work, weyl_character(series, k, mu), c, zero)
    return {m: c for m, c in out.items() if c}


def decompose_product(chi: dict, series1: str, k1: int,
                      series2: str, k2: int) -> dict:
    """Decompose over a product of two classical groups; exponents combine
    both torus blocks."""
    work = dict(chi)
    out: dict = {}
    cache: dict = {}
    while work:
        lead = max(work)
        m1 = _dominant_from(series1, lead[:k1])
        m2 = _dominant_from(series2, lead[k1:])
        if m1 + m2 != lead:
            raise ArithmeticError(f"leading term {lead} is not dominant")
        c = work[lead]
        if c < 0:
            raise ArithmeticError(f"negative multiplicity at {lead}")
        out[(m1, m2)] = c
        if (m1, m2) not in cache:
            c1 = weyl_character(series1, k1, m1)
            c2 = weyl_character(series2, k2, m2)
            prod_chi: dict = {}
            for e1, a in c1.items():
                for e2, b in c2.items():
                    key = e1 + e2
                    prod_chi[key] = prod_chi.get(key, 0) + a * b
            cache[(m1, m2)] = prod_chi
        _poly_sub(work, cache[(m1, m2)], c, (0,) * (k1 + k2))
    return {m: c for m, c in out.items() if c}


# ---------------------------------------------------------------------------
# oracles phrased against the spinor-model conventions

def sp_restriction_oracle(lam, n: int) -> dict:
    """Multiplicities of the symplectic modules inside the general linear
    module of shape lam, by character arithmetic."""
    lam = normalize(lam)
    chi = restrict_gl_to_pair_torus(gl_character(lam, n), n)
    return {mu: c for mu, c in decompose(chi, "C", n // 2).items()}


def so_restriction_oracle(lam, n: int) -> dict:
    """Special-orthogonal-level decomposition of the restricted general
    linear module; for even rank the last coordinate may be negative."""
    lam = normalize(lam)
    chi = restrict_gl_to_pair_torus(gl_character(lam, n), n)
    series = "D" if n % 2 == 0 else "B"
    return decompose(chi, series, n // 2)


def sp_tensor_oracle(lam, m: int, n: int) -> dict:
    """Multiplicities of pairs (mu, nu) in the restriction of a symplectic
    module to the product of two smaller symplectic groups."""
    lam = normalize(lam)
    k = (m + n) // 2
    if len(lam) > k:
        raise ValueError(f"{lam} is too long for rank {k}")
    chi = weyl_character("C", k, tuple(part(lam, i) for i in range(1, k + 1)))
    return decompose_product(chi, "C", m // 2, "C", n // 2)


def spinor_weight_coords(k: int, n: int, lam) -> tuple[Fraction, ...]:
    """Finite-rank standard coordinates of the highest weight attached to
    lam: n/2 minus the reversed conjugate."""
    lamc = conjugate(normalize(lam))
    return tuple(Fraction(n, 2) - part(lamc, k + 1 - j)
                 for j in range(1, k + 1))


def spinor_dimension(gtype: str, k: int, n: int, lam) -> int:
    """Weyl dimension of the finite-rank module matching the truncated
    spinor crystal."""
    from .partitions import base_type

    series = {"b": "B", "c": "C", "d": "D"}[base_type(gtype)]
    return weyl_dimension(series, k, spinor_weight_coords(k, n, lam))
