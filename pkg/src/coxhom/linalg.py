"""Exact integer and F2 linear algebra, and finite abelian group arithmetic.

Matrices are plain lists of row lists of Python ints, so entries never
overflow.  Everything here is small-scale: boundary matrices of a few
hundred columns at most.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Sequence

Matrix = list[list[int]]


class ChainComplexError(ValueError):
    """Raised when consecutive boundary maps do not compose to zero."""


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = 1
    return m


def matmul(a: Matrix, b: Matrix, inner: int | None = None) -> Matrix:
    """Product of an r x k and a k x c matrix.

    ``inner`` gives k explicitly, which is needed when ``a`` has no rows.
    """
    if inner is None:
        inner = len(a[0]) if a else len(b)
    cols = len(b[0]) if b else 0
    out = zeros(len(a), cols)
    for i, row in enumerate(a):
        orow = out[i]
        for k in range(inner):
            x = row[k]
            if x:
                brow = b[k]
                for j in range(cols):
                    if brow[j]:
                        orow[j] += x * brow[j]
    return out


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SmithDecomposition:
    """Nonzero invariant factors ``d_1 | d_2 | ... | d_r`` of an integer matrix.

    ``left`` and ``right`` are unimodular with ``left * A * right`` diagonal;
    they are only populated when requested.
    """

    diagonal: tuple[int, ...]
    rows: int
    cols: int
    left: Matrix | None = field(default=None, compare=False, repr=False)
    right: Matrix | None = field(default=None, compare=False, repr=False)

    @property
    def rank(self) -> int:
        return len(self.diagonal)


def smith_normal_form(a: Sequence[Sequence[int]], cols: int | None = None,
                      transforms: bool = False) -> SmithDecomposition:
    """Smith normal form by repeated smallest-pivot elimination.

    ``cols`` must be passed for matrices with zero rows.
    """
    m = [list(map(int, r)) for r in a]
    nr = len(m)
    nc = cols if cols is not None else (len(m[0]) if m else 0)
    left = identity(nr) if transforms else None
    right = identity(nc) if transforms else None

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        if left is not None:
            left[i], left[j] = left[j], left[i]

    def swap_cols(i, j):
        for row in m:
            row[i], row[j] = row[j], row[i]
        if right is not None:
            for row in right:
                row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):
        # row[dst] += q * row[src]
        rs, rd = m[src], m[dst]
        for j in range(nc):
            if rs[j]:
                rd[j] += q * rs[j]
        if left is not None:
            ls, ld = left[src], left[dst]
            for j in range(nr):
                if ls[j]:
                    ld[j] += q * ls[j]

    def add_col(src, dst, q):
        for row in m:
            if row[src]:
                row[dst] += q * row[src]
        if right is not None:
            for row in right:
                if row[src]:
                    row[dst] += q * row[src]

    def negate_row(i):
        m[i] = [-x for x in m[i]]
        if left is not None:
            left[i] = [-x for x in left[i]]

    t = 0
    while t < min(nr, nc):
        # smallest nonzero |entry| in the remaining block
        best = None
        for i in range(t, nr):
            row = m[i]
            for j in range(t, nc):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, pi, pj = best
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            p = m[t][t]
            dirty = False
            for i in range(t + 1, nr):
                if m[i][t]:
                    add_row(t, i, -(m[i][t] // p))
                    if m[i][t]:
                        dirty = True
            for j in range(t + 1, nc):
                if m[t][j]:
                    add_col(t, j, -(m[t][j] // p))
                    if m[t][j]:
                        dirty = True
            if dirty:
                # move the smallest remainder in row/column t into the pivot
                cand = [(abs(m[i][t]), i, t) for i in range(t, nr) if m[i][t]]
                cand += [(abs(m[t][j]), t, j) for j in range(t, nc) if m[t][j]]
                _, i, j = min(cand)
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            # pivot must divide the rest of the block
            bad = None
            for i in range(t + 1, nr):
                for j in range(t + 1, nc):
                    if m[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(bad, t, 1)
        if m[t][t] < 0:
            negate_row(t)
        t += 1

    diag = tuple(m[i][i] for i in range(t))
    return SmithDecomposition(diag, nr, nc, left, right)


def invariant_factors(a: Sequence[Sequence[int]], cols: int | None = None) -> tuple[int, ...]:
    return smith_normal_form(a, cols).diagonal


def integer_rank(a: Sequence[Sequence[int]], cols: int | None = None) -> int:
    return smith_normal_form(a, cols).rank


def f2_rank(a: Sequence[Sequence[int]]) -> int:
    """Rank over the field with two elements (rows packed into int bitsets)."""
    rows = []
    for r in a:
        bits = 0
        for j, x in enumerate(r):
            if x & 1:
                bits |= 1 << j
        if bits:
            rows.append(bits)
    rank = 0
    while rows:
        pivot = rows.pop()
        if not pivot:
            continue
        rank += 1
        low = pivot & -pivot
        rows = [r ^ pivot if r & low else r for r in rows]
        rows = [r for r in rows if r]
    return rank


# ---------------------------------------------------------------------------
# Finite(ly generated) abelian groups


def _prime_power_split(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            q = 1
            while n % p == 0:
                n //= p
                q *= p
            out.append(q)
        p += 1
    if n > 1:
        out.append(n)
    return out


def _prime_of(q: int) -> int:
    p = 2
    while q % p:
        p += 1
    return p




@dataclass(frozen=True)
class AbelianGroup:
    """Z^free_rank plus a multiset of prime-power cyclic groups.

    The torsion tuple is kept sorted by value, which makes the representation
    unique per isomorphism class.
    """

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        parts = []
        for q in self.torsion:
            if q < 1:
                raise ValueError(f"invalid cyclic order {q}")
            parts.extend(_prime_power_split(q))
        object.__setattr__(self, "torsion", tuple(sorted(parts)))

    @classmethod
    def cyclic(cls, n: int) -> "AbelianGroup":
        """Z/n, with n = 0 meaning Z."""
        if n == 0:
            return cls(1)
        return cls(0, (n,))

    @classmethod
    def elementary(cls, p: int, k: int) -> "AbelianGroup":
        return cls(0, (p,) * k)

    @classmethod
    def parse(cls, text: str) -> "AbelianGroup":
        """Inverse of ``str``: accepts e.g. ``"Z2^4 + Z3 + Z4"``, ``"Z^2"``, ``"0"``."""
        text = text.strip()
        if text in ("", "0"):
            return cls()
        free, tors = 0, []
        for term in text.split("+"):
            term = term.strip()
            base, _, exp = term.partition("^")
            k = int(exp) if exp else 1
            if not base.startswith("Z"):
                raise ValueError(f"bad group term {term!r}")
            if base == "Z":
                free += k
            else:
                tors.extend([int(base[1:])] * k)
        return cls(free, tuple(tors))

    @property
    def order(self) -> int | None:
        if self.free_rank:
            return None
        n = 1
        for q in self.torsion:
            n *= q
        return n

    def is_zero(self) -> bool:
        return not self.free_rank and not self.torsion

    def rank_mod(self, p: int) -> int:
        """Dimension of G / pG over F_p."""
        return self.free_rank + sum(1 for q in self.torsion if q % p == 0)

    def invariant_factors(self) -> tuple[int, ...]:
        by_prime: dict[int, list[int]] = {}
        for q in self.torsion:
            by_prime.setdefault(_prime_of(q), []).append(q)
        length = max((len(v) for v in by_prime.values()), default=0)
        factors = [1] * length
        for qs in by_prime.values():
            for i, q in enumerate(sorted(qs, reverse=True)):
                factors[length - 1 - i] *= q
        return tuple(factors)

    def __add__(self, other: "AbelianGroup") -> "AbelianGroup":
        return direct_sum(self, other)

    def __str__(self) -> str:
        terms = []
        if self.free_rank:
            terms.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        i = 0
        tors = self.torsion
        while i < len(tors):
            j = i
            while j < len(tors) and tors[j] == tors[i]:
                j += 1
            k = j - i
            terms.append(f"Z{tors[i]}" if k == 1 else f"Z{tors[i]}^{k}")
            i = j
        return " + ".join(terms) if terms else "0"

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion),
                "text": str(self)}


ZERO = AbelianGroup()
INTEGERS = AbelianGroup(1)


def direct_sum(*groups: AbelianGroup) -> AbelianGroup:
    free = sum(g.free_rank for g in groups)
    tors = tuple(q for g in groups for q in g.torsion)
    return AbelianGroup(free, tors)


def ab_tensor(g: AbelianGroup, h: AbelianGroup) -> AbelianGroup:
    free = g.free_rank * h.free_rank
    tors = [q for q in g.torsion for _ in range(h.free_rank)]
    tors += [q for q in h.torsion for _ in range(g.free_rank)]
    tors += [gcd(a, b) for a in g.torsion for b in h.torsion]
    return AbelianGroup(free, tuple(q for q in tors if q > 1))


def ab_tor(g: AbelianGroup, h: AbelianGroup) -> AbelianGroup:
    tors = [gcd(a, b) for a in g.torsion for b in h.torsion]
    return AbelianGroup(0, tuple(q for q in tors if q > 1))


# ---------------------------------------------------------------------------
# Homology of a chain complex slot


def _check_composition(d_out: Matrix, d_in: Matrix, middle: int) -> None:
    prod = matmul(d_out, d_in, inner=middle)
    for row in prod:
        if any(row):
            raise ChainComplexError("boundary maps do not compose to zero")


def chain_homology(d_out: Matrix, d_in: Matrix, middle: int | None = None,
                   check: bool = True) -> AbelianGroup:
    """Homology ker(d_out) / im(d_in) at the middle term of C' <- C <- C''.

    ``d_out`` has shape dim C' x dim C and ``d_in`` has shape dim C x dim C''.
    ``middle`` defaults to the row count of ``d_in``; a map out of a zero
    group is written as a list of empty rows.
    """
    if middle is None:
        middle = len(d_in)
    if not d_in:
        d_in = [[] for _ in range(middle)]
    if check:
        _check_composition(d_out, d_in, middle)
    r_out = integer_rank(d_out, cols=middle)
    snf_in = smith_normal_form(d_in, cols=len(d_in[0]) if d_in else 0)
    free = middle - r_out - snf_in.rank
    return AbelianGroup(free, tuple(d for d in snf_in.diagonal if d > 1))
