"""Coxeter matrices, finite-type recognition and spherical subsets."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import factorial
from typing import Iterable, Sequence

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher


class _Infinity:
    """Label of a pair of generators with no relation.  Not a number."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


class CoxeterMatrixError(ValueError):
    pass


def is_finite_label(m) -> bool:
    return m is not INF


def is_odd(m) -> bool:
    return m is not INF and m % 2 == 1


def is_even(m) -> bool:
    """Finite and even; this includes 2."""
    return m is not INF and m % 2 == 0


def label_str(m) -> str:
    return "inf" if m is INF else str(m)


@dataclass(frozen=True)
class CoxeterMatrix:
    """Symmetric Coxeter matrix on an ordered list of named generators.

    The index order of ``names`` is the one generator order used everywhere
    (normal forms, signs in the resolution, report ordering).
    """

    labels: tuple[tuple, ...]
    names: tuple[str, ...]

    def __post_init__(self):
        n = len(self.labels)
        object.__setattr__(self, "labels", tuple(tuple(r) for r in self.labels))
        object.__setattr__(self, "names", tuple(self.names))
        if len(self.names) != n:
            raise CoxeterMatrixError("need one name per generator")
        if len(set(self.names)) != n:
            raise CoxeterMatrixError("generator names must be distinct")
        for i, row in enumerate(self.labels):
            if len(row) != n:
                raise CoxeterMatrixError("matrix must be square")
            for j, m in enumerate(row):
                if m is not INF and (not isinstance(m, int) or isinstance(m, bool)):
                    raise CoxeterMatrixError(f"bad label {m!r}")
                if i == j:
                    if m != 1:
                        raise CoxeterMatrixError("diagonal labels must be 1")
                else:
                    if m is not self.labels[j][i] and m != self.labels[j][i]:
                        raise CoxeterMatrixError("matrix must be symmetric")
                    if m is not INF and m < 2:
                        raise CoxeterMatrixError("off-diagonal labels must be >= 2")

    @classmethod
    def from_edges(cls, n: int, edges: dict[tuple[int, int], object] | Iterable = (),
                   names: Sequence[str] | None = None) -> "CoxeterMatrix":
        """Build from {(i, j): m} with every unlisted pair commuting (m = 2)."""
        rows = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
        items = edges.items() if isinstance(edges, dict) else edges
        for (i, j), m in items:
            rows[i][j] = rows[j][i] = m
        if names is None:
            names = [f"s{i + 1}" for i in range(n)]
        return cls(tuple(map(tuple, rows)), tuple(names))

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def m(self, i: int, j: int):
        return self.labels[i][j]

    def pairs(self):
        """All index pairs i < j with their label."""
        for i in range(self.n):
            for j in range(i + 1, self.n):
                yield i, j, self.labels[i][j]

    def name_set(self, mask: int) -> str:
        return "{" + ",".join(self.names[i] for i in bits(mask)) + "}"

    def __str__(self):
        rows = [" ".join(label_str(m) for m in r) for r in self.labels]
        return f"CoxeterMatrix({', '.join(self.names)}: " + "; ".join(rows) + ")"


# ---------------------------------------------------------------------------
# Subset masks


def bits(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def subset_key(mask: int) -> tuple:
    """Size, then lexicographic on the sorted index tuple."""
    return (popcount(mask), tuple(bits(mask)))


def full_submatrix(M: CoxeterMatrix, T: int) -> CoxeterMatrix:
    idx = bits(T)
    if idx and idx[-1] >= M.n:
        raise CoxeterMatrixError("subset has bits beyond the generator count")
    labels = tuple(tuple(M.labels[i][j] for j in idx) for i in idx)
    return CoxeterMatrix(labels, tuple(M.names[i] for i in idx))


def disjoint_union(*mats: CoxeterMatrix) -> CoxeterMatrix:
    """Block-diagonal matrix (direct product of the groups), cross labels 2."""
    n = sum(m.n for m in mats)
    rows = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    names = []
    off = 0
    for mat in mats:
        for i in range(mat.n):
            for j in range(mat.n):
                rows[off + i][off + j] = mat.labels[i][j]
        names.extend(mat.names)
        off += mat.n
    if len(set(names)) != len(names):
        names = [f"s{i + 1}" for i in range(n)]
    return CoxeterMatrix(tuple(map(tuple, rows)), tuple(names))


# ---------------------------------------------------------------------------
# Finite types


@dataclass(frozen=True, order=True)
class FiniteType:
    """One irreducible label from the classification, or ``Infinite``."""

    family: str
    rank: int
    p: int = 0

    def __str__(self):
        if self.family == "Infinite":
            return "Infinite"
        if self.family == "I2":
            return f"I2({self.p})"
        return f"{self.family}{self.rank}"

    @property
    def is_infinite(self) -> bool:
        return self.family == "Infinite"


INFINITE = FiniteType("Infinite", 0)


def _path_graph(labels: Sequence[int]) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(len(labels) + 1))
    for i, m in enumerate(labels):
        g.add_edge(i, i + 1, m=m)
    return g


def _branched_graph(arm: int, branch_at: int) -> nx.Graph:
    """A path of ``arm`` vertices with one extra leaf on vertex ``branch_at``."""
    g = _path_graph([3] * (arm - 1))
    g.add_edge(branch_at, arm, m=3)
    return g


def _templates(n: int) -> list[tuple[FiniteType, nx.Graph]]:
    out = [(FiniteType("A", n), _path_graph([3] * (n - 1)))]
    if n >= 2:
        out.append((FiniteType("B", n), _path_graph([4] + [3] * (n - 2))))
    if n >= 4:
        out.append((FiniteType("D", n), _branched_graph(n - 1, 1)))
    if n == 3:
        out.append((FiniteType("H", 3), _path_graph([5, 3])))
    if n == 4:
        out.append((FiniteType("F", 4), _path_graph([3, 4, 3])))
        out.append((FiniteType("H", 4), _path_graph([5, 3, 3])))
    if n in (6, 7, 8):
        out.append((FiniteType("E", n), _branched_graph(n - 1, 2)))
    return out


def _fingerprint(g: nx.Graph) -> tuple:
    return (tuple(sorted(d for _, d in g.degree())),
            tuple(sorted(m for _, _, m in g.edges(data="m"))))


def _diagram(M: CoxeterMatrix, T: int | None = None) -> nx.Graph:
    idx = bits(M.full if T is None else T)
    g = nx.Graph()
    g.add_nodes_from(idx)
    for a, i in enumerate(idx):
        for j in idx[a + 1:]:
            m = M.labels[i][j]
            if m is INF or m >= 3:
                g.add_edge(i, j, m=m)
    return g


def _classify_connected(g: nx.Graph) -> FiniteType:
    n = g.number_of_nodes()
    labels = [m for _, _, m in g.edges(data="m")]
    if any(m is INF for m in labels):
        return INFINITE
    if n == 1:
        return FiniteType("A", 1)
    if g.number_of_edges() != n - 1:
        return INFINITE
    if n == 2:
        p = labels[0]
        if p == 3:
            return FiniteType("A", 2)
        if p == 4:
            return FiniteType("B", 2)
        return FiniteType("I2", 2, p)
    fp = _fingerprint(g)
    for ftype, tmpl in _templates(n):
        if _fingerprint(tmpl) != fp:
            continue
        gm = GraphMatcher(g, tmpl, edge_match=lambda a, b: a["m"] == b["m"])
        if gm.is_isomorphic():
            return ftype
    return INFINITE


def classify_irreducible(M: CoxeterMatrix) -> FiniteType:
    """Type of a matrix whose diagram is connected."""
    g = _diagram(M)
    if M.n == 0 or not nx.is_connected(g):
        raise ValueError("classify_irreducible needs a connected diagram")
    return _classify_connected(g)


@lru_cache(maxsize=None)
def classify(M: CoxeterMatrix, T: int | None = None) -> tuple[FiniteType, ...]:
    """Sorted irreducible components of W_T, or ``(INFINITE,)``."""
    g = _diagram(M, T)
    parts = []
    for comp in nx.connected_components(g):
        t = _classify_connected(g.subgraph(comp))
        if t.is_infinite:
            return (INFINITE,)
        parts.append(t)
    return tuple(sorted(parts))


def type_str(types: Sequence[FiniteType]) -> str:
    if not types:
        return "trivial"
    return "x".join(str(t) for t in types)


def is_spherical(M: CoxeterMatrix, T: int | None = None) -> bool:
    return INFINITE not in classify(M, T)


def spherical_subsets(M: CoxeterMatrix, kmax: int | None = None) -> list[int]:
    """Spherical subsets of size <= kmax, sorted by size then lexicographically.

    Sphericality is closed under taking subsets, so a k-set is only tested
    when all of its (k-1)-subsets were spherical.
    """
    if kmax is None:
        kmax = M.n
    if kmax > M.n:
        raise ValueError("kmax exceeds the generator count")
    levels = [[0]]
    for k in range(1, kmax + 1):
        prev = set(levels[-1])
        cur = []
        for combo in combinations(range(M.n), k):
            mask = mask_of(combo)
            if all(mask & ~(1 << i) in prev for i in combo) and is_spherical(M, mask):
                cur.append(mask)
        if not cur:
            break
        levels.append(cur)
    return [m for level in levels for m in sorted(level, key=subset_key)]


_EXCEPTIONAL_ORDERS = {("F", 4): 1152, ("H", 3): 120, ("H", 4): 14400,
                       ("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600}


def irreducible_order(t: FiniteType) -> int:
    n = t.rank
    if t.family == "A":
        return factorial(n + 1)
    if t.family == "B":
        return 2 ** n * factorial(n)
    if t.family == "D":
        return 2 ** (n - 1) * factorial(n)
    if t.family == "I2":
        return 2 * t.p
    if (t.family, n) in _EXCEPTIONAL_ORDERS:
        return _EXCEPTIONAL_ORDERS[(t.family, n)]
    raise ValueError(f"{t} is not a finite type")


def group_order(types: Sequence[FiniteType]) -> int:
    n = 1
    for t in types:
        n *= irreducible_order(t)
    return n
