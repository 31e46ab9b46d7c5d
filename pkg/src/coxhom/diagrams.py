"""Derived diagrams of a Coxeter matrix and their low-dimensional homology.

Seven diagrams feed the H2 and H3 formulas:

* ``odd``        generators, joined when m(s,t) is odd
* ``even``       generators, joined when m(s,t) is even, finite and not 2
* ``dotdot``     commuting pairs, joined when they share a generator and the
                 other two generators have odd label
* ``a2``         pairs with m = 3, joined when they share a generator and the
                 other two commute
* ``even_spoke`` 3-sets {s,t,u} with m(s,t) = m(s,u) = 2 and m(t,u) even
* ``a3``         3-sets spanning an A3 subdiagram
* the square complex on ``dotdot`` with product-form squares filled in

Vertices are frozensets of generator indices, listed in lexicographic order
of their sorted index tuples.  Edges are index pairs (i, j) with i < j.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import networkx as nx

from .coxeter import CoxeterMatrix, FiniteType, classify, is_even, is_odd, mask_of
from .linalg import AbelianGroup, f2_rank

KINDS = ("odd", "even", "dotdot", "a2", "even_spoke", "a3")


@dataclass
class DerivedGraph:
    kind: str
    vertices: list[frozenset]
    edges: list[tuple[int, int]] = field(default_factory=list)

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertices")
        n = len(self.vertices)
        seen = set()
        clean = []
        for i, j in self.edges:
            if i == j:
                raise ValueError("self-loop")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError("edge references a missing vertex")
            e = (min(i, j), max(i, j))
            if e not in seen:
                seen.add(e)
                clean.append(e)
        self.edges = sorted(clean)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(len(self.vertices)))
        g.add_edges_from(self.edges)
        return g

    def index(self, vertex) -> int:
        return self.vertices.index(frozenset(vertex))


@dataclass
class SquareComplex:
    graph: DerivedGraph
    two_cells: list[tuple[int, int, int, int]] = field(default_factory=list)

    def __post_init__(self):
        edges = set(self.graph.edges)
        seen = set()
        cells = []
        for cell in self.two_cells:
            for k in range(4):
                a, b = cell[k], cell[(k + 1) % 4]
                if (min(a, b), max(a, b)) not in edges:
                    raise ValueError(f"2-cell {cell} uses a missing edge")
            key = frozenset(cell)
            if key not in seen:
                seen.add(key)
                cells.append(tuple(cell))
        self.two_cells = cells


def _sort_vertices(vs) -> list[frozenset]:
    return sorted((frozenset(v) for v in vs), key=lambda v: (len(v), sorted(v)))


def _pairs(M: CoxeterMatrix, pred) -> list[frozenset]:
    return [frozenset((i, j)) for i, j, m in M.pairs() if pred(m)]


# ---------------------------------------------------------------------------
# Builders


def build_pair_graphs(M: CoxeterMatrix) -> tuple[DerivedGraph, DerivedGraph, DerivedGraph]:
    """(D_odd, D_even, D_dotdot)."""
    gens = [frozenset((i,)) for i in range(M.n)]
    odd = DerivedGraph("odd", gens, [(i, j) for i, j, m in M.pairs() if is_odd(m)])
    even = DerivedGraph("even", list(gens),
                        [(i, j) for i, j, m in M.pairs() if is_even(m) and m != 2])
    return odd, even, build_dotdot_graph(M)


def build_dotdot_graph(M: CoxeterMatrix) -> DerivedGraph:
    verts = _pairs(M, lambda m: m == 2)
    return DerivedGraph("dotdot", verts, _shared_edges(M, verts, is_odd))


def _shared_edges(M: CoxeterMatrix, verts, rule) -> list[tuple[int, int]]:
    """Pairs of 2-set vertices sharing exactly one generator whose other two
    generators satisfy ``rule`` on their label."""
    edges = []
    for a, b in combinations(range(len(verts)), 2):
        common = verts[a] & verts[b]
        if len(common) != 1:
            continue
        (x,) = verts[a] - common
        (y,) = verts[b] - common
        if rule(M.labels[x][y]):
            edges.append((a, b))
    return edges


def build_a2_graph(M: CoxeterMatrix) -> DerivedGraph:
    verts = _pairs(M, lambda m: m == 3)
    return DerivedGraph("a2", verts, _shared_edges(M, verts, lambda m: m == 2))


def even_spoke_assignments(M: CoxeterMatrix, T: frozenset) -> list[tuple[int, frozenset]]:
    """Ways to read T as (s, {t,u}) with m(s,t) = m(s,u) = 2 and m(t,u) even."""
    out = []
    for s in sorted(T):
        t, u = sorted(T - {s})
        if M.labels[s][t] == 2 and M.labels[s][u] == 2 and is_even(M.labels[t][u]):
            out.append((s, frozenset((t, u))))
    return out


def build_even_spoke_graph(M: CoxeterMatrix) -> DerivedGraph:
    verts = [frozenset(c) for c in combinations(range(M.n), 3)
             if even_spoke_assignments(M, frozenset(c))]
    assign = [even_spoke_assignments(M, v) for v in verts]
    edges = []
    for a, b in combinations(range(len(verts)), 2):
        if any(p1 == p2 and is_odd(M.labels[s1][s2])
               for s1, p1 in assign[a] for s2, p2 in assign[b]):
            edges.append((a, b))
    return DerivedGraph("even_spoke", verts, edges)


_A3 = (FiniteType("A", 3),)
_A4 = (FiniteType("A", 4),)


def a3_orientations(M: CoxeterMatrix, T: frozenset) -> list[tuple[int, int, int]]:
    """Both readings (s, t, u) of an A3 triple: m(s,t) = m(t,u) = 3, m(s,u) = 2."""
    out = []
    for t in sorted(T):
        s, u = sorted(T - {t})
        if M.labels[s][t] == 3 and M.labels[t][u] == 3 and M.labels[s][u] == 2:
            out += [(s, t, u), (u, t, s)]
    return out


def build_a3_graph(M: CoxeterMatrix, literal: bool = False) -> DerivedGraph:
    """A3 triples; joined when they overlap in two generators and span A4.

    With ``literal`` the alternative rule is used instead: some orientations
    (s1,t,u), (s2,t,u) agree on (t, u) and m(s1, s2) = 2.  That rule merges
    the three A3 classes of D4 into one, so it is only a diagnostic.
    """
    verts = [frozenset(c) for c in combinations(range(M.n), 3)
             if classify(M, mask_of(c)) == _A3]
    edges = []
    for a, b in combinations(range(len(verts)), 2):
        T1, T2 = verts[a], verts[b]
        if literal:
            ok = any(t1 == t2 and u1 == u2 and M.labels[s1][s2] == 2
                     for s1, t1, u1 in a3_orientations(M, T1)
                     for s2, t2, u2 in a3_orientations(M, T2))
        else:
            ok = len(T1 & T2) == 2 and classify(M, mask_of(T1 | T2)) == _A4
        if ok:
            edges.append((a, b))
    return DerivedGraph("a3", verts, edges)


def build_square_complex(M: CoxeterMatrix, dotdot: DerivedGraph | None = None) -> SquareComplex:
    """D_dotdot with a 2-cell on every product square {a,b} x {c,d}.

    Here m(a,b) and m(c,d) are odd and all four cross labels are 2; the
    boundary runs (a,c) - (a,d) - (b,d) - (b,c).
    """
    if dotdot is None:
        dotdot = build_dotdot_graph(M)
    odd_pairs = [(i, j) for i, j, m in M.pairs() if is_odd(m)]
    cells = []
    for (a, b), (c, d) in combinations(odd_pairs, 2):
        if len({a, b, c, d}) < 4:
            continue
        if all(M.labels[x][y] == 2 for x in (a, b) for y in (c, d)):
            cyc = [frozenset(p) for p in ((a, c), (a, d), (b, d), (b, c))]
            cells.append(tuple(dotdot.index(v) for v in cyc))
    return SquareComplex(dotdot, cells)


_H3_B3 = {(FiniteType("H", 3),), (FiniteType("B", 3),)}


def h3_b3_subsets(M: CoxeterMatrix) -> list[frozenset]:
    return [frozenset(c) for c in combinations(range(M.n), 3)
            if classify(M, mask_of(c)) in _H3_B3]


def count_h3_b3_subsets(M: CoxeterMatrix) -> int:
    return len(h3_b3_subsets(M))


@dataclass
class DerivedDiagrams:
    odd: DerivedGraph
    even: DerivedGraph
    dotdot: DerivedGraph
    a2: DerivedGraph
    even_spoke: DerivedGraph
    a3: DerivedGraph
    squares: SquareComplex

    def graphs(self) -> list[DerivedGraph]:
        return [self.odd, self.even, self.dotdot, self.a2, self.even_spoke, self.a3]


def build_all(M: CoxeterMatrix, literal_a3: bool = False) -> DerivedDiagrams:
    odd, even, dotdot = build_pair_graphs(M)
    return DerivedDiagrams(odd, even, dotdot, build_a2_graph(M), build_even_spoke_graph(M),
                           build_a3_graph(M, literal=literal_a3),
                           build_square_complex(M, dotdot))


# ---------------------------------------------------------------------------
# Homology


def components(G: DerivedGraph) -> list[list[int]]:
    """Connected components as sorted vertex-index lists, ordered by least index."""
    comps = [sorted(c) for c in nx.connected_components(G.to_networkx())]
    return sorted(comps, key=lambda c: c[0])


def component_index(G: DerivedGraph) -> dict[int, int]:
    out = {}
    for k, comp in enumerate(components(G)):
        for v in comp:
            out[v] = k
    return out


def graph_h0(G: DerivedGraph, p: int) -> AbelianGroup:
    return AbelianGroup.elementary(p, len(components(G)))


def graph_h1_f2(G: DerivedGraph) -> AbelianGroup:
    rank = len(G.edges) - len(G.vertices) + len(components(G))
    return AbelianGroup.elementary(2, rank)


def square_boundary_f2(C: SquareComplex) -> list[list[int]]:
    """Edge x 2-cell incidence matrix over F2."""
    eidx = {e: k for k, e in enumerate(C.graph.edges)}
    mat = [[0] * len(C.two_cells) for _ in C.graph.edges]
    for c, cell in enumerate(C.two_cells):
        for k in range(4):
            a, b = cell[k], cell[(k + 1) % 4]
            mat[eidx[(min(a, b), max(a, b))]][c] ^= 1
    return mat


def edge_boundary_f2(G: DerivedGraph) -> list[list[int]]:
    """Vertex x edge incidence matrix over F2."""
    mat = [[0] * len(G.edges) for _ in G.vertices]
    for k, (a, b) in enumerate(G.edges):
        mat[a][k] ^= 1
        mat[b][k] ^= 1
    return mat


def complex_h1_f2(C: SquareComplex) -> AbelianGroup:
    cycles = len(C.graph.edges) - len(C.graph.vertices) + len(components(C.graph))
    return AbelianGroup.elementary(2, cycles - f2_rank(square_boundary_f2(C)))


# ---------------------------------------------------------------------------
# DOT output


def vertex_label(M: CoxeterMatrix, v: frozenset) -> str:
    return "{" + ",".join(M.names[i] for i in sorted(v)) + "}"


def graph_to_dot(M: CoxeterMatrix, G: DerivedGraph, name: str | None = None) -> str:
    lines = [f"graph {name or G.kind} {{"]
    for k, v in enumerate(G.vertices):
        lines.append(f'  v{k} [label="{vertex_label(M, v)}"];')
    for a, b in G.edges:
        lines.append(f"  v{a} -- v{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def complex_to_dot(M: CoxeterMatrix, C: SquareComplex) -> str:
    body = graph_to_dot(M, C.graph, "dotdot_squares").rstrip("}\n").rstrip("\n")
    lines = [body]
    for cell in C.two_cells:
        cyc = " - ".join(vertex_label(M, C.graph.vertices[v]) for v in cell)
        lines.append(f"  // 2-cell: {cyc}")
    lines.append("}")
    return "\n".join(lines) + "\n"
