"""Closed formulas for H1, H2 and H3 of a Coxeter group with integer coefficients."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .coxeter import INF, CoxeterMatrix
from .diagrams import (DerivedDiagrams, build_all, complex_h1_f2, component_index,
                       components, graph_h0, graph_h1_f2, h3_b3_subsets, vertex_label)
from .linalg import INTEGERS, ZERO, AbelianGroup, ab_tensor, ab_tor, direct_sum, f2_rank


@dataclass(frozen=True)
class Summand:
    """One labelled piece of a homology group, kept for reporting."""

    source: str
    group: AbelianGroup
    detail: str = ""

    def to_json(self) -> dict:
        return {"source": self.source, "group": str(self.group), "detail": self.detail}


@dataclass
class HomologyReport:
    degree: int
    summands: list[Summand] = field(default_factory=list)

    @property
    def group(self) -> AbelianGroup:
        return direct_sum(*(s.group for s in self.summands))

    def to_json(self) -> dict:
        return {"degree": self.degree, "group": str(self.group),
                "summands": [s.to_json() for s in self.summands]}


@dataclass
class ExtensionMatrix:
    """F2 matrix with rows = components of D_dotdot, columns = components of D_A3.

    ``row_reps`` / ``col_reps`` hold one representative vertex per component
    (a commuting pair, an A3 triple).
    """

    entries: list[list[int]]
    row_reps: list[frozenset]
    col_reps: list[frozenset]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.row_reps), len(self.col_reps)

    def rank(self) -> int:
        return f2_rank(self.entries)


def _diagrams(M, D):
    return build_all(M) if D is None else D


def h1(M: CoxeterMatrix, D: DerivedDiagrams | None = None) -> AbelianGroup:
    return graph_h0(_diagrams(M, D).odd, 2)


def h2_report(M: CoxeterMatrix, D: DerivedDiagrams | None = None) -> HomologyReport:
    D = _diagrams(M, D)
    return HomologyReport(2, [
        Summand("commuting-pair-components", graph_h0(D.dotdot, 2)),
        Summand("even-edges", AbelianGroup.elementary(2, len(D.even.edges))),
        Summand("odd-cycles", graph_h1_f2(D.odd)),
    ])


def h2(M: CoxeterMatrix, D: DerivedDiagrams | None = None) -> AbelianGroup:
    return h2_report(M, D).group


def extension_matrix(M: CoxeterMatrix, D: DerivedDiagrams | None = None) -> ExtensionMatrix:
    D = _diagrams(M, D)
    row_of = component_index(D.dotdot)
    rows = components(D.dotdot)
    cols = components(D.a3)
    X = [[0] * len(cols) for _ in rows]
    for j, comp in enumerate(cols):
        for v in comp:
            T = D.a3.vertices[v]
            for a in T:
                for b in T:
                    if a < b and M.labels[a][b] == 2:
                        X[row_of[D.dotdot.index((a, b))]][j] = 1
    return ExtensionMatrix(X, [D.dotdot.vertices[c[0]] for c in rows],
                           [D.a3.vertices[c[0]] for c in cols])


def assemble_extension(X: ExtensionMatrix | Sequence[Sequence[int]],
                       shape: tuple[int, int] | None = None) -> AbelianGroup:
    """Z4^r + Z2^(|I| + |J| - 2r) with r the F2-rank of X."""
    if isinstance(X, ExtensionMatrix):
        entries, (ni, nj) = X.entries, X.shape
    else:
        entries = [list(r) for r in X]
        if shape is None:
            shape = (len(entries), len(entries[0]) if entries else 0)
        ni, nj = shape
    r = f2_rank(entries)
    return AbelianGroup(0, (4,) * r + (2,) * (ni + nj - 2 * r))


def h3_report(M: CoxeterMatrix, D: DerivedDiagrams | None = None) -> HomologyReport:
    D = _diagrams(M, D)
    high = []
    for i, j, m in M.pairs():
        if m is not INF and m > 3:
            high.append(Summand("high-labels", AbelianGroup.cyclic(m),
                                f"{vertex_label(M, frozenset((i, j)))} m={m}"))
    hb = h3_b3_subsets(M)
    X = extension_matrix(M, D)
    out = [Summand("odd-components", graph_h0(D.odd, 2))]
    out.append(Summand("a2-components", graph_h0(D.a2, 3)))
    out.extend(high)
    out.append(Summand("even-spoke-components", graph_h0(D.even_spoke, 2)))
    out.append(Summand("h3-b3-subsets", AbelianGroup.elementary(2, len(hb)),
                       ", ".join(vertex_label(M, T) for T in hb)))
    out.append(Summand("extension-block", assemble_extension(X),
                       f"|I|={X.shape[0]} |J|={X.shape[1]} rank={X.rank()}"))
    out.append(Summand("square-complex-h1", complex_h1_f2(D.squares)))
    return HomologyReport(3, out)


def h3(M: CoxeterMatrix, D: DerivedDiagrams | None = None) -> AbelianGroup:
    return h3_report(M, D).group


def homology_le3(M: CoxeterMatrix) -> list[AbelianGroup]:
    """[H0, H1, H2, H3]."""
    D = build_all(M)
    return [INTEGERS, h1(M, D), h2(M, D), h3(M, D)]


def kunneth_h_le3(HU: Sequence[AbelianGroup], HV: Sequence[AbelianGroup]) -> list[AbelianGroup]:
    if HU[0] != INTEGERS or HV[0] != INTEGERS:
        raise ValueError("H0 must be Z on both factors")
    out = []
    for k in range(4):
        parts = [ab_tensor(HU[i], HV[k - i]) for i in range(k + 1)]
        parts += [ab_tor(HU[i], HV[k - 1 - i]) for i in range(k)]
        out.append(direct_sum(*parts) if parts else ZERO)
    return out
