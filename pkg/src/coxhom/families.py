"""Family expressions and JSON matrix documents.

Grammar of a family expression::

    expr    := factor ( "x" factor )*
    factor  := A<n> | B<n> | D<n> | E6 | E7 | E8 | F4 | H3 | H4 | I2(<p>)
             | path(m1,...,mk) | cycle(m1,...,mk)
    label   := integer >= 2 | "inf"

Products are block-diagonal with all cross labels 2.  Generators are named
``s1 .. sn`` in index order.
"""

from __future__ import annotations

import json
import re

from .coxeter import INF, CoxeterMatrix, CoxeterMatrixError, disjoint_union


class FamilyParseError(ValueError):
    pass


def path_matrix(labels) -> CoxeterMatrix:
    n = len(labels) + 1
    return CoxeterMatrix.from_edges(n, {(i, i + 1): m for i, m in enumerate(labels)})


def cycle_matrix(labels) -> CoxeterMatrix:
    n = len(labels)
    if n < 3:
        raise FamilyParseError("a cycle needs at least three labels")
    return CoxeterMatrix.from_edges(n, {(i, (i + 1) % n): m for i, m in enumerate(labels)})


def type_a(n: int) -> CoxeterMatrix:
    return path_matrix([3] * (n - 1))


def type_b(n: int) -> CoxeterMatrix:
    if n < 2:
        raise FamilyParseError("B_n needs n >= 2")
    return path_matrix([4] + [3] * (n - 2))


def type_d(n: int) -> CoxeterMatrix:
    if n < 4:
        raise FamilyParseError("D_n needs n >= 4")
    # fork: s1 and s2 both attach to s3, then a path s3 - s4 - ... - sn
    edges = {(0, 2): 3, (1, 2): 3}
    edges.update({(i, i + 1): 3 for i in range(2, n - 1)})
    return CoxeterMatrix.from_edges(n, edges)


def type_e(n: int) -> CoxeterMatrix:
    if n not in (6, 7, 8):
        raise FamilyParseError("E_n needs n in 6, 7, 8")
    # path s1 .. s(n-1) with a leaf sn on the third vertex
    edges = {(i, i + 1): 3 for i in range(n - 2)}
    edges[(2, n - 1)] = 3
    return CoxeterMatrix.from_edges(n, edges)


def type_i2(p) -> CoxeterMatrix:
    return path_matrix([p])


_EXCEPTIONAL = {
    "F4": lambda: path_matrix([3, 4, 3]),
    "H3": lambda: path_matrix([5, 3]),
    "H4": lambda: path_matrix([5, 3, 3]),
    "E6": lambda: type_e(6),
    "E7": lambda: type_e(7),
    "E8": lambda: type_e(8),
}


def _parse_label(tok: str):
    tok = tok.strip()
    if tok.lower() in ("inf", "infinity", "oo"):
        return INF
    try:
        m = int(tok)
    except ValueError:
        raise FamilyParseError(f"bad label {tok!r}") from None
    if m < 2:
        raise FamilyParseError(f"labels must be >= 2, got {m}")
    return m


def _parse_factor(tok: str) -> CoxeterMatrix:
    tok = tok.strip()
    if tok in _EXCEPTIONAL:
        return _EXCEPTIONAL[tok]()
    m = re.fullmatch(r"([ABD])(\d+)", tok)
    if m:
        fam, n = m.group(1), int(m.group(2))
        if n < 1:
            raise FamilyParseError("rank must be positive")
        return {"A": type_a, "B": type_b, "D": type_d}[fam](n)
    m = re.fullmatch(r"I2\((.+)\)", tok)
    if m:
        return type_i2(_parse_label(m.group(1)))
    m = re.fullmatch(r"(path|cycle)\((.*)\)", tok)
    if m:
        labels = [_parse_label(x) for x in m.group(2).split(",")] if m.group(2).strip() else []
        try:
            return path_matrix(labels) if m.group(1) == "path" else cycle_matrix(labels)
        except CoxeterMatrixError as e:
            raise FamilyParseError(str(e)) from None
    raise FamilyParseError(f"unknown family {tok!r}")


def _split_product(expr: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in expr:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "x" and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def parse_family(expr: str) -> CoxeterMatrix:
    """Parse a family expression such as ``"cycle(3,3,3) x A1"``."""
    if not expr or not expr.strip():
        raise FamilyParseError("empty family expression")
    factors = [_parse_factor(p) for p in _split_product(expr)]
    if len(factors) == 1:
        return factors[0]
    return disjoint_union(*factors)


# ---------------------------------------------------------------------------
# Matrix documents: {"name": ..., "generators": [...], "matrix": [[...]]}, 0 = inf


def matrix_to_document(M: CoxeterMatrix, name: str | None = None) -> dict:
    doc = {}
    if name is not None:
        doc["name"] = name
    doc["generators"] = list(M.names)
    doc["matrix"] = [[0 if m is INF else m for m in row] for row in M.labels]
    return doc


def matrix_from_document(doc: dict) -> CoxeterMatrix:
    if not isinstance(doc, dict) or "matrix" not in doc:
        raise FamilyParseError("matrix document needs a 'matrix' member")
    rows = doc["matrix"]
    n = len(rows)
    names = doc.get("generators") or [f"s{i + 1}" for i in range(n)]
    if len(names) != n:
        raise FamilyParseError("generators and matrix sizes differ")
    labels = []
    for row in rows:
        if len(row) != n:
            raise FamilyParseError("matrix must be square")
        out = []
        for x in row:
            if isinstance(x, bool) or not isinstance(x, int):
                raise FamilyParseError(f"matrix entries must be integers, got {x!r}")
            if x < 0:
                raise FamilyParseError("negative matrix entry")
            out.append(INF if x == 0 else x)
        labels.append(tuple(out))
    try:
        return CoxeterMatrix(tuple(labels), tuple(str(s) for s in names))
    except CoxeterMatrixError as e:
        raise FamilyParseError(str(e)) from None


def dumps_document(M: CoxeterMatrix, name: str | None = None) -> str:
    return json.dumps(matrix_to_document(M, name), indent=2)


def loads_document(text: str) -> CoxeterMatrix:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise FamilyParseError(f"invalid JSON: {e}") from None
    return matrix_from_document(doc)
