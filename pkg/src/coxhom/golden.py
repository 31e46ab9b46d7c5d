"""Published H1, H2, H3 values for the finite irreducible Coxeter groups.

These are reference values to compare against, transcribed as printed.
Three cells disagree with the closed formulas and with the resolution
oracle (D4 H2, D6 H3, E7 H3); see ``KNOWN_DISAGREEMENTS``.
"""

from __future__ import annotations

from .linalg import AbelianGroup


def _a(n):
    h2 = "0" if n <= 2 else "Z2"
    h3 = {1: "Z2", 2: "Z2 + Z3", 3: "Z2 + Z3 + Z4", 4: "Z2 + Z3 + Z4"}.get(n, "Z2^2 + Z3 + Z4")
    return "Z2", h2, h3


def _b(n):
    h2 = {2: "Z2", 3: "Z2^2"}.get(n, "Z2^3")
    h3 = {2: "Z2^2 + Z4", 3: "Z2^4 + Z3 + Z4", 4: "Z2^5 + Z3 + Z4^2",
          5: "Z2^6 + Z3 + Z4^2"}.get(n, "Z2^7 + Z3 + Z4^2")
    return "Z2^2", h2, h3


def _d(n):
    h3 = {4: "Z2^2 + Z3 + Z4^3", 5: "Z2^2 + Z3 + Z4^2"}.get(n, "Z2^3 + Z3 + Z4^2")
    return "Z2", "Z2^2", h3


def _i2(p):
    if p % 2:
        return "Z2", "0", f"Z2 + Z{p}"
    return "Z2^2", "Z2", f"Z2^2 + Z{p}"


def published_rows(max_rank: int = 8) -> list[tuple[str, tuple[str, str, str]]]:
    rows = []
    rows += [(f"A{n}", _a(n)) for n in range(1, max_rank + 1)]
    rows += [(f"B{n}", _b(n)) for n in range(2, max_rank + 1)]
    rows += [(f"D{n}", _d(n)) for n in range(4, max_rank + 1)]
    rows += [(f"I2({p})", _i2(p)) for p in range(5, 13)]
    rows += [
        ("F4", ("Z2^2", "Z2^2", "Z2^5 + Z3^2 + Z4")),
        ("H3", ("Z2", "Z2", "Z2^3 + Z3 + Z5")),
        ("H4", ("Z2", "Z2", "Z2^2 + Z3 + Z4 + Z5")),
        ("E6", ("Z2", "Z2", "Z2^2 + Z3 + Z4")),
        ("E7", ("Z2", "Z2", "Z2^2 + Z3 + Z4")),
        ("E8", ("Z2", "Z2", "Z2^2 + Z3 + Z4")),
    ]
    return rows


def published(name: str) -> tuple[AbelianGroup, AbelianGroup, AbelianGroup]:
    for row, vals in published_rows():
        if row == name:
            return tuple(AbelianGroup.parse(v) for v in vals)
    raise KeyError(name)


# (family, degree) -> value computed by both the formulas and the resolution
KNOWN_DISAGREEMENTS = {
    ("D4", 2): "Z2^3",
    ("D6", 3): "Z2^4 + Z3 + Z4^2",
    ("E7", 3): "Z2^3 + Z3 + Z4",
}
