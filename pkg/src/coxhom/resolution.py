"""Free resolution of a finite Coxeter group by flags of generator subsets.

The degree-k basis over Z[W_T] is the set of flags Gamma_1 >= Gamma_2 >= ...
of nonempty subsets of T with total size k.  The boundary of a basis flag
is a signed sum of group elements times flags of one lower degree; after
tensoring with the trivial module Z (every element acts by +1) or the
orientation module Z_T (w acts by (-1)^l(w)) it becomes an integer matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterator

from .coxeter import CoxeterMatrix, bits, classify, group_order, is_spherical, popcount
from .linalg import AbelianGroup, ChainComplexError, chain_homology, matmul
from .words import (EnumerationLimitError, GroupCache, conjugate_map, default_cap,
                    enumerate_group)

MAX_DEGREE = 4

Flag = tuple[int, ...]


class Coefficients(str, Enum):
    TRIVIAL = "trivial"
    ORIENTATION = "orientation"


@dataclass(frozen=True)
class ExponentTrace:
    """How the sign exponent of one boundary term was assembled."""

    i: int
    tau: int
    beta: tuple[int, ...]
    mu: int
    sigmas: tuple[int, ...]
    alpha: int


@dataclass(frozen=True)
class BoundaryTerm:
    """(-1)^alpha * beta * e(target), with beta given as a word."""

    target: Flag
    beta: tuple[int, ...]
    alpha: int
    trace: ExponentTrace

    def coefficient(self, coeffs: Coefficients) -> int:
        sign = -1 if self.alpha % 2 else 1
        if coeffs == Coefficients.ORIENTATION and len(self.beta) % 2:
            sign = -sign
        return sign


def flag_str(M: CoxeterMatrix, flag: Flag) -> str:
    if not flag:
        return "()"
    return ">".join("".join(M.names[i] for i in bits(g)) if all(len(M.names[i]) == 1 for i in bits(g))
                    else "{" + ",".join(M.names[i] for i in bits(g)) + "}" for g in flag)


def _flag_key(flag: Flag):
    return (len(flag), tuple(-popcount(g) for g in flag), tuple(tuple(bits(g)) for g in flag))


@lru_cache(maxsize=None)
def enumerate_flags(T: int, k: int) -> tuple[Flag, ...]:
    """All flags of degree k inside T: fewest parts first, then bigger parts
    first, then lexicographic on the subsets."""
    if k < 0:
        raise ValueError("degree must be nonnegative")
    if k > MAX_DEGREE:
        raise ValueError(f"flags of degree above {MAX_DEGREE} are never needed")
    out = []

    def rec(prefix, top, left):
        if left == 0:
            out.append(tuple(prefix))
            return
        # nonempty subsets of top with size <= left
        sub = top
        while sub:
            if popcount(sub) <= left:
                rec(prefix + [sub], sub, left - popcount(sub))
            sub = (sub - 1) & top

    rec([], T, k)
    return tuple(sorted(out, key=_flag_key))


def _inversions(mapping: dict[int, int], gamma: int) -> int:
    xs = bits(gamma)
    return sum(1 for a in range(len(xs)) for b in range(a + 1, len(xs))
               if mapping[xs[a]] > mapping[xs[b]])


def boundary_terms(M: CoxeterMatrix, flag: Flag, cap: int | None = None) -> Iterator[BoundaryTerm]:
    """Terms of the boundary of e(flag) over the group ring."""
    n = len(flag)
    for i in range(n):
        gi = flag[i]
        nxt = flag[i + 1] if i + 1 < n else 0
        if popcount(gi) == popcount(nxt):
            continue
        G = enumerate_group(M, gi, cap)
        before = sum(popcount(g) for g in flag[:i])
        gen_list = bits(gi)
        for pos, tau in enumerate(gen_list):
            rest = gi & ~(1 << tau)
            mu = pos + 1
            for beta in G.min_left_coset_reps(gi, rest):
                mapping = conjugate_map(G, beta, nxt) if nxt else {}
                if mapping is None:
                    continue
                image = 0
                for y in mapping.values():
                    image |= 1 << y
                if image & ~rest:
                    continue
                tail = []
                sigmas = []
                for gk in flag[i + 1:]:
                    m = 0
                    for x in bits(gk):
                        m |= 1 << mapping[x]
                    tail.append(m)
                    sigmas.append(_inversions(mapping, gk))
                target = flag[:i] + ((rest,) if rest else ()) + tuple(tail)
                ell = G.length[beta]
                alpha = (i + 1) * ell + before + mu + sum(sigmas)
                word = G.words[beta]
                yield BoundaryTerm(target, word, alpha,
                                   ExponentTrace(i + 1, tau, word, mu, tuple(sigmas), alpha))


def _check_finite(M: CoxeterMatrix, T: int, cap):
    # Only parabolics of rank <= 4 are ever enumerated, but the whole group
    # must still be finite and within the cap.
    if not is_spherical(M, T):
        raise EnumerationLimitError(f"W_{M.name_set(T)} is infinite")
    cap = default_cap() if cap is None else cap
    order = group_order(classify(M, T))
    if order > cap:
        raise EnumerationLimitError(
            f"W_{M.name_set(T)} has {order} elements, above the cap of {cap}")


def boundary_matrix(M: CoxeterMatrix, T: int, k: int, coeffs: Coefficients | str,
                    cap: int | None = None) -> list[list[int]]:
    """Matrix of delta_k from degree-k flags (columns) to degree k-1 flags (rows)."""
    coeffs = Coefficients(coeffs)
    if not 1 <= k <= MAX_DEGREE:
        raise ValueError(f"boundary degree must be in 1..{MAX_DEGREE}")
    _check_finite(M, T, cap)
    rows = enumerate_flags(T, k - 1)
    cols = enumerate_flags(T, k)
    ridx = {f: r for r, f in enumerate(rows)}
    mat = [[0] * len(cols) for _ in rows]
    for c, flag in enumerate(cols):
        for term in boundary_terms(M, flag, cap):
            mat[ridx[term.target]][c] += term.coefficient(coeffs)
    return mat


def homology_dcs(M: CoxeterMatrix, T: int | None, q: int, coeffs: Coefficients | str = "trivial",
                 cap: int | None = None) -> AbelianGroup:
    """H_q(W_T; Z) or H_q(W_T; Z_T) for q <= 3."""
    if T is None:
        T = M.full
    if not 0 <= q <= MAX_DEGREE - 1:
        raise ValueError("homology degree must be in 0..3")
    _check_finite(M, T, cap)
    mid = len(enumerate_flags(T, q))
    d_out = boundary_matrix(M, T, q, coeffs, cap) if q >= 1 else []
    d_in = boundary_matrix(M, T, q + 1, coeffs, cap)
    return chain_homology(d_out, d_in, middle=mid)


@dataclass
class ResolutionReport:
    ok: bool
    failures: list[str]


def verify_resolution(M: CoxeterMatrix, T: int | None = None, cap: int | None = None,
                      max_degree: int = MAX_DEGREE) -> ResolutionReport:
    """Check delta_k delta_(k+1) = 0 for both coefficient systems and H0 = Z."""
    if T is None:
        T = M.full
    failures = []
    for coeffs in Coefficients:
        mats = {k: boundary_matrix(M, T, k, coeffs, cap) for k in range(1, max_degree + 1)}
        for k in range(1, max_degree):
            prod = matmul(mats[k], mats[k + 1], inner=len(enumerate_flags(T, k)))
            for r, row in enumerate(prod):
                for c, x in enumerate(row):
                    if x:
                        src = flag_str(M, enumerate_flags(T, k + 1)[c])
                        failures.append(f"{coeffs.value}: delta_{k} delta_{k + 1} != 0 on {src}")
                        break
    try:
        h0 = homology_dcs(M, T, 0, Coefficients.TRIVIAL, cap)
    except ChainComplexError as e:
        failures.append(str(e))
    else:
        if h0 != AbelianGroup(1):
            failures.append(f"H0 with trivial coefficients is {h0}, expected Z")
    return ResolutionReport(not failures, failures)


def group_of(M: CoxeterMatrix, T: int, cap: int | None = None) -> GroupCache:
    return enumerate_group(M, T, cap)
