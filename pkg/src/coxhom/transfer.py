"""Collapse maps between resolutions and transfer maps on twisted homology.

Chains over the group ring are dicts ``{(g, flag): coefficient}`` where g is
an element index of the ambient group cache.  Chains after tensoring with a
coefficient module are dicts ``{flag: coefficient}``.
"""

from __future__ import annotations

from collections import defaultdict

from .coxeter import CoxeterMatrix, bits, classify, group_order
from .linalg import chain_homology, smith_normal_form
from .resolution import (Coefficients, boundary_matrix, boundary_terms, enumerate_flags)
from .words import GroupCache, enumerate_group

GroupChain = dict
Chain = dict


def _add(out, key, c):
    if c:
        out[key] += c
        if not out[key]:
            del out[key]


class CollapseMap:
    """The chain map f_0, f_1, f_2 from the resolution of W_T to that of W_U.

    Defined on v e(Gamma) with v minimal in its coset W_U v and extended
    W_U-equivariantly: g = w v gives f(g e(Gamma)) = w f(v e(Gamma)).
    """

    def __init__(self, M: CoxeterMatrix, T: int, U: int, cap: int | None = None):
        if U & ~T:
            raise ValueError("U must be a subset of T")
        self.M, self.T, self.U = M, T, U
        self.GT = enumerate_group(M, T, cap)
        self.GU = enumerate_group(M, U, cap)
        self.cap = cap

    def _to_u(self, g: int) -> int:
        return self.GU.read(self.GT.words[g])

    def _shift(self, v: int, s: int) -> int | None:
        """t in U with v s = t v, or None when v s is again (U,0)-reduced."""
        G = self.GT
        vs = G.rmul_gen(v, s)
        if all(G.length[G.lmul_gen(u, vs)] > G.length[vs] for u in bits(self.U)):
            return None
        t = G.as_generator(G.mul(vs, G.inverse[v]))
        if t is None or not self.U >> t & 1:
            raise AssertionError("coset factorisation failed")  # cannot happen
        return t

    def on_reduced(self, v: int, flag: tuple) -> tuple[int, tuple] | None:
        """f(v e(flag)) for v (U,0)-reduced, as (sign, flag over U) or None."""
        if not flag:
            return 1, ()
        if len(flag) == 1 and len(bits(flag[0])) == 1:
            t = self._shift(v, bits(flag[0])[0])
            return None if t is None else (1, (1 << t,))
        if len(flag) == 2 and flag[0] == flag[1] and len(bits(flag[0])) == 1:
            t = self._shift(v, bits(flag[0])[0])
            return None if t is None else (1, (1 << t, 1 << t))
        if len(flag) == 1 and len(bits(flag[0])) == 2:
            s, u = bits(flag[0])
            t, r = self._shift(v, s), self._shift(v, u)
            if t is None or r is None:
                return None
            # Gamma_{tr} carries the orientation of (t, r) in the fixed order
            return (1 if t < r else -1), ((1 << t) | (1 << r),)
        raise ValueError("the collapse map is only defined in degrees 0, 1, 2")

    def apply(self, chain: GroupChain) -> GroupChain:
        """Image of a chain {(g in W_T, flag): c} as {(h in W_U, flag): c}."""
        out = defaultdict(int)
        for (g, flag), c in chain.items():
            w, v = self.GT.factor_right(g, self.U)
            img = self.on_reduced(v, flag)
            if img is None:
                continue
            sign, f = img
            _add(out, (self._to_u(w), f), sign * c)
        return dict(out)


def group_boundary(M: CoxeterMatrix, G: GroupCache, chain: GroupChain,
                   cap: int | None = None) -> GroupChain:
    """Boundary of a group-ring chain; G must contain every letter involved."""
    out = defaultdict(int)
    for (g, flag), c in chain.items():
        for term in boundary_terms(M, flag, cap):
            sign = -1 if term.alpha % 2 else 1
            _add(out, (G.read(term.beta, g), term.target), sign * c)
    return dict(out)


def collapse_chain(M: CoxeterMatrix, T: int, U: int, q: int, chain: GroupChain,
                   cap: int | None = None) -> GroupChain:
    if q > 2:
        raise ValueError("the collapse map is only defined in degrees 0, 1, 2")
    for (_, flag) in chain:
        if sum(len(bits(x)) for x in flag) != q:
            raise ValueError("chain has a term of the wrong degree")
    return CollapseMap(M, T, U, cap).apply(chain)


def check_collapse_chain_map(M: CoxeterMatrix, T: int, U: int, cap: int | None = None) -> list[str]:
    """Failures of f_(q-1) delta_q = delta_q f_q on all v e(Gamma), q = 1, 2."""
    f = CollapseMap(M, T, U, cap)
    failures = []
    for q in (1, 2):
        for flag in enumerate_flags(T, q):
            for g in range(f.GT.size):
                basis = {(g, flag): 1}
                left = f.apply(group_boundary(M, f.GT, basis, cap))
                right = group_boundary(M, f.GU, f.apply(basis), cap)
                if left != right:
                    failures.append(f"q={q} g={f.GT.words[g]} flag={flag}")
    return failures


def tensor_down(chain: GroupChain, G: GroupCache, coeffs: Coefficients | str) -> Chain:
    """1 (x) chain in Z (x)_W C: g acts by +1 or by (-1)^l(g)."""
    coeffs = Coefficients(coeffs)
    out = defaultdict(int)
    for (g, flag), c in chain.items():
        sign = -1 if coeffs == Coefficients.ORIENTATION and G.length[g] % 2 else 1
        _add(out, flag, sign * c)
    return dict(out)


def transfer_chain(M: CoxeterMatrix, T: int, U: int, q: int, chain: Chain,
                   cap: int | None = None) -> Chain:
    """Chain-level transfer H_q(W_T; Z_T) -> H_q(W_U; Z_U) followed by collapse.

    m (x) x goes to the sum over coset representatives g of W_U in W_T of
    m g^-1 (x) g x, with g taken minimal in W_U g.
    """
    f = CollapseMap(M, T, U, cap)
    G = f.GT
    reps = G.min_right_coset_reps(T, U)
    lifted = defaultdict(int)
    for flag, c in chain.items():
        for g in reps:
            sign = -1 if G.length[g] % 2 else 1
            _add(lifted, (g, flag), sign * c)
    if q > 2:
        raise ValueError("the collapse map is only defined in degrees 0, 1, 2")
    return tensor_down(f.apply(dict(lifted)), f.GU, Coefficients.ORIENTATION)


# ---------------------------------------------------------------------------
# Homology classes


class HomologyClasses:
    """Coordinates of cycles of Z (x)_W C_q modulo boundaries.

    With left * d_in * right = diag(d_1 .. d_r), a cycle z has coordinates
    y = left z; the class is (y_i mod d_i for i < r, y_i for i >= r), which
    vanishes exactly when z is a boundary.
    """

    def __init__(self, M: CoxeterMatrix, T: int, q: int, coeffs: Coefficients | str,
                 cap: int | None = None):
        self.flags = enumerate_flags(T, q)
        self.index = {f: k for k, f in enumerate(self.flags)}
        self.d_out = boundary_matrix(M, T, q, coeffs, cap) if q >= 1 else []
        d_in = boundary_matrix(M, T, q + 1, coeffs, cap)
        self.snf = smith_normal_form(d_in, cols=len(enumerate_flags(T, q + 1)), transforms=True)
        self.group = chain_homology(self.d_out, d_in, middle=len(self.flags))

    def vector(self, chain: Chain) -> list[int]:
        z = [0] * len(self.flags)
        for flag, c in chain.items():
            z[self.index[flag]] += c
        return z

    def is_cycle(self, chain: Chain) -> bool:
        z = self.vector(chain)
        return all(sum(a * b for a, b in zip(row, z)) == 0 for row in self.d_out)

    def coordinates(self, chain: Chain) -> tuple[int, ...]:
        z = self.vector(chain)
        y = [sum(a * b for a, b in zip(row, z)) for row in self.snf.left]
        diag = self.snf.diagonal
        out = [y[i] % diag[i] for i in range(len(diag)) if diag[i] > 1]
        out += y[len(diag):]
        return tuple(out)

    def is_zero(self, chain: Chain) -> bool:
        return not any(self.coordinates(chain))

    def same_class(self, a: Chain, b: Chain) -> bool:
        diff = dict(a)
        for k, c in b.items():
            diff[k] = diff.get(k, 0) - c
        return self.is_zero(diff)


def transfer_d1(M: CoxeterMatrix, T: int, U: int, q: int, chain: Chain,
                cap: int | None = None) -> tuple[Chain, tuple[int, ...]]:
    """Transfer of a twisted cycle of W_T into H_q(W_U; Z_U).

    Returns the image chain and its class coordinates.
    """
    img = transfer_chain(M, T, U, q, chain, cap)
    return img, HomologyClasses(M, U, q, Coefficients.ORIENTATION, cap).coordinates(img)


def coset_index(M: CoxeterMatrix, T: int, U: int) -> int:
    return group_order(classify(M, T)) // group_order(classify(M, U))
