"""Words, normal forms and coset representatives in finite parabolic subgroups.

A finite parabolic subgroup W_T is enumerated once by Todd-Coxeter coset
enumeration over the trivial subgroup, using the involution relators and the
braid relators (st)^m(s,t).  Elements are then relabelled in shortlex order
of their canonical words, so element index 0 is the identity and every
element's stored word is the shortlex-least reduced word for it.

Letters are always ambient generator indices of the Coxeter matrix.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .coxeter import INF, CoxeterMatrix, bits, classify, group_order, is_spherical

DEFAULT_CAP = 20000

Word = tuple[int, ...]


class EnumerationLimitError(RuntimeError):
    """A subgroup would exceed the element cap (or is infinite)."""


def default_cap() -> int:
    env = os.environ.get("COXHOM_CAP")
    if env:
        try:
            return int(env)
        except ValueError:
            pass
    return DEFAULT_CAP


def alt_word(a: int, b: int, k: int, end_aligned: bool = False) -> Word:
    """Alternating word of length k.

    Starts with ``a`` (``aba...``) by default; with ``end_aligned`` it ends
    with ``a`` instead (``...bab``).
    """
    w = tuple(a if i % 2 == 0 else b for i in range(k))
    return w[::-1] if end_aligned else w


@dataclass(frozen=True, order=True)
class Element:
    """A group element, stored as its shortlex-least reduced word."""

    word: Word

    @property
    def length(self) -> int:
        return len(self.word)

    def __str__(self):
        return "e" if not self.word else " ".join(map(str, self.word))


IDENTITY = Element(())


# ---------------------------------------------------------------------------
# Todd-Coxeter


def _relators(M: CoxeterMatrix, gens: Sequence[int]) -> list[list[int]]:
    rels = []
    for a, i in enumerate(gens):
        for b in range(a + 1, len(gens)):
            m = M.labels[i][gens[b]]
            if m is INF:
                continue
            rels.append([a, b] * m)
    return rels


def _todd_coxeter(ngens: int, relators: list[list[int]], limit: int) -> list[list[int]]:
    """Coset table of the trivial subgroup in <x_i | x_i^2, relators>.

    Every generator is an involution, so one column per generator suffices:
    table[c][x] = d implies table[d][x] = c.  Returns the compacted table.
    HLT strategy with coincidence processing.
    """
    table: list[list[int | None]] = [[None] * ngens]
    parent = [0]
    live = 1

    def rep(c):
        r = c
        while parent[r] != r:
            r = parent[r]
        while parent[c] != r:
            parent[c], c = r, parent[c]
        return r

    def new_coset(c, x):
        nonlocal live
        d = len(table)
        if live >= limit:
            raise EnumerationLimitError(f"coset enumeration exceeded {limit} cosets")
        table.append([None] * ngens)
        parent.append(d)
        live += 1
        table[c][x] = d
        table[d][x] = c
        return d

    def coincidence(a, b):
        queue = []

        def merge(k, l):
            nonlocal live
            k, l = rep(k), rep(l)
            if k == l:
                return
            if k > l:
                k, l = l, k
            parent[l] = k
            live -= 1
            queue.append(l)

        merge(a, b)
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            row = table[e]
            for x in range(ngens):
                f = row[x]
                if f is None:
                    continue
                if table[f][x] == e:
                    table[f][x] = None
                row[x] = None
                e1, f1 = rep(e), rep(f)
                if table[e1][x] is not None:
                    merge(f1, table[e1][x])
                elif table[f1][x] is not None:
                    merge(e1, table[f1][x])
                else:
                    table[e1][x] = f1
                    table[f1][x] = e1

    def scan_and_fill(c, w):
        f, i = c, 0
        b, j = c, len(w) - 1
        while True:
            while i <= j and table[f][w[i]] is not None:
                f = table[f][w[i]]
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i and table[b][w[j]] is not None:
                b = table[b][w[j]]
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if i == j:
                table[f][w[i]] = b
                table[b][w[i]] = f
                return
            new_coset(f, w[i])

    c = 0
    while c < len(table):
        if parent[c] == c:
            for w in relators:
                scan_and_fill(c, w)
                if parent[c] != c:
                    break
            if parent[c] == c:
                for x in range(ngens):
                    if table[c][x] is None:
                        new_coset(c, x)
        c += 1

    alive = [k for k in range(len(table)) if parent[k] == k]
    renum = {k: n for n, k in enumerate(alive)}
    return [[renum[rep(table[k][x])] for x in range(ngens)] for k in alive]


# ---------------------------------------------------------------------------
# Group caches


class GroupCache:
    """All elements of a finite parabolic subgroup W_T with lookup tables.

    Elements are integers 0..order-1 in shortlex order of their canonical
    words; 0 is the identity.  ``right[g][k]`` is g * gens[k] and
    ``left[g][k]`` is gens[k] * g.
    """

    def __init__(self, M: CoxeterMatrix, T: int, cap: int | None = None):
        cap = default_cap() if cap is None else cap
        self.M = M
        self.T = T
        self.cap = cap
        self.gens: tuple[int, ...] = tuple(bits(T))
        self.pos = {g: k for k, g in enumerate(self.gens)}
        if not is_spherical(M, T):
            raise EnumerationLimitError(
                f"W_{M.name_set(T)} is infinite; enumeration would exceed the cap of {cap}")
        expected = group_order(classify(M, T))
        if expected > cap:
            raise EnumerationLimitError(
                f"W_{M.name_set(T)} has {expected} elements, above the cap of {cap}")
        ng = len(self.gens)
        if ng:
            raw = _todd_coxeter(ng, _relators(M, self.gens), limit=max(64 * cap, 10000))
        else:
            raw = [[]]
        if len(raw) > cap:
            raise EnumerationLimitError(f"enumeration produced {len(raw)} elements")
        self._relabel(raw)

    def _relabel(self, raw):
        ng = len(self.gens)
        order = [0]
        index = {0: 0}
        words: list[Word] = [()]
        q = 0
        while q < len(order):
            c = order[q]
            w = words[q]
            for k in range(ng):
                d = raw[c][k]
                if d not in index:
                    index[d] = len(order)
                    order.append(d)
                    words.append(w + (self.gens[k],))
            q += 1
        self.words = words
        self.size = len(words)
        self.length = [len(w) for w in words]
        self.right = [[index[raw[c][k]] for k in range(ng)] for c in order]
        self.word_index = {w: i for i, w in enumerate(words)}
        # inverse: read the reversed word
        self.inverse = [self.read(w[::-1]) for w in words]
        self.left = [[self.inverse[self.right[self.inverse[g]][k]] for k in range(ng)]
                     for g in range(self.size)]
        self._subgroup_cache: dict[int, list[int]] = {}
        self._coset_cache: dict[tuple[int, int], list[int]] = {}

    # -- basic operations --------------------------------------------------
    def read(self, word: Sequence[int], start: int = 0) -> int:
        g = start
        pos = self.pos
        right = self.right
        for x in word:
            try:
                g = right[g][pos[x]]
            except KeyError:
                raise ValueError(f"letter {x} is not a generator of this subgroup") from None
        return g

    def mul(self, g: int, h: int) -> int:
        return self.read(self.words[h], g)

    def rmul_gen(self, g: int, s: int) -> int:
        return self.right[g][self.pos[s]]

    def lmul_gen(self, s: int, g: int) -> int:
        return self.left[g][self.pos[s]]

    def gen_index(self, s: int) -> int:
        return self.right[0][self.pos[s]]

    def as_generator(self, g: int) -> int | None:
        """Ambient generator index if g is a simple reflection, else None."""
        if self.length[g] == 1:
            return self.words[g][0]
        return None

    def conj(self, beta: int, x: int) -> int:
        """beta^-1 * x * beta for an element index x."""
        return self.mul(self.mul(self.inverse[beta], x), beta)

    def element(self, g: int) -> Element:
        return Element(self.words[g])

    def index_of(self, el: Element | Sequence[int]) -> int:
        word = el.word if isinstance(el, Element) else tuple(el)
        return self.read(word)

    # -- parabolic subgroups and cosets ------------------------------------
    def subgroup(self, mask: int) -> list[int]:
        """Indices of W_mask inside this group (mask must be a subset of T)."""
        if mask & ~self.T:
            raise ValueError("subgroup mask is not contained in T")
        got = self._subgroup_cache.get(mask)
        if got is None:
            got = [g for g, w in enumerate(self.words) if all(mask >> x & 1 for x in w)]
            self._subgroup_cache[mask] = got
        return got

    def min_left_coset_reps(self, gamma: int, sub: int) -> list[int]:
        """beta in W_gamma with l(beta t) > l(beta) for all t in sub."""
        key = (gamma, sub)
        got = self._coset_cache.get(key)
        if got is None:
            subs = [self.pos[t] for t in bits(sub)]
            length, right = self.length, self.right
            got = [g for g in self.subgroup(gamma)
                   if all(length[right[g][k]] > length[g] for k in subs)]
            self._coset_cache[key] = got
        return got

    def min_right_coset_reps(self, gamma: int, sub: int) -> list[int]:
        """v in W_gamma with l(t v) > l(v) for all t in sub ((sub, 0)-reduced)."""
        subs = [self.pos[t] for t in bits(sub)]
        length, left = self.length, self.left
        return [g for g in self.subgroup(gamma)
                if all(length[left[g][k]] > length[g] for k in subs)]

    def factor_right(self, g: int, sub: int) -> tuple[int, int]:
        """Write g = w * v with w in W_sub and v minimal in the coset W_sub g."""
        v = g
        subs = [t for t in bits(sub)]
        changed = True
        while changed:
            changed = False
            for t in subs:
                u = self.lmul_gen(t, v)
                if self.length[u] < self.length[v]:
                    v = u
                    changed = True
        w = self.mul(g, self.inverse[v])
        return w, v

    def longest_element(self) -> int:
        return max(range(self.size), key=lambda g: self.length[g])


@lru_cache(maxsize=64)
def _cached_group(M: CoxeterMatrix, T: int, cap: int) -> GroupCache:
    return GroupCache(M, T, cap)


def enumerate_group(M: CoxeterMatrix, T: int | None = None, cap: int | None = None) -> GroupCache:
    """Enumerate W_T (cached per matrix, subset and cap)."""
    if T is None:
        T = M.full
    return _cached_group(M, T, default_cap() if cap is None else cap)


def normalize(M: CoxeterMatrix, T: int, w: Sequence[int], cap: int | None = None) -> Element:
    """Canonical (shortlex-least reduced) form of the word w in W_T."""
    G = enumerate_group(M, T, cap)
    return G.element(G.read(w))


def min_coset_reps(M: CoxeterMatrix, gamma: int, gamma_sub: int,
                   cap: int | None = None) -> list[Element]:
    if gamma_sub & ~gamma:
        raise ValueError("gamma_sub must be a subset of gamma")
    G = enumerate_group(M, gamma, cap)
    return [G.element(g) for g in G.min_left_coset_reps(gamma, gamma_sub)]


def is_reduced_wrt(M: CoxeterMatrix, w: Element, T: int, side: str = "left",
                   ambient: int | None = None, cap: int | None = None) -> bool:
    """Left: l(tw) > l(w) for all t in T.  Right: l(wt) > l(w)."""
    if ambient is None:
        ambient = T
        for x in w.word:
            ambient |= 1 << x
    G = enumerate_group(M, ambient, cap)
    g = G.index_of(w)
    for t in bits(T):
        h = G.lmul_gen(t, g) if side == "left" else G.rmul_gen(g, t)
        if G.length[h] < G.length[g]:
            return False
    return True


def conjugate_map(G: GroupCache, beta: int, X: int) -> dict[int, int] | None:
    """x -> beta^-1 x beta for x in X, or None if some image is not simple."""
    out = {}
    for x in bits(X):
        y = G.as_generator(G.conj(beta, G.gen_index(x)))
        if y is None:
            return None
        out[x] = y
    return out


def conjugate_subset(M: CoxeterMatrix, gamma: int, beta: Element, X: int,
                     cap: int | None = None) -> int | None:
    """The set beta^-1 X beta when it consists of generators, else None."""
    if X & ~gamma:
        raise ValueError("X must be a subset of gamma")
    G = enumerate_group(M, gamma, cap)
    mp = conjugate_map(G, G.index_of(beta), X)
    if mp is None:
        return None
    mask = 0
    for y in mp.values():
        mask |= 1 << y
    return mask


def braid_neighbours(M: CoxeterMatrix, w: Word) -> list[Word]:
    """Words obtained from w by one braid substitution pi(s,t;m) -> pi(t,s;m)."""
    out = []
    n = len(w)
    for i in range(n):
        for j in range(i + 2, n + 1):
            s, t = w[i], w[i + 1] if i + 1 < n else None
            if t is None or s == t:
                break
            m = M.labels[s][t]
            if m is INF or j - i != m:
                continue
            seg = w[i:j]
            if seg == alt_word(s, t, m):
                out.append(w[:i] + alt_word(t, s, m) + w[j:])
    return out


def has_square(w: Word) -> bool:
    return any(w[i] == w[i + 1] for i in range(len(w) - 1))


def bfs_distances(G: GroupCache) -> list[int]:
    """Word lengths by breadth-first search in the Cayley graph (test oracle)."""
    dist = [-1] * G.size
    dist[0] = 0
    dq = deque([0])
    while dq:
        g = dq.popleft()
        for h in G.right[g]:
            if dist[h] < 0:
                dist[h] = dist[g] + 1
                dq.append(h)
    return dist
