import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxhom.coxeter import classify, group_order, mask_of
from coxhom.families import parse_family
from coxhom.words import (
    IDENTITY, Element, EnumerationLimitError, GroupCache, alt_word, bfs_distances,
    braid_neighbours, conjugate_subset, enumerate_group, has_square, is_reduced_wrt,
    min_coset_reps, normalize,
)

FINITE = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "D5", "F4", "H3", "I2(5)",
          "I2(8)", "A1xA1xA1", "A2xB2"]


@pytest.mark.parametrize("fam", FINITE)
def test_group_order_and_lengths(fam):
    M = parse_family(fam)
    G = enumerate_group(M)
    assert G.size == group_order(classify(M))
    # stored lengths agree with breadth-first search in the Cayley graph
    assert bfs_distances(G) == G.length
    # unique longest element, which is an involution
    top = max(G.length)
    longest = [g for g in range(G.size) if G.length[g] == top]
    assert len(longest) == 1
    assert G.inverse[longest[0]] == longest[0]


@pytest.mark.parametrize("fam", ["A3", "B3", "H3", "I2(6)"])
def test_multiplication_tables_consistent(fam):
    G = enumerate_group(parse_family(fam))
    for g in range(G.size):
        assert G.mul(g, G.inverse[g]) == 0
        for k, s in enumerate(G.gens):
            assert G.right[G.right[g][k]][k] == g
            assert G.left[g][k] == G.mul(G.gen_index(s), g)


def test_alt_word():
    assert alt_word(0, 1, 3) == (0, 1, 0)
    assert alt_word(0, 1, 4, end_aligned=True) == (1, 0, 1, 0)


def test_braid_relation_normalizes():
    M = parse_family("I2(5)")
    assert normalize(M, 3, alt_word(0, 1, 5)) == normalize(M, 3, alt_word(1, 0, 5))
    assert normalize(M, 3, (0, 0)) == IDENTITY
    assert len(normalize(M, 3, alt_word(0, 1, 7)).word) == 3


words = st.lists(st.integers(0, 2), max_size=14)


@given(words)
@settings(max_examples=150, deadline=None)
def test_normal_form_is_shortlex_and_stable(w):
    M = parse_family("B3")
    G = enumerate_group(M)
    nf = normalize(M, M.full, w)
    assert normalize(M, M.full, nf.word) == nf
    assert len(nf.word) <= len(w)
    assert not has_square(nf.word)
    # every braid rewrite of the normal form represents the same element
    for v in braid_neighbours(M, nf.word):
        assert G.read(v) == G.read(nf.word)
        assert v > nf.word


@given(words)
@settings(max_examples=100, deadline=None)
def test_deletion_condition(w):
    """A non-reduced word has two letters whose deletion gives the same element."""
    M = parse_family("A3")
    G = enumerate_group(M)
    g = G.read(w)
    if G.length[g] < len(w):
        found = any(G.read(w[:i] + w[i + 1:j] + w[j + 1:]) == g
                    for i in range(len(w)) for j in range(i + 1, len(w)))
        assert found


@pytest.mark.parametrize("fam, sub", [("A3", [0]), ("A3", [0, 2]), ("B3", [1, 2]),
                                      ("H3", [0, 1]), ("D4", [0, 1, 2])])
def test_min_coset_reps_count_is_index(fam, sub):
    M = parse_family(fam)
    reps = min_coset_reps(M, M.full, mask_of(sub))
    idx = group_order(classify(M)) // group_order(classify(M, mask_of(sub)))
    assert len(reps) == idx
    for r in reps:
        assert is_reduced_wrt(M, r, mask_of(sub), side="right", ambient=M.full)


def test_factor_right():
    M = parse_family("A3")
    G = enumerate_group(M)
    U = mask_of([0, 1])
    for g in range(G.size):
        w, v = G.factor_right(g, U)
        assert G.mul(w, v) == g
        assert all(x in (0, 1) for x in G.words[w])
        assert is_reduced_wrt(M, G.element(v), U, side="left", ambient=M.full)


def test_conjugate_subset():
    M = parse_family("A2")
    # (s1 s2)^-1 s2 (s1 s2) = s2 s1 s2 s1 s2 = s1
    assert conjugate_subset(M, 3, Element((0, 1)), 2) == 1
    # s1^-1 s2 s1 = s1 s2 s1 is not a generator
    assert conjugate_subset(M, 3, Element((0,)), 2) is None
    with pytest.raises(ValueError):
        conjugate_subset(M, 1, Element(()), 2)


def test_limits():
    with pytest.raises(EnumerationLimitError):
        GroupCache(parse_family("path(inf)"), 3)
    with pytest.raises(EnumerationLimitError):
        GroupCache(parse_family("A3"), 7, cap=10)


def test_env_cap(monkeypatch):
    monkeypatch.setenv("COXHOM_CAP", "5")
    with pytest.raises(EnumerationLimitError):
        GroupCache(parse_family("A2"), 3)


def test_letters_outside_subgroup_rejected():
    G = enumerate_group(parse_family("A3"), mask_of([0, 1]))
    with pytest.raises(ValueError):
        G.read((2,))
