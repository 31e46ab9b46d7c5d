import pytest

from coxhom.coxeter import mask_of
from coxhom.families import parse_family
from coxhom.resolution import Coefficients
from coxhom.transfer import (
    CollapseMap, HomologyClasses, check_collapse_chain_map, collapse_chain, coset_index,
    transfer_d1,
)


def test_collapse_degree_zero_is_constant():
    M = parse_family("A3")
    f = CollapseMap(M, 7, 1)
    out = f.apply({(g, ()): 1 for g in range(f.GT.size)})
    # every element lands on w * Gamma_empty with w in W_U = {e, s1}
    assert set(out) == {(0, ()), (1, ())}
    assert sum(out.values()) == 24


def test_collapse_degree_one_cases():
    M = parse_family("A2")
    # U = {s1}; v = s2 is reduced and v s1 = s2 s1 is reduced again -> 0
    f = CollapseMap(M, 3, 1)
    v = f.GT.read((1,))
    assert f.on_reduced(v, (1,)) is None
    # v = s2 s1: v s2 = s2 s1 s2 = s1 s2 s1 = s1 v -> Gamma_{s1}
    v = f.GT.read((1, 0))
    assert f.on_reduced(v, (2,)) == (1, (1,))


def test_collapse_degree_two_pair():
    # W_T = A1 x A1 x A1 with U = {s1, s3}: v = e maps Gamma_{s1 s3} to itself
    M = parse_family("A1xA1xA1")
    out = collapse_chain(M, 7, 5, 2, {(0, (5,)): 1})
    assert out == {(0, (5,)): 1}
    # conjugating by s2 in A3 swaps nothing into U = {s1}; Gamma_{s1 s3} -> 0
    M = parse_family("A3")
    assert collapse_chain(M, 7, 1, 2, {(0, (5,)): 1}) == {}
    with pytest.raises(ValueError):
        collapse_chain(M, 7, 1, 3, {(0, (1, 1, 1)): 1})
    with pytest.raises(ValueError):
        collapse_chain(M, 7, 1, 2, {(0, (1,)): 1})


@pytest.mark.parametrize("fam", ["A2", "I2(4)", "I2(5)", "A3", "B3", "H3", "I2(5)xA1"])
def test_collapse_is_chain_map(fam):
    M = parse_family(fam)
    for k in range(M.n):
        for U in range(1 << M.n):
            if bin(U).count("1") == k:
                assert check_collapse_chain_map(M, M.full, U) == []


@pytest.mark.parametrize("fam", ["A3", "B3", "H3", "I2(5)xA1", "I2(6)xA1", "A2", "I2(4)"])
def test_transfer_degree_zero_index_parity(fam):
    M = parse_family(fam)
    for drop in range(M.n):
        U = M.full & ~(1 << drop)
        _, coords = transfer_d1(M, M.full, U, 0, {(): 1})
        assert (not any(coords)) == (coset_index(M, M.full, U) % 2 == 0)


def test_transfer_dihedral_degree_zero():
    M = parse_family("I2(5)")
    for u in (1, 2):
        img, coords = transfer_d1(M, 3, u, 0, {(): 1})
        assert coords == (1,)
    M = parse_family("I2(6)")
    for u in (1, 2):
        assert transfer_d1(M, 3, u, 0, {(): 1})[1] == (0,)


def test_type_x_rule():
    M = parse_family("I2(5)xA1")   # s1 -5- s2, s3 isolated
    nonzero = [p for p in ((0, 1), (0, 2), (1, 2))
               if any(transfer_d1(M, 7, mask_of(p), 0, {(): 1})[1])]
    assert nonzero == [(0, 2), (1, 2)]
    M = parse_family("A3")
    assert not any(any(transfer_d1(M, 7, mask_of(p), 0, {(): 1})[1])
                   for p in ((0, 1), (0, 2), (1, 2)))


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6, 7])
def test_transfer_degree_two_dichotomy(m):
    M = parse_family(f"I2({m})")
    for s in (1, 2):
        for u in (1, 2):
            img, _ = transfer_d1(M, 3, u, 2, {(s, s): 1})
            target = HomologyClasses(M, u, 2, Coefficients.ORIENTATION)
            if m % 2:
                assert target.same_class(img, {(u, u): 1})
                assert not target.is_zero(img)
            else:
                assert target.is_zero(img)


def test_homology_classes():
    M = parse_family("I2(4)")
    H = HomologyClasses(M, 3, 2, "orientation")
    assert str(H.group) == "Z2^2"
    assert H.is_cycle({(1, 1): 1})
    assert not H.is_zero({(1, 1): 1})
    assert H.is_zero({(1, 1): 2})
    assert not H.same_class({(1, 1): 1}, {(2, 2): 1})
    M = parse_family("I2(5)")
    H = HomologyClasses(M, 3, 2, "orientation")
    assert H.same_class({(1, 1): 1}, {(2, 2): 1})
