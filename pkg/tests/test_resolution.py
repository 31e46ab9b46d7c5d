import pytest
from hypothesis import given
from hypothesis import strategies as st

from coxhom.coxeter import mask_of, popcount
from coxhom.families import parse_family
from coxhom.linalg import INTEGERS, ZERO, AbelianGroup, matmul
from coxhom.resolution import (
    Coefficients, boundary_matrix, boundary_terms, enumerate_flags, flag_str, homology_dcs,
    verify_resolution,
)
from coxhom.words import EnumerationLimitError

S, T = 1, 2
ST = S | T


def test_flags_of_one_generator():
    assert enumerate_flags(S, 3) == ((S, S, S),)
    assert enumerate_flags(S, 0) == ((),)


def test_flags_of_two_generators():
    assert set(enumerate_flags(ST, 2)) == {(ST,), (S, S), (T, T)}
    assert enumerate_flags(ST, 2)[0] == (ST,)


@given(st.integers(1, 15), st.integers(0, 4))
def test_flags_are_weakly_decreasing_chains(mask, k):
    flags = enumerate_flags(mask, k)
    assert len(set(flags)) == len(flags)
    for f in flags:
        assert sum(popcount(g) for g in f) == k
        for a, b in zip(f, f[1:]):
            assert b & ~a == 0 and b
        assert all(g & ~mask == 0 for g in f)


def test_flag_degree_limits():
    with pytest.raises(ValueError):
        enumerate_flags(3, 5)
    with pytest.raises(ValueError):
        enumerate_flags(3, -1)


def test_one_generator_differentials():
    M = parse_family("A1")
    assert [boundary_matrix(M, 1, k, "orientation") for k in (1, 2, 3)] == [[[-2]], [[0]], [[-2]]]
    assert [boundary_matrix(M, 1, k, "trivial") for k in (1, 2, 3)] == [[[0]], [[2]], [[0]]]


def test_one_generator_exponents():
    M = parse_family("A1")
    terms = list(boundary_terms(M, (S, S)))
    assert sorted(t.alpha for t in terms) == [2, 4]
    terms = list(boundary_terms(M, (S, S, S)))
    assert sorted(t.alpha for t in terms) == [3, 6]
    for t in terms:
        tr = t.trace
        assert tr.alpha == tr.i * len(tr.beta) + 2 + tr.mu + sum(tr.sigmas)


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6, 7])
def test_dihedral_differentials(m):
    M = parse_family(f"I2({m})")
    rows1 = enumerate_flags(ST, 1)
    d2 = boundary_matrix(M, ST, 2, "orientation")
    col = enumerate_flags(ST, 2).index((ST,))
    image = {rows1[r]: d2[r][col] for r in range(len(rows1))}
    assert image == {(S,): m, (T,): -m}
    rows2 = enumerate_flags(ST, 2)
    d3 = boundary_matrix(M, ST, 3, "orientation")
    for top, low, sign in (((ST, S), S, 1), ((ST, T), T, -1)):
        c = enumerate_flags(ST, 3).index(top)
        img = {rows2[r]: d3[r][c] for r in range(len(rows2)) if d3[r][c]}
        if m % 2:
            # s and t are conjugate, so both tops reach the same difference
            assert img == {(S, S): 1, (T, T): -1}
        else:
            assert img == {(low, low): 2 * sign}


@pytest.mark.parametrize("fam", ["A1", "B2", "A3", "H3", "I2(7)xA1", "D4"])
def test_verify_resolution(fam):
    rep = verify_resolution(parse_family(fam))
    assert rep.ok, rep.failures


@pytest.mark.parametrize("fam, q, coeffs, expected", [
    ("A1", 2, "orientation", "Z2"),
    ("I2(4)", 2, "orientation", "Z2^2"),
    ("I2(5)", 2, "orientation", "Z2"),
    ("I2(5)", 1, "orientation", "Z5"),
    ("A3", 1, "orientation", "Z3"),
    ("B3", 1, "orientation", "Z2"),
    ("H3", 1, "orientation", "0"),
    ("A2", 3, "trivial", "Z2 + Z3"),
    ("A3", 3, "trivial", "Z2 + Z3 + Z4"),
    ("A1", 0, "orientation", "Z2"),
])
def test_homology_values(fam, q, coeffs, expected):
    assert homology_dcs(parse_family(fam), None, q, coeffs) == AbelianGroup.parse(expected)


def test_h0_trivial_is_z():
    assert homology_dcs(parse_family("B3"), None, 0) == INTEGERS
    assert homology_dcs(parse_family("A2"), 0, 1) == ZERO


def test_parabolic_subgroup_homology():
    M = parse_family("A3")
    assert homology_dcs(M, mask_of([0, 2]), 1) == AbelianGroup.elementary(2, 2)


def test_errors():
    with pytest.raises(EnumerationLimitError):
        homology_dcs(parse_family("path(inf)"), None, 1)
    with pytest.raises(EnumerationLimitError):
        homology_dcs(parse_family("A4"), None, 1, cap=100)
    with pytest.raises(ValueError):
        homology_dcs(parse_family("A1"), None, 4)
    with pytest.raises(ValueError):
        boundary_matrix(parse_family("A1"), 1, 5, "trivial")
    with pytest.raises(ValueError):
        boundary_matrix(parse_family("A1"), 1, 1, "sideways")


def test_coefficient_enum_and_flag_str():
    assert Coefficients("trivial") is Coefficients.TRIVIAL
    M = parse_family("A3")
    assert flag_str(M, (7, 1)) == "{s1,s2,s3}>{s1}"
    assert flag_str(M, ()) == "()"


@pytest.mark.parametrize("fam", ["A2", "B3", "A1xA1xA1"])
def test_delta_squared_zero_degree_four(fam):
    M = parse_family(fam)
    for coeffs in Coefficients:
        for k in (1, 2, 3):
            a = boundary_matrix(M, M.full, k, coeffs)
            b = boundary_matrix(M, M.full, k + 1, coeffs)
            prod = matmul(a, b, inner=len(enumerate_flags(M.full, k)))
            assert not any(x for row in prod for x in row)
