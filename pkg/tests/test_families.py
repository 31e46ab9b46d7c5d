import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxhom.coxeter import INF, CoxeterMatrix
from coxhom.families import (
    FamilyParseError, dumps_document, loads_document, matrix_from_document,
    matrix_to_document, parse_family,
)


def test_products_are_block_diagonal():
    M = parse_family("cycle(3,3,3) x A1")
    assert M.n == 4
    assert [M.m(3, j) for j in range(3)] == [2, 2, 2]
    assert M.m(0, 2) == 3


def test_inf_labels():
    M = parse_family("path(inf, 3)")
    assert M.m(0, 1) is INF and M.m(1, 2) == 3
    assert parse_family("I2(inf)").m(0, 1) is INF


@pytest.mark.parametrize("bad", ["", "A0", "B1", "D3", "E9", "I2(1)", "path(1)", "cycle(3,3)",
                                 "Z5", "A3 x", "path(3,x)"])
def test_parse_errors(bad):
    with pytest.raises(FamilyParseError):
        parse_family(bad)


def test_document_zero_means_infinity():
    doc = {"name": "free", "generators": ["a", "b"], "matrix": [[1, 0], [0, 1]]}
    M = matrix_from_document(doc)
    assert M.m(0, 1) is INF
    assert matrix_to_document(M, "free") == doc


@pytest.mark.parametrize("doc", [
    {"matrix": [[1, 3], [2, 1]]},
    {"matrix": [[1, 3]]},
    {"matrix": [[1, 1.5], [1.5, 1]]},
    {"matrix": [[1, -3], [-3, 1]]},
    {"generators": ["a"], "matrix": [[1, 3], [3, 1]]},
    {"gens": []},
])
def test_document_errors(doc):
    with pytest.raises(FamilyParseError):
        matrix_from_document(doc)


def test_loads_rejects_bad_json():
    with pytest.raises(FamilyParseError):
        loads_document("{not json")


@st.composite
def matrices(draw):
    n = draw(st.integers(0, 6))
    lab = st.sampled_from([2, 3, 4, 5, 7, INF])
    return CoxeterMatrix.from_edges(n, {p: draw(lab) for p in itertools.combinations(range(n), 2)})


@given(matrices())
@settings(max_examples=80)
def test_document_round_trip(M):
    text = dumps_document(M, "x")
    assert json.loads(text)["name"] == "x"
    assert loads_document(text) == M
