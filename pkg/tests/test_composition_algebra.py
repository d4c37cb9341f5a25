from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artifact.composition_algebra import (LABELS, AlgebraMismatch, build_algebra, conjugate, multiply, norm,
                                          real_part, table_json)


def unit(A, i):
    return A.unit(i)


def test_real_field():
    A = build_algebra("R")
    assert A.dim == 1
    assert table_json("R")["table"] == [[[0, 1]]]


def test_quaternion_convention():
    H = build_algebra("H")
    e1, e2, e3 = H.unit(1), H.unit(2), H.unit(3)
    assert multiply(e1, e2).coords == e3.coords
    assert multiply(e2, e1).coords == tuple(-c for c in e3.coords)
    assert multiply(e1, e1).coords == tuple(-c for c in H.unit(0).coords)


@pytest.mark.parametrize("label,sig", [("R", (1, 0)), ("C", (2, 0)), ("Cs", (1, 1)), ("H", (4, 0)),
                                       ("Hs", (2, 2)), ("O", (8, 0)), ("Os", (4, 4))])
def test_norm_signature(label, sig):
    assert build_algebra(label).signature() == sig


def test_octonions_are_not_associative():
    O = build_algebra("O")
    e1, e2, e4 = O.unit(1), O.unit(2), O.unit(4)
    assert multiply(multiply(e1, e2), e4).coords != multiply(e1, multiply(e2, e4)).coords


def test_norms_and_real_parts():
    assert norm(build_algebra("C").unit(1)) == 1
    assert norm(build_algebra("Cs").unit(1)) == -1
    O = build_algebra("O")
    assert real_part(multiply(O.unit(1), O.unit(2))) == 0
    assert conjugate(O.unit(0)).coords == O.unit(0).coords


def test_unit_is_two_sided_identity():
    for label in LABELS:
        A = build_algebra(label)
        for i in range(A.dim):
            assert multiply(A.unit(0), A.unit(i)).coords == A.unit(i).coords
            assert multiply(A.unit(i), A.unit(0)).coords == A.unit(i).coords


def test_table_entries_are_signed_units():
    for label in LABELS:
        for row in build_algebra(label).mult_table:
            for k, s in row:
                assert s in (1, -1)


def test_mismatch():
    with pytest.raises(AlgebraMismatch):
        multiply(build_algebra("H").unit(1), build_algebra("Hs").unit(1))


rat = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(LABELS), st.data())
def test_norm_is_multiplicative(label, data):
    A = build_algebra(label)
    a = A.element(data.draw(st.lists(rat, min_size=A.dim, max_size=A.dim)))
    b = A.element(data.draw(st.lists(rat, min_size=A.dim, max_size=A.dim)))
    assert norm(multiply(a, b)) == norm(a) * norm(b)
    # the norm agrees with the diagonal norm form
    assert norm(a) == A.norm_form(a.coords)
