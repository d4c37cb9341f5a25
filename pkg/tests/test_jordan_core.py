from fractions import Fraction
from itertools import permutations

import pytest
import sympy

from artifact.jordan_core import (NotCubic, UnsupportedDescriptor, build_jordan, circ, cross, cubic_norm,
                                  cubic_polarization, matrix_circ, parse_descriptor, polarization_oracle,
                                  random_element, sharp, trace, trace_form, triple, u_op, v_op)
from artifact.exact_arith import RatMatrix, rank


def coords(X):
    return list(X.coords)


@pytest.mark.parametrize("desc,dim", [("R", 1), ("J3(O)", 27), ("R+G(9,1)", 11), ("J3(C)", 9),
                                      ("J12(O)", 27), ("G(7,1)", 8), ("J2(Os)", 10)])
def test_dimensions(desc, dim):
    assert build_jordan(desc).dim == dim


def test_descriptor_errors():
    for bad in ("J3(X)", "J4(O)", "R+G(0,0)", "spin"):
        with pytest.raises(UnsupportedDescriptor):
            parse_descriptor(bad)
    with pytest.raises(UnsupportedDescriptor):
        build_jordan("R+G(0,3)")  # no base point


def test_real_field_norm_is_cube():
    J = build_jordan("R")
    assert cubic_norm(J, [Fraction(2, 3)]) == Fraction(8, 27)


def test_j3r_norm_is_determinant(rng):
    J = build_jordan("J3(R)")
    for _ in range(20):
        a1, a2, a3, x1, x2, x3 = coords(random_element(J, rng))
        M = sympy.Matrix([[a1, x3, x2], [x3, a2, x1], [x2, x1, a3]])
        assert cubic_norm(J, [a1, a2, a3, x1, x2, x3]) == Fraction(str(M.det()))


@pytest.mark.parametrize("label", ["R", "C", "Cs", "H", "Hs", "O", "Os"])
def test_diagonal_elements(label):
    J = build_jordan(f"J3({label})")
    a, b, c = Fraction(2), Fraction(-3, 2), Fraction(5, 7)
    X = J.diag(a, b, c)
    assert cubic_norm(J, X) == a * b * c
    assert coords(sharp(J, X)) == coords(J.diag(b * c, a * c, a * b))
    assert trace(J, X) == a + b + c
    assert cubic_norm(J, J.identity) == 1
    assert trace(J, J.identity) == 3
    assert coords(sharp(J, J.identity)) == coords(J.identity)
    assert coords(cross(J, J.identity, J.identity)) == [2 * v for v in coords(J.identity)]
    assert coords(cross(J, J.diag(1, 0, 0), J.diag(0, 1, 0))) == coords(J.diag(0, 0, 1))
    assert all(v == 0 for v in coords(circ(J, J.diag(1, 0, 0), J.diag(0, 1, 0))))


def test_spin_factor_null_vector():
    J = build_jordan("R+G(1,1)")
    assert cubic_norm(J, [2, 1, 1]) == 0
    assert cubic_norm(J, J.identity) == 1


def test_polarization(rng):
    J = build_jordan("J3(H)")
    c = coords(J.identity)
    assert cubic_polarization(J, c, c, c) == 1
    for _ in range(5):
        X, Y, Z = (coords(random_element(J, rng)) for _ in range(3))
        assert cubic_polarization(J, X, X, X) == cubic_norm(J, X)
        v = cubic_polarization(J, X, Y, Z)
        assert v == polarization_oracle(J, X, Y, Z)
        assert all(cubic_polarization(J, *p) == v for p in permutations((X, Y, Z)))


def test_trace_form_nondegenerate():
    J = build_jordan("J3(C)")
    gram = [[trace_form(J, J.basis(i), J.basis(j)) for j in range(9)] for i in range(9)]
    assert rank(RatMatrix.from_rows(gram)) == 9


@pytest.mark.parametrize("label", ["R", "C", "Hs", "O", "Os"])
def test_circ_is_symmetrized_matrix_product(label, rng):
    J = build_jordan(f"J3({label})")
    for _ in range(3):
        X, Y = random_element(J, rng), random_element(J, rng)
        assert circ(J, X, Y) == matrix_circ(J, X, Y)


def test_cross_on_diagonal_and_sharp(rng):
    J = build_jordan("J3(Cs)")
    X = random_element(J, rng)
    assert coords(cross(J, X, X)) == [2 * v for v in coords(sharp(J, X))]


def test_triple_and_quadratic_operators(rng):
    J = build_jordan("J3(H)")
    c = J.identity
    X, Y, Z = (random_element(J, rng) for _ in range(3))
    assert triple(J, c, c, X) == X
    assert triple(J, X, c, X) == circ(J, X, X)
    assert triple(J, X, Y, Z) == triple(J, Z, Y, X)
    assert u_op(J, c, Y) == Y
    assert coords(v_op(J, X, Y, X)) == [2 * v for v in coords(u_op(J, X, Y))]
    # fundamental formula as operators, tested on a basis
    UXY = u_op(J, X, Y)
    for k in range(0, J.dim, 3):
        e = J.basis(k)
        assert u_op(J, UXY, e) == u_op(J, X, u_op(J, Y, u_op(J, X, e)))


def test_product_only_kinds_refuse_cubic_operations():
    for desc in ("J12(O)", "G(4,3)", "J2(H)"):
        J = build_jordan(desc)
        with pytest.raises(NotCubic):
            sharp(J, J.identity)


def test_lorentzian_product_is_jordan(rng):
    J = build_jordan("J12(Os)")
    for _ in range(3):
        X, Y = random_element(J, rng), random_element(J, rng)
        XX = circ(J, X, X)
        assert circ(J, circ(J, X, Y), XX) == circ(J, X, circ(J, Y, XX))
        assert circ(J, J.identity, X) == X
