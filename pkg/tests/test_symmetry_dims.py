import pytest

from artifact.symmetry_dims import (SPIN_SAMPLES, TABLE1_ROWS, derivation_algebra, spin_table1_labels,
                                    structure_algebra_dim, symmetry_report, verify_embedding_dims,
                                    verify_table1)
from artifact.lie_labels import dimension


@pytest.mark.parametrize("desc,der,str_", [("R", 0, 1), ("J3(R)", 3, 9), ("J3(Cs)", 8, 17), ("J3(C)", 8, 17),
                                           ("J3(Hs)", 21, 36)])
def test_small_rows(desc, der, str_):
    assert len(derivation_algebra(desc)) == der
    assert structure_algebra_dim(desc) == str_


def test_derivations_satisfy_leibniz():
    from artifact.jordan_core import build_jordan
    J = build_jordan("J3(C)")
    n = J.dim
    for D in derivation_algebra(J):
        def apply(v):
            return [sum((D[k][m] * v[m] for m in range(n)), 0) for k in range(n)]
        for i in range(n):
            for j in range(i, n):
                ei, ej = list(J.basis(i).coords), list(J.basis(j).coords)
                lhs = apply(J.circ_raw(ei, ej))
                rhs = [a + b for a, b in zip(J.circ_raw(apply(ei), ej), J.circ_raw(ei, apply(ej)))]
                assert lhs == rhs


def test_report_formulas():
    rep = symmetry_report("J3(R)")
    assert rep.dim_str0 == rep.dim_str - 1
    assert rep.dim_conf == 2 * rep.dim_J + rep.dim_str
    assert rep.dim_qconf == rep.dim_conf + 1 + 2 * (2 * rep.dim_J + 2) + 2
    assert symmetry_report("R").dim_qconf == 14


@pytest.mark.parametrize("m,n", SPIN_SAMPLES[:8])
def test_spin_factor_rows(m, n):
    rep = symmetry_report(f"R+G({m},{n})")
    der, str0, conf, qconf = spin_table1_labels(m, n)
    assert rep.dim_der == dimension(der)
    assert rep.dim_str0 == dimension(str0)
    assert rep.dim_conf == 3 + dimension(f"so({m + 1},{n + 1})") == dimension(conf)
    assert rep.dim_qconf == dimension(qconf)


def test_printed_spin_labels_differ_only_in_aut_and_str0():
    printed = spin_table1_labels(5, 3, as_printed=True)
    computed = spin_table1_labels(5, 3)
    assert printed[2:] == computed[2:]
    assert dimension(printed[0]) != dimension(computed[0])


def test_embedding_checks():
    r = verify_embedding_dims()
    assert r["ok"], [c for c in r["checks"] if not c["ok"]]


def test_table1_rows_are_complete():
    assert set(TABLE1_ROWS) == {"R", "J3(R)", "J3(C)", "J3(Cs)", "J3(H)", "J3(Hs)", "J3(O)", "J3(Os)"}


def test_quadratic_spin_derivations():
    assert len(derivation_algebra("G(7,0)")) == 15
    assert symmetry_report("G(7,1)").dim_str0 == 28
