import pytest

from artifact.root_system import (UnsupportedType, build, classify_nodes, classify_subsystem, grade_histogram,
                                  grade_vector)


@pytest.mark.parametrize("t,roots,dim", [("E6", 72, 78), ("E7", 126, 133), ("E8", 240, 248), ("F4", 48, 52),
                                         ("G2", 12, 14), ("A1", 2, 3), ("A4", 20, 24), ("B4", 32, 36),
                                         ("C4", 32, 36), ("D6", 60, 66)])
def test_root_counts(t, roots, dim):
    rs = build(t)
    assert len(rs.coeffs) == roots
    assert rs.dim == dim


def test_roots_are_positive_or_negative():
    for t in ("E8", "F4", "G2"):
        for c in build(t).coeffs:
            assert all(x >= 0 for x in c) or all(x <= 0 for x in c)


def test_cartan_matrices():
    # entries <alpha_i, alpha_j^vee>; alpha_1 is the long root
    assert build("G2").cartan == ((2, -3), (-1, 2))
    f4 = build("F4").cartan
    assert f4[1][2] == -2 and f4[2][1] == -1
    e6 = build("E6").cartan
    # node 6 hangs off node 3 in the Satake numbering
    assert e6[5][2] == -1 and sum(1 for x in e6[5] if x == -1) == 1


def test_unsupported():
    for bad in ("E9", "D3", "X4", "G3"):
        with pytest.raises(UnsupportedType):
            build(bad)


def test_subsystems():
    e6 = build("E6")
    assert classify_subsystem(e6, [2, 3, 4, 5, 6]) == ["D5"]
    assert classify_subsystem(build("E8"), [1, 2, 3, 4, 5, 6, 8]) == ["E7"]
    f4 = build("F4")
    assert classify_subsystem(f4, [2, 3, 4]) == ["C3"]
    assert classify_subsystem(f4, [1, 2, 3]) == ["B3"]
    assert classify_subsystem(e6, [1, 2, 4, 5]) == ["A2", "A2"]


def test_e_type_standard_labelling_is_satake_numbering():
    for t in ("E6", "E7", "E8"):
        rs = build(t)
        (comp,) = classify_nodes(rs, range(1, rs.rank + 1))
        assert comp.nodes == tuple(range(1, rs.rank + 1))


def test_grades():
    e6 = build("E6")
    g = grade_vector(e6, 1)
    assert set(g.values()) == {-1, 0, 1}
    assert sum(1 for v in g.values() if v == 1) == 16
    assert sum(g.values()) == 0
    h = grade_histogram(build("E7"), [1])
    assert max(h) == 2 and h[2] == 1
