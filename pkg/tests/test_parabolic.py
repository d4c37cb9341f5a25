import pytest

from artifact import registry as reg
from artifact.lie_labels import same_label
from artifact.parabolic import (InvalidIndex, NotApplicable, all_standard_parabolics, bruhat_total,
                                classify_levi, grading_profile, long_short_counts, maximal_parabolic,
                                standard_parabolic)
from artifact.real_form import registry


def test_minimal_and_full():
    p0 = standard_parabolic("E6(6)", [])
    assert (p0.dim_n_theta, p0.dim_m, p0.levi_factors) == (36, 0, ())
    assert standard_parabolic("E6(6)", range(1, 7)).dim_n_theta == 0
    assert len(all_standard_parabolics("F4(4)")) == 16


def test_examples():
    p = maximal_parabolic("E6(6)", 1)
    assert (p.levi_label, p.dim_n_theta, p.dim_a_theta) == ("so(5,5)", 16, 1)
    p = maximal_parabolic("E8(8)", 7)
    assert (p.levi_label, p.dim_n_theta) == ("E7(7)", 57)
    assert same_label(maximal_parabolic("E7(-5)", 3).levi_label, "su*(6)+sl(2,R)")
    assert maximal_parabolic("E7(-5)", 3).dim_n_theta == 47
    assert classify_levi("E6(2)", [1, 2, 3]) == ["su(3,3)"]
    assert {maximal_parabolic("E6(-26)", j).levi_label for j in (1, 2)} == {"so(9,1)"}
    assert maximal_parabolic("E7(-25)", 3).levi_label == "E6(-26)"


@pytest.mark.parametrize("form,j", [(f, j) for f, rows in reg.MAX_PARABOLICS.items() for j in rows])
def test_golden_maximal_parabolics(form, j):
    levi, dn = reg.MAX_PARABOLICS[form][j]
    p = maximal_parabolic(form, j)
    assert same_label(p.levi_label, levi), (p.levi_label, levi)
    assert p.dim_n_theta == dn


def test_bruhat_everywhere():
    n = 0
    for f in registry():
        for p in all_standard_parabolics(f):
            assert bruhat_total(p) == f.dim_g
            n += 1
    assert n == 534


def test_gradings():
    g = grading_profile("E6(6)", 1)
    assert g.grades == {-1: 16, 0: 46, 1: 16}
    g = grading_profile("E7(7)", 1)
    assert (g.depth, g.grades[1], g.grades[2]) == (2, 32, 1)
    g = grading_profile("E8(8)", 3)
    assert g.depth == 6 and sum(g.positive.values()) == 106
    assert grading_profile("E6(2)", 1).positive == {1: 16, 2: 8}
    for form, rows in reg.GRADINGS.items():
        for j in rows:
            g = grading_profile(form, j)
            assert all(g.grades[-k] == v for k, v in g.grades.items())
            assert g.grades[0] == maximal_parabolic(form, j).dim_m + 1


def test_long_short():
    assert long_short_counts("F4(4)", 1) == (11, 9)
    assert long_short_counts("F4(4)", 3) == (9, 6)
    assert long_short_counts("G2(2)", 1) == (2, 3)
    with pytest.raises(NotApplicable):
        long_short_counts("E6(6)", 1)


def test_invalid_indices():
    with pytest.raises(InvalidIndex):
        maximal_parabolic("G2(2)", 3)
    with pytest.raises(InvalidIndex):
        standard_parabolic("F4(-20)", [0])
