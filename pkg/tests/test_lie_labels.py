import pytest

from artifact.lie_labels import UnknownLabel, canonical, complexify, dimension, same_label


@pytest.mark.parametrize("label,dim", [("so(5,5)", 45), ("sl(3,C)_R", 16), ("su*(6)", 35), ("E6(-26)", 78),
                                       ("usp(3)", 21), ("so*(12)", 66), ("sp(3,R)", 21), ("u(1)", 1),
                                       ("so(7,1)+so(2)", 29), ("sl(3,R)_S+sl(2,R)_L", 11), ("0", 0),
                                       ("su(3,3)", 35), ("so(1,1)", 1)])
def test_dimensions(label, dim):
    assert dimension(label) == dim


def test_complexification():
    assert complexify("su(3,3)") == (("A5",), 0)
    assert complexify("sl(3,C)_R") == (("A2", "A2"), 0)
    assert complexify("E6(-26)") == (("E6",), 0)
    assert complexify("so(5,3)+u(1)") == (("D4",), 1)
    assert complexify("so(5,1)") == complexify("su*(4)")


def test_canonical_isomorphisms():
    assert same_label("so(7,1)+so(2)", "so(7,1)+u(1)")
    assert same_label("so(5,1)+sl(3,R)+su(2)", "su*(4)+su(2)+sl(3,R)")
    assert same_label("so(3,5)", "so(5,3)")
    assert not same_label("so(5,5)", "so(9,1)")
    assert canonical("so(3)") == ("su(2)",)


def test_unknown():
    with pytest.raises(UnknownLabel):
        dimension("xyz(3)")
