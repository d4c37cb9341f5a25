import pytest

from artifact import registry as reg
from artifact.real_form import (UnclassifiedSubdiagram, classify_satake_component, diagram_involution, dim_m0,
                                get_form, registry, restricted_root_system)
from artifact.lie_labels import dimension

EXPECTED_NPM = {"E6(6)": 36, "E6(2)": 36, "E6(-14)": 30, "E6(-26)": 24, "E7(7)": 63, "E7(-5)": 60,
                "E7(-25)": 51, "E8(8)": 120, "E8(-24)": 108, "F4(4)": 24, "F4(-20)": 15, "G2(2)": 6}


def test_registry_contents():
    forms = registry()
    assert [f.label for f in forms] == list(EXPECTED_NPM)
    e66 = get_form("E6(6)")
    assert (e66.dim_P, e66.dim_Npm) == (42, 36)
    assert get_form("EVII").m0_label == "so(8)"
    assert get_form("F4(−20)").dim_Npm == 15
    for f in forms:
        assert f.dim_K + f.dim_P == f.dim_g


@pytest.mark.parametrize("label", list(EXPECTED_NPM))
def test_multiplicity_sums_and_m0(label):
    f = get_form(label)
    rr = restricted_root_system(f)
    assert sum(rr.positive.values()) == EXPECTED_NPM[label]
    assert dim_m0(f) == dimension(f.m0_label)
    for k, m in rr.restricted_roots.items():
        assert m >= 1 and rr.restricted_roots[tuple(-x for x in k)] == m


def test_reduced_types():
    types = {f.label: restricted_root_system(f).reduced_type for f in registry()}
    assert types == {"E6(6)": "E6", "E6(2)": "F4", "E6(-14)": "BC2", "E6(-26)": "A2", "E7(7)": "E7",
                     "E7(-5)": "F4", "E7(-25)": "C3", "E8(8)": "E8", "E8(-24)": "F4", "F4(4)": "F4",
                     "F4(-20)": "BC1", "G2(2)": "G2"}


def test_multiplicities():
    rr = restricted_root_system("E6(2)")
    lengths = {}
    for k, m in rr.positive.items():
        lengths.setdefault(rr.length2(k), set()).add(m)
    assert sorted(tuple(v) for v in lengths.values()) == [(1,), (2,)]
    assert sorted(restricted_root_system("F4(-20)").positive.values()) == [7, 8]


def test_split_forms_are_unrestricted():
    for label in ("E6(6)", "E7(7)", "E8(8)", "F4(4)", "G2(2)"):
        f = get_form(label)
        rr = restricted_root_system(f)
        assert set(rr.restricted_roots.values()) == {1}
        assert f.dim_Npm == f.dim_K


def test_m0_examples():
    assert dim_m0("E6(-26)") == 28
    assert dim_m0("E6(-14)") == 16
    assert dim_m0("G2(2)") == 0


def test_diagram_involution():
    assert diagram_involution("E6", [(1, 5), (2, 4)]) == {1: 5, 5: 1, 2: 4, 4: 2, 3: 3, 6: 6}


def test_satake_lookup():
    assert classify_satake_component("A5", set(), {0: 4, 4: 0, 1: 3, 3: 1}) == "su(3,3)"
    assert classify_satake_component("D5", set(), {}) == "so(5,5)"
    assert classify_satake_component("D5", {1, 2, 3, 4}, {}) == "so(9,1)"
    assert classify_satake_component("A3", {0, 2}, {}) == "su*(4)"
    assert classify_satake_component("E6", {1, 2, 3, 5}, {}) == "E6(-26)"
    with pytest.raises(UnclassifiedSubdiagram):
        classify_satake_component("A3", {1}, {})


def test_bad_pins_detected():
    d = dict(reg.form_data("E6(2)"))
    d["pins"] = {1: [1], 2: [2, 4], 3: [3], 4: [6]}
    from artifact.real_form import RegistryMismatch, _make_form, restricted_root_system as rrs
    with pytest.raises(RegistryMismatch):
        rrs(_make_form(d))
