"""Embedded data: the twelve non-compact exceptional real forms and the golden tables.

Node numbers follow the Satake diagrams (see ``root_system``). ``pins`` maps
the index i of the maximal parabolic P_i to the complex nodes it deletes;
an arrow pair counts as one restricted node.
"""

from __future__ import annotations

import hashlib
import json

SCHEMA_VERSION = "1.0"

FORMS = [
    dict(label="E6(6)", alias="EI", type="E6", black=[], arrows=[], dim_g=78, K="sp(4)", dim_K=36,
         dim_P=42, dim_Npm=36, m0="0", split_rank=6, discrete_series=False,
         pins={1: [1], 2: [6], 3: [2], 4: [3], 5: [5], 6: [4]}),
    dict(label="E6(2)", alias="EII", type="E6", black=[], arrows=[[1, 5], [2, 4]], dim_g=78,
         K="su(6)+su(2)", dim_K=38, dim_P=40, dim_Npm=36, m0="u(1)+u(1)", split_rank=4,
         discrete_series=True, pins={1: [1, 5], 2: [2, 4], 3: [3], 4: [6]}),
    dict(label="E6(-14)", alias="EIII", type="E6", black=[2, 3, 4], arrows=[[1, 5]], dim_g=78,
         K="so(10)+so(2)", dim_K=46, dim_P=32, dim_Npm=30, m0="so(6)+so(2)", split_rank=2,
         discrete_series=True, pins={1: [1, 5], 2: [6]}),
    dict(label="E6(-26)", alias="EIV", type="E6", black=[2, 3, 4, 6], arrows=[], dim_g=78, K="F4(-52)",
         dim_K=52, dim_P=26, dim_Npm=24, m0="so(8)", split_rank=2, discrete_series=False,
         pins={1: [1], 2: [5]}),
    dict(label="E7(7)", alias="EV", type="E7", black=[], arrows=[], dim_g=133, K="su(8)", dim_K=63,
         dim_P=70, dim_Npm=63, m0="0", split_rank=7, discrete_series=True,
         pins={i: [i] for i in range(1, 8)}),
    dict(label="E7(-5)", alias="EVI", type="E7", black=[4, 6, 7], arrows=[], dim_g=133,
         K="so(12)+su(2)", dim_K=69, dim_P=64, dim_Npm=60, m0="su(2)+su(2)+su(2)", split_rank=4,
         discrete_series=True, pins={1: [1], 2: [5], 3: [2], 4: [3]}),
    dict(label="E7(-25)", alias="EVII", type="E7", black=[2, 3, 4, 7], arrows=[], dim_g=133,
         K="E6(-78)+so(2)", dim_K=79, dim_P=54, dim_Npm=51, m0="so(8)", split_rank=3,
         discrete_series=True, pins={1: [1], 2: [5], 3: [6]}),
    dict(label="E8(8)", alias="EVIII", type="E8", black=[], arrows=[], dim_g=248, K="so(16)",
         dim_K=120, dim_P=128, dim_Npm=120, m0="0", split_rank=8, discrete_series=True,
         pins={i: [i] for i in range(1, 9)}),
    dict(label="E8(-24)", alias="EIX", type="E8", black=[2, 3, 4, 8], arrows=[], dim_g=248,
         K="E7(-133)+su(2)", dim_K=136, dim_P=112, dim_Npm=108, m0="so(8)", split_rank=4,
         discrete_series=True, pins={1: [1], 2: [5], 3: [6], 4: [7]}),
    dict(label="F4(4)", alias="FI", type="F4", black=[], arrows=[], dim_g=52, K="sp(3)+su(2)",
         dim_K=24, dim_P=28, dim_Npm=24, m0="0", split_rank=4, discrete_series=True,
         pins={1: [2], 2: [3], 3: [1], 4: [4]}),
    dict(label="F4(-20)", alias="FII", type="F4", black=[1, 2, 3], arrows=[], dim_g=52, K="so(9)",
         dim_K=36, dim_P=16, dim_Npm=15, m0="so(7)", split_rank=1, discrete_series=True,
         pins={1: [4]}),
    dict(label="G2(2)", alias="G", type="G2", black=[], arrows=[], dim_g=14, K="su(2)+su(2)",
         dim_K=6, dim_P=8, dim_Npm=6, m0="0", split_rank=2, discrete_series=True,
         pins={1: [2], 2: [1]}),
]

# Compact forms, used only by the Levi lookup.
COMPACT_EXCEPTIONAL = {"E6": "E6(-78)", "E7": "E7(-133)", "E8": "E8(-248)", "F4": "F4(-52)", "G2": "G2(-14)"}

# Maximal parabolics: index -> (Levi label, dim N).
MAX_PARABOLICS = {
    "E6(6)": {1: ("so(5,5)", 16), 2: ("sl(6,R)", 21), 3: ("sl(5,R)+sl(2,R)", 25),
              4: ("sl(3,R)+sl(3,R)+sl(2,R)", 29), 5: ("so(5,5)", 16), 6: ("sl(5,R)+sl(2,R)", 25)},
    "E6(2)": {1: ("so(5,3)+u(1)", 24), 2: ("sl(3,R)+sl(2,C)_R+u(1)", 31),
              3: ("sl(3,C)_R+sl(2,R)", 29), 4: ("su(3,3)", 21)},
    "E6(-14)": {1: ("so(7,1)+so(2)", 24), 2: ("su(5,1)", 21)},
    "E6(-26)": {1: ("so(9,1)", 16), 2: ("so(9,1)", 16)},
    "E7(7)": {1: ("so(6,6)", 33), 2: ("sl(6,R)+sl(2,R)", 47), 3: ("sl(4,R)+sl(3,R)+sl(2,R)", 53),
              4: ("sl(5,R)+sl(3,R)", 50), 5: ("so(5,5)+sl(2,R)", 42), 6: ("E6(6)", 27),
              7: ("sl(7,R)", 42)},
    "E7(-5)": {1: ("so*(12)", 33), 2: ("so(7,3)+su(2)", 42), 3: ("su*(6)+sl(2,R)", 47),
               4: ("so(5,1)+sl(3,R)+su(2)", 53)},
    "E7(-25)": {1: ("so(10,2)", 33), 2: ("so(9,1)+sl(2,R)", 42), 3: ("E6(-26)", 27)},
    "E8(8)": {1: ("so(7,7)", 78), 2: ("sl(7,R)+sl(2,R)", 98), 3: ("sl(5,R)+sl(3,R)+sl(2,R)", 106),
              4: ("sl(5,R)+sl(4,R)", 104), 5: ("so(5,5)+sl(3,R)", 97), 6: ("E6(6)+sl(2,R)", 83),
              7: ("E7(7)", 57), 8: ("sl(8,R)", 92)},
    "E8(-24)": {1: ("so(11,3)", 78), 2: ("so(9,1)+sl(3,R)", 97), 3: ("E6(-26)+sl(2,R)", 83),
                4: ("E7(-25)", 57)},
    "F4(4)": {1: ("sl(3,R)_S+sl(2,R)_L", 20), 2: ("sl(3,R)_L+sl(2,R)_S", 20), 3: ("sp(3,R)", 15),
              4: ("so(4,3)", 15)},
    "F4(-20)": {1: ("so(7)", 15)},
    "G2(2)": {1: ("sl(2,R)_L", 5), 2: ("sl(2,R)_S", 5)},
}

LONG_SHORT = {
    ("F4(4)", 1): (11, 9), ("F4(4)", 2): (9, 11), ("F4(4)", 3): (9, 6), ("F4(4)", 4): (6, 9),
    ("G2(2)", 1): (2, 3), ("G2(2)", 2): (3, 2),
}

# Grade k >= 1 -> dim g^k for every maximal parabolic, from the adjoint
# decompositions. F4(4) P1/P2 and G2(2) P1/P2 are keyed by the Levi/long-short
# data above (the grading list attaches them the other way round).
GRADINGS = {
    "E6(6)": {1: {1: 16}, 2: {1: 20, 2: 1}, 3: {1: 20, 2: 5}, 4: {1: 18, 2: 9, 3: 2},
              5: {1: 16}, 6: {1: 20, 2: 5}},
    "E6(2)": {1: {1: 16, 2: 8}, 2: {1: 12, 2: 12, 3: 4, 4: 3}, 3: {1: 18, 2: 9, 3: 2},
              4: {1: 20, 2: 1}},
    "E6(-14)": {1: {1: 16, 2: 8}, 2: {1: 20, 2: 1}},
    "E6(-26)": {1: {1: 16}, 2: {1: 16}},
    "E7(7)": {1: {1: 32, 2: 1}, 2: {1: 30, 2: 15, 3: 2}, 3: {1: 24, 2: 18, 3: 8, 4: 3},
              4: {1: 30, 2: 15, 3: 5}, 5: {1: 32, 2: 10}, 6: {1: 27}, 7: {1: 35, 2: 7}},
    "E7(-5)": {1: {1: 32, 2: 1}, 2: {1: 32, 2: 10}, 3: {1: 30, 2: 15, 3: 2},
               4: {1: 24, 2: 18, 3: 8, 4: 3}},
    "E7(-25)": {1: {1: 32, 2: 1}, 2: {1: 32, 2: 10}, 3: {1: 27}},
    "E8(8)": {1: {1: 64, 2: 14}, 2: {1: 42, 2: 35, 3: 14, 4: 7},
              3: {1: 30, 2: 30, 3: 20, 4: 15, 5: 6, 6: 5}, 4: {1: 40, 2: 30, 3: 20, 4: 10, 5: 4},
              5: {1: 48, 2: 30, 3: 16, 4: 3}, 6: {1: 54, 2: 27, 3: 2}, 7: {1: 56, 2: 1},
              8: {1: 56, 2: 28, 3: 8}},
    "E8(-24)": {1: {1: 64, 2: 14}, 2: {1: 48, 2: 30, 3: 16, 4: 3}, 3: {1: 54, 2: 27, 3: 2},
                4: {1: 56, 2: 1}},
    "F4(4)": {1: {1: 12, 2: 6, 3: 2}, 2: {1: 6, 2: 9, 3: 2, 4: 3}, 3: {1: 14, 2: 1}, 4: {1: 8, 2: 7}},
    "F4(-20)": {1: {1: 8, 2: 7}},
    "G2(2)": {1: {1: 2, 2: 1, 3: 2}, 2: {1: 4, 2: 1}},
}

# Table A: (form, index, Levi label) members and dim N.
TABLE_A = [
    (1, [("E6(-14)", 2, "su(5,1)"), ("E6(6)", 2, "sl(6,R)"), ("E6(2)", 4, "su(3,3)")], 21),
    (2, [("E6(-14)", 1, "so(7,1)+so(2)"), ("E6(2)", 1, "so(5,3)+u(1)")], 24),
    (3, [("E6(-26)", 1, "so(9,1)"), ("E6(6)", 1, "so(5,5)")], 16),
    (4, [("E6(6)", 4, "sl(3,R)+sl(3,R)+sl(2,R)"), ("E6(2)", 3, "sl(3,C)_R+sl(2,R)")], 29),
    (5, [("E7(-25)", 3, "E6(-26)"), ("E7(7)", 6, "E6(6)")], 27),
    (6, [("E7(-25)", 2, "so(9,1)+sl(2,R)"), ("E7(7)", 5, "so(5,5)+sl(2,R)"),
         ("E7(-5)", 2, "so(7,3)+su(2)")], 42),
    (7, [("E7(-25)", 1, "so(10,2)"), ("E7(7)", 1, "so(6,6)"), ("E7(-5)", 1, "so*(12)")], 33),
    (8, [("E7(7)", 3, "sl(4,R)+sl(2,R)+sl(3,R)"), ("E7(-5)", 4, "su*(4)+su(2)+sl(3,R)")], 53),
    (9, [("E7(-5)", 3, "su*(6)+sl(2,R)"), ("E7(7)", 2, "sl(6,R)+sl(2,R)"),
         ("E7(-25)", None, "su*(6)+su(2)")], 47),
    (10, [("E8(-24)", 4, "E7(-25)"), ("E8(8)", 7, "E7(7)")], 57),
    (11, [("E8(-24)", 1, "so(11,3)"), ("E8(8)", 1, "so(7,7)")], 78),
    (12, [("E8(-24)", 3, "E6(-26)+sl(2,R)"), ("E8(8)", 6, "E6(6)+sl(2,R)")], 83),
    (13, [("E8(-24)", 2, "so(9,1)+sl(3,R)"), ("E8(8)", 5, "so(5,5)+sl(3,R)")], 97),
    (14, [("F4(-20)", 1, "so(7)"), ("F4(4)", 4, "so(4,3)")], 15),
]

# Table B: per Table A member, (role of the form, role of the Levi). Alternatives separated by "=".
TABLE_B = {
    1: [("conf(M21(O))", "su(5,1)"), ("qconf(J3(Cs))", "conf(J3(Cs))"), ("qconf(J3(C))", "conf(J3(C))")],
    2: [("conf(M21(O))", "str0(G(7,1))+u(1)"), ("qconf(J3(C))", "str0(G(5,3))+u(1)")],
    3: [("str0(J3(O))", "str0(J2(O))"), ("str0(J3(Os))", "str0(J2(Os))")],
    4: [("qconf(J3(Cs))", "str0(J3(Cs))+sl(2,R)"), ("qconf(J3(C))", "str0(J3(C))+sl(2,R)")],
    5: [("conf(J3(O))", "str0(J3(O))"), ("conf(J3(Os))", "str0(J3(Os))")],
    6: [("conf(J3(O))", "str0(J2(O))+sl(2,R)"), ("conf(J3(Os))=qconf(J3(Hs))", "str0(J2(Os))+sl(2,R)"),
        ("qconf(J3(H))", "str0(G(7,3))+su(2)")],
    7: [("conf(J3(O))", "conf(J2(O))"), ("conf(J3(Os))=qconf(J3(Hs))", "conf(J2(Os))=conf(J3(Hs))"),
        ("qconf(J3(H))", "conf(J3(H))")],
    8: [("qconf(J3(Hs))", "sl(4,R)+~A4+sl(3,R)"), ("qconf(J3(H))", "su*(4)+A4+sl(3,R)")],
    9: [("qconf(J3(H))", "str0(J3(H))+sl(2,R)"), ("qconf(J3(Hs))=conf(J3(Os))", "str0(J3(Hs))+sl(2,R)"),
        ("conf(J3(O))", "str0(J3(H))+su(2)")],
    10: [("qconf(J3(O))", "conf(J3(O))"), ("qconf(J3(Os))", "conf(J3(Os))")],
    11: [("qconf(J3(O))", "qconf(R+G(8,0))"), ("qconf(J3(Os))", "qconf(R+G(4,4))")],
    12: [("qconf(J3(O))", "str0(J3(O))+sl(2,R)"), ("qconf(J3(Os))", "str0(J3(Os))+sl(2,R)")],
    13: [("qconf(J3(O))", "str0(J2(O))+sl(3,R)"), ("qconf(J3(Os))", "str0(J2(Os))+sl(3,R)")],
    14: [("der(J12(O))", "str0(G(7,0))"), ("der(J12(Os))", "str0(G(4,3))")],
}

# A_q and its split partner (q = dim of the composition algebra)
A_Q_LABELS = {"A1": "0", "A2": "u(1)", "A4": "su(2)", "A8": "0", "~A1": "0", "~A2": "so(1,1)",
              "~A4": "sl(2,R)", "~A8": "0"}

TABLE_A_NOTES = {
    9: "E7(-25) has no maximal parabolic with Levi su*(6)+su(2); its three maximal Levis are "
       "so(10,2), so(9,1)+sl(2,R) and E6(-26). The member is listed as a table-only entry.",
}

_BY_LABEL = {f["label"]: f for f in FORMS}
_ALIASES = {f["alias"]: f["label"] for f in FORMS}


def normalize_form_label(text: str) -> str:
    t = text.strip().replace("−", "-").replace("–", "-").replace(" ", "")
    if t in _BY_LABEL:
        return t
    if t.upper() in _ALIASES:
        return _ALIASES[t.upper()]
    if t == "G2":
        return "G2(2)"
    raise KeyError(f"unknown real form {text!r}")


def form_data(label: str) -> dict:
    return _BY_LABEL[normalize_form_label(label)]


def registry_document(forms=None) -> dict:
    forms = FORMS if forms is None else forms
    out = []
    for f in forms:
        d = dict(f)
        d["pins"] = {str(k): v for k, v in f["pins"].items()}
        out.append(d)
    return {
        "schema_version": SCHEMA_VERSION,
        "forms": out,
        "max_parabolics": {f: {str(i): list(v) for i, v in rows.items()} for f, rows in MAX_PARABOLICS.items()},
        "long_short": {f"{k[0]}#{k[1]}": list(v) for k, v in LONG_SHORT.items()},
        "gradings": {f: {str(i): {str(k): d for k, d in g.items()} for i, g in rows.items()}
                     for f, rows in GRADINGS.items()},
        "table_a": [{"row": r, "members": [list(m) for m in mem], "dim_n": d} for r, mem, d in TABLE_A],
        "table_b": {str(r): [list(x) for x in v] for r, v in TABLE_B.items()},
    }


def registry_hash(forms=None) -> str:
    blob = json.dumps(registry_document(forms), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


def install(doc: dict) -> None:
    """Replace the embedded data in place with a dumped registry document.

    Accepts the bare registry or the ``dump-registry`` output document around it.
    """
    if not isinstance(doc, dict):
        raise ValueError("registry document must be a JSON object")
    if "forms" not in doc and isinstance(doc.get("payload"), dict):
        doc = doc["payload"]
    missing = [k for k in ("forms", "max_parabolics", "long_short", "gradings", "table_a", "table_b")
               if k not in doc]
    if missing:
        raise ValueError(f"registry document lacks {missing}")
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"registry schema {doc.get('schema_version')!r} is not {SCHEMA_VERSION}")
    forms = []
    for f in doc["forms"]:
        d = dict(f)
        d["pins"] = {int(k): list(v) for k, v in f["pins"].items()}
        forms.append(d)
    FORMS[:] = forms
    _BY_LABEL.clear()
    _BY_LABEL.update({f["label"]: f for f in FORMS})
    _ALIASES.clear()
    _ALIASES.update({f["alias"]: f["label"] for f in FORMS})
    MAX_PARABOLICS.clear()
    MAX_PARABOLICS.update({f: {int(i): tuple(v) for i, v in rows.items()}
                           for f, rows in doc["max_parabolics"].items()})
    LONG_SHORT.clear()
    LONG_SHORT.update({(k.split("#")[0], int(k.split("#")[1])): tuple(v) for k, v in doc["long_short"].items()})
    GRADINGS.clear()
    GRADINGS.update({f: {int(i): {int(k): d for k, d in g.items()} for i, g in rows.items()}
                     for f, rows in doc["gradings"].items()})
    TABLE_A[:] = [(r["row"], [tuple(m) for m in r["members"]], r["dim_n"]) for r in doc["table_a"]]
    TABLE_B.clear()
    TABLE_B.update({int(r): [tuple(x) for x in v] for r, v in doc["table_b"].items()})
