"""Lie-algebra labels: parsing, dimensions, complexification, canonical spelling.

Labels are the strings used throughout the tables, e.g. ``so(5,5)``,
``sl(3,C)_R``, ``su*(6)``, ``E6(-26)``, ``sl(3,R)_S+sl(2,R)_L``.
Compact C-type algebras follow the rank convention ``usp(n)`` / ``sp(n)``
(usp(3) has dimension 21).
"""

from __future__ import annotations

import re
from collections import Counter

EXCEPTIONAL_DIMS = {"G2": 14, "F4": 52, "E6": 78, "E7": 133, "E8": 248}


class UnknownLabel(ValueError):
    pass


def type_dim(t: str) -> int:
    """Dimension of a complex simple type such as ``A5`` or ``E7``."""
    letter, n = t[0], int(t[1:])
    if letter == "A":
        return n * (n + 2)
    if letter in "BC":
        return n * (2 * n + 1)
    if letter == "D":
        return n * (2 * n - 1)
    return EXCEPTIONAL_DIMS[t]


def _so_type(N: int):
    """Complex type(s) of so(N) plus abelian rank."""
    if N <= 1:
        return [], 0
    if N == 2:
        return [], 1
    if N == 3:
        return ["A1"], 0
    if N == 4:
        return ["A1", "A1"], 0
    if N == 5:
        return ["B2"], 0
    if N == 6:
        return ["A3"], 0
    if N % 2:
        return [f"B{(N - 1) // 2}"], 0
    return [f"D{N // 2}"], 0


def _sp_type(n: int):
    if n == 1:
        return ["A1"]
    if n == 2:
        return ["B2"]
    return [f"C{n}"]


def _sl_type(N: int):
    if N <= 1:
        return []
    return [f"A{N - 1}"]


_NUM = r"(\d+)"

_SIMPLE_RULES = [
    (re.compile(rf"^sl\({_NUM},C\)_R$"), lambda a: (_sl_type(a[0]) * 2, 0)),
    (re.compile(rf"^sl\({_NUM}(?:,R)?\)$"), lambda a: (_sl_type(a[0]), 0)),
    (re.compile(rf"^su\*\({_NUM}\)$"), lambda a: (_sl_type(a[0]), 0)),
    (re.compile(rf"^su\({_NUM},{_NUM}\)$"), lambda a: (_sl_type(a[0] + a[1]), 0)),
    (re.compile(rf"^su\({_NUM}\)$"), lambda a: (_sl_type(a[0]), 0)),
    (re.compile(rf"^so\*\({_NUM}\)$"), lambda a: _so_type(a[0])),
    (re.compile(rf"^so\({_NUM},C\)_R$"), lambda a: (_so_type(a[0])[0] * 2, 2 * _so_type(a[0])[1])),
    (re.compile(rf"^so\({_NUM},{_NUM}\)$"), lambda a: _so_type(a[0] + a[1])),
    (re.compile(rf"^so\({_NUM}\)$"), lambda a: _so_type(a[0])),
    (re.compile(rf"^sp\({_NUM},R\)$"), lambda a: (_sp_type(a[0]), 0)),
    (re.compile(rf"^sp\({_NUM},{_NUM}\)$"), lambda a: (_sp_type(a[0] + a[1]), 0)),
    (re.compile(rf"^u?sp\({_NUM}\)$"), lambda a: (_sp_type(a[0]), 0)),
    (re.compile(r"^u\(1\)$"), lambda a: ([], 1)),
    (re.compile(r"^([EFG]\d)\((-?\d+)\)$"), None),
    (re.compile(r"^([EFG]\d)$"), None),
]


def _strip_length(tok: str) -> str:
    return re.sub(r"_(L|S)$", "", tok)


def split_summands(label: str) -> list:
    label = label.replace(" ", "").replace("⊕", "+").replace("−", "-")
    if not label or label in ("0", "∅"):
        return []
    return [t for t in label.split("+") if t]


def summand_types(tok: str):
    """(list of complex simple types, abelian rank) for one summand."""
    t = _strip_length(tok)
    for pat, fn in _SIMPLE_RULES:
        m = pat.match(t)
        if not m:
            continue
        if fn is None:
            return [m.group(1)], 0
        args = [int(g) for g in m.groups()]
        return fn(args)
    raise UnknownLabel(f"unrecognized Lie algebra label {tok!r}")


def complexify(label: str):
    """(sorted tuple of complex simple types, abelian rank) of a possibly composite label."""
    types, ab = [], 0
    for tok in split_summands(label):
        ts, a = summand_types(tok)
        types.extend(normalize_type(x) for x in ts)
        ab += a
    return tuple(sorted(types, key=_type_key)), ab


def normalize_type(t: str) -> str:
    letter, n = t[0], int(t[1:])
    if letter == "D" and n == 3:
        return "A3"
    if letter in "BC" and n == 1:
        return "A1"
    if letter == "C" and n == 2:
        return "B2"
    return t


def _type_key(t: str):
    return ("ABCDEFG".index(t[0]), -int(t[1:]))


def dimension(label: str) -> int:
    types, ab = complexify(label)
    return sum(type_dim(t) for t in types) + ab


# accidental isomorphisms, used only when comparing labels
_CANON = {
    "so(3)": "su(2)", "usp(1)": "su(2)", "sp(1)": "su(2)", "su*(2)": "su(2)",
    "so(2,1)": "sl(2,R)", "su(1,1)": "sl(2,R)", "sp(1,R)": "sl(2,R)", "sl(2)": "sl(2,R)",
    "so(2)": "u(1)",
    "so(3,1)": "sl(2,C)_R",
    "so(5,1)": "su*(4)",
    "so(3,3)": "sl(4,R)", "so(4,2)": "su(2,2)", "so(6)": "su(4)", "so*(6)": "su(3,1)",
    "so(5)": "usp(2)", "sp(2)": "usp(2)", "so(4,1)": "sp(1,1)", "so(3,2)": "sp(2,R)",
    "so(4)": "su(2)+su(2)", "so(2,2)": "sl(2,R)+sl(2,R)", "so*(4)": "su(2)+sl(2,R)",
    "so*(8)": "so(6,2)",
    "usp(3)": "sp(3)",
}


def _canon_token(tok: str) -> list:
    m = re.match(r"^(.*?)(_[LS])?$", tok)
    base, suffix = m.group(1), m.group(2) or ""
    base = base.replace("sl(n,R)", "sl(n,R)")
    mm = re.match(r"^(so|su|sp)\((\d+),(\d+)\)$", base)
    if mm and int(mm.group(2)) < int(mm.group(3)):
        base = f"{mm.group(1)}({mm.group(3)},{mm.group(2)})"
    mm = re.match(r"^sl\((\d+)\)$", base)
    if mm:
        base = f"sl({mm.group(1)},R)"
    seen = set()
    while base in _CANON and base not in seen:
        seen.add(base)
        base = _CANON[base]
    parts = base.split("+")
    if len(parts) > 1:
        return [p + suffix for p in parts]
    return [base + suffix]


def canonical(label: str) -> tuple:
    """Multiset of canonical summand spellings, order-free."""
    toks = []
    for t in split_summands(label):
        toks.extend(_canon_token(t))
    return tuple(sorted(Counter(toks).elements()))


def same_label(a: str, b: str) -> bool:
    return canonical(a) == canonical(b)


def join(parts) -> str:
    return "+".join(parts) if parts else "0"
