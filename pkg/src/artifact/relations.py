"""Parabolic relatedness across real forms and Jordan-algebraic roles of the labels."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from . import registry as reg
from .jordan_core import UnsupportedDescriptor, parse_descriptor
from .lie_labels import UnknownLabel, canonical, complexify, dimension, same_label
from .parabolic import ParabolicSubalgebra, maximal_parabolic, maximal_parabolics
from .real_form import get_form, registry
from .symmetry_dims import TABLE1_ROWS, symmetry_report


def complexified_levi(p: ParabolicSubalgebra) -> tuple:
    """(sorted complex simple types, abelian rank) of the Levi factor M."""
    return complexify(p.levi_label)


def ambient_type(p: ParabolicSubalgebra) -> str:
    return get_form(p.form).satake.type


def relatedness_key(p: ParabolicSubalgebra) -> tuple:
    return (ambient_type(p),) + complexified_levi(p)


def parabolically_related(p1: ParabolicSubalgebra, p2: ParabolicSubalgebra) -> bool:
    return relatedness_key(p1) == relatedness_key(p2)


@dataclass
class RelatedClass:
    row_id: int | None
    members: list  # (form, node, levi label)
    dim_n: int
    complexified_levi: tuple
    ambient: str
    status: str  # "match", "partial" or "beyond-table"
    jordan_roles: list = field(default_factory=list)
    notes: str = ""

    def as_dict(self) -> dict:
        types, ab = self.complexified_levi
        return {
            "row": self.row_id, "ambient": self.ambient,
            "members": [{"form": f, "node": j, "levi": lab} for f, j, lab in self.members],
            "dim_n": self.dim_n, "complexified_levi": {"types": list(types), "abelian_rank": ab},
            "status": self.status, "jordan_roles": [list(r) for r in self.jordan_roles],
            "notes": self.notes,
        }


@dataclass
class RelatedSweep:
    classes: list
    table_rows: list  # one record per Table A row
    beyond_paper: list

    @property
    def ok(self) -> bool:
        return not self.beyond_paper and all(r["ok"] for r in self.table_rows)

    def as_dict(self) -> dict:
        return {"classes": [c.as_dict() for c in self.classes], "table_a": self.table_rows,
                "beyond_paper": [c.as_dict() for c in self.beyond_paper], "ok": self.ok}


def _all_maximal() -> list:
    return [p for f in registry() for p in maximal_parabolics(f)]


@lru_cache(maxsize=1)
def enumerate_max_related() -> RelatedSweep:
    groups = {}
    for p in _all_maximal():
        groups.setdefault(relatedness_key(p), []).append(p)
    nontrivial = {k: v for k, v in groups.items() if len({p.form for p in v}) >= 2}
    classes, rows, matched = [], [], set()
    for row_id, members, dim_n in reg.TABLE_A:
        expected = {(f, j) for f, j, _ in members if j is not None}
        found = None
        for key, ps in nontrivial.items():
            if expected <= {(p.form, p.deleted_node) for p in ps}:
                found = key
                break
        problems = []
        if found is None:
            problems.append("no computed class contains the listed members")
            ps = []
        else:
            ps = nontrivial[found]
            matched.add(found)
            got = {(p.form, p.deleted_node) for p in ps}
            # a second deletion of the same form with an isomorphic Levi is the
            # table's "isomorphic occurrence", listed once
            listed = {f: lab for f, j, lab in members if j is not None}
            extra = [(p.form, p.deleted_node) for p in ps if (p.form, p.deleted_node) not in expected
                     and not (p.form in listed and same_label(p.levi_label, listed[p.form]))]
            if extra:
                problems.append(f"computed class has extra members {sorted(extra)}")
            if not expected <= got:
                problems.append(f"computed class misses {sorted(expected - got)}")
            if any(j is None for _, j, _ in members):
                missing = [f for f, j, _ in members if j is None]
                problems.append(f"table member(s) {missing} have no maximal parabolic with this Levi")
        for f, j, lab in members:
            if j is None:
                continue
            p = maximal_parabolic(f, j)
            if not same_label(p.levi_label, lab):
                problems.append(f"{f} P{j}: Levi {p.levi_label} differs from {lab}")
            if p.dim_n_theta != dim_n:
                problems.append(f"{f} P{j}: dim N {p.dim_n_theta} differs from {dim_n}")
        status = "match" if not problems else ("partial" if found else "missing")
        roles = [tuple(r) for r in reg.TABLE_B.get(row_id, [])]
        rc = RelatedClass(row_id, [(p.form, p.deleted_node, p.levi_label) for p in ps],
                          ps[0].dim_n_theta if ps else dim_n,
                          found[1:] if found else ((), 0), found[0] if found else "",
                          status, roles, reg.TABLE_A_NOTES.get(row_id, ""))
        classes.append(rc)
        rows.append({"row": row_id, "ok": not problems, "status": status, "problems": problems,
                     "table_members": [[f, j, lab] for f, j, lab in members], "dim_n": dim_n})
    beyond = []
    for key, ps in nontrivial.items():
        if key in matched:
            continue
        beyond.append(RelatedClass(None, [(p.form, p.deleted_node, p.levi_label) for p in ps],
                                   ps[0].dim_n_theta, key[1:], key[0], "beyond-table"))
    return RelatedSweep(classes, rows, beyond)


def relatedness_is_equivalence() -> bool:
    """Reflexive, symmetric and transitive on all maximal parabolics (exhaustive)."""
    ps = _all_maximal()
    rel = {(a, b): parabolically_related(ps[a], ps[b]) for a in range(len(ps)) for b in range(len(ps))}
    n = len(ps)
    if not all(rel[a, a] for a in range(n)):
        return False
    if any(rel[a, b] != rel[b, a] for a, b in combinations(range(n), 2)):
        return False
    for a in range(n):
        for b in range(n):
            if rel[a, b]:
                for c in range(n):
                    if rel[b, c] and not rel[a, c]:
                        return False
    return True


# ---------------------------------------------------------------------------
# Jordan roles

ROLE_FUNCS = ("der", "aut", "str0", "str", "conf", "qconf")
UNVERIFIED = "unverified-by-construction"


@dataclass(frozen=True)
class JordanRole:
    expression: str
    label: str
    source: str
    status: str  # "verified", "mismatch" or UNVERIFIED
    role_dim: int | None
    label_dim: int

    def as_dict(self) -> dict:
        return {"expression": self.expression, "label": self.label, "source": self.source,
                "status": self.status, "role_dim": self.role_dim, "label_dim": self.label_dim}


def split_top(expr: str, sep: str = "+") -> list:
    out, depth, cur = [], 0, ""
    for ch in expr:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += ch
    out.append(cur)
    return [t for t in out if t]


_FN = re.compile(r"^(der|aut|str0|str|conf|qconf)\((.+)\)$")


@lru_cache(maxsize=None)
def _role_dims(desc: str) -> dict:
    rep = symmetry_report(desc)
    return {"der": rep.dim_der, "aut": rep.dim_der, "str": rep.dim_str, "str0": rep.dim_str0,
            "conf": rep.dim_conf, "qconf": rep.dim_qconf}


def role_dimension(expr: str) -> int | None:
    """Dimension of a role expression; None when it involves an unsupported system."""
    total = 0
    for tok in split_top(expr.replace(" ", "")):
        m = _FN.match(tok)
        if m:
            try:
                parse_descriptor(m.group(2))
            except UnsupportedDescriptor:
                return None
            total += _role_dims(m.group(2))[m.group(1)]
        elif tok in reg.A_Q_LABELS:
            total += dimension(reg.A_Q_LABELS[tok])
        else:
            total += dimension(tok)
    return total


def check_role(expression: str, label: str, source: str) -> list:
    """One JordanRole per '='-separated alternative."""
    out = []
    ldim = dimension(label)
    for alt in expression.split("="):
        d = role_dimension(alt)
        status = UNVERIFIED if d is None else ("verified" if d == ldim else "mismatch")
        out.append(JordanRole(alt, label, source, status, d, ldim))
    return out


def table_b_roles() -> list:
    roles = []
    for row_id, members, _ in reg.TABLE_A:
        for (form, _, levi), (frole, lrole) in zip(members, reg.TABLE_B.get(row_id, [])):
            roles += check_role(frole, form, f"B{row_id}:form")
            roles += check_role(lrole, levi, f"B{row_id}:levi")
    return roles


def table1_roles() -> list:
    roles = []
    for desc, labels in TABLE1_ROWS.items():
        for fn, lab in zip(("der", "str0", "conf", "qconf"), labels):
            if lab != "0":
                roles += check_role(f"{fn}({desc})", lab, "table1")
    return roles


def verify_table_b() -> dict:
    roles = table_b_roles()
    unverified_cells = sorted({(r.source, r.expression) for r in roles if r.status == UNVERIFIED})
    return {
        "roles": [r.as_dict() for r in roles],
        "mismatches": [r.as_dict() for r in roles if r.status == "mismatch"],
        "unverified": [list(c) for c in unverified_cells],
        "ok": not any(r.status == "mismatch" for r in roles) and len(unverified_cells) <= 3,
    }


def jordan_interpretation(label: str) -> list:
    """Every role the label carries in Table B or Table 1."""
    try:
        key = canonical(reg.normalize_form_label(label))
    except KeyError:
        try:
            key = canonical(label)
            dimension(label)
        except UnknownLabel as exc:
            raise KeyError(f"unknown label {label!r}") from exc
    out, seen = [], set()
    for r in table_b_roles() + table1_roles():
        if canonical(r.label) == key and r.expression not in seen:
            seen.add(r.expression)
            out.append(r)
    if not out:
        raise KeyError(f"label {label!r} carries no role in the tables")
    return out
