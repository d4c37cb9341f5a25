"""Command-line entry point.

Every command builds an OutputDocument ``{schema_version, command, payload,
registry_hash}``. ``--format json`` prints it with sorted keys; ``table`` and
``csv`` print the command's row view. Exit codes: 0 ok, 1 verification
mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import registry as reg

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class Result:
    def __init__(self, payload, rows=None, ok=True, message=None):
        self.payload = payload
        self.rows = rows
        self.ok = ok
        self.message = message


def _coords(text: str) -> list:
    try:
        return [Fraction(t) for t in text.replace(" ", "").split(",") if t]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad coordinate list {text!r}") from exc


def _form(label: str) -> str:
    try:
        return reg.normalize_form_label(label)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from exc


def _algebra(text: str):
    from .jordan_core import UnsupportedDescriptor, build_jordan
    try:
        return build_jordan(text)
    except UnsupportedDescriptor as exc:
        raise UsageError(str(exc)) from exc


# ---------------------------------------------------------------------------
# command handlers


def cmd_algebra_table(a) -> Result:
    from .composition_algebra import LABELS, table_json
    if a.label not in LABELS:
        raise UsageError(f"unknown composition algebra {a.label!r}; choose from {', '.join(LABELS)}")
    t = table_json(a.label)
    rows = [{"i": i, **{f"e{j}": ("-" if s < 0 else "+") + f"e{k}" for j, (k, s) in enumerate(row)}}
            for i, row in enumerate(t["table"])]
    return Result(t, rows)


def cmd_algebra_check(a) -> Result:
    from .verify import suite_algebra
    checks = suite_algebra(a.seed, a.trials)
    return Result({"checks": checks}, [{"name": c["name"], "status": c["status"]} for c in checks],
                  all(c["status"] != "fail" for c in checks))


def cmd_jordan_check(a) -> Result:
    from .identities import jordan_suite
    J = _algebra(a.algebra)
    r = jordan_suite(str(J.descriptor), a.trials, a.seed)
    return Result(r, [{"check": k, "failures": v} for k, v in r["failures"].items()], r["ok"])


def cmd_jordan_norm(a) -> Result:
    from .jordan_core import NotCubic, cubic_norm
    J = _algebra(a.algebra)
    x = _coords(a.coords)
    if len(x) != J.dim:
        raise UsageError(f"{J.descriptor} needs {J.dim} coordinates, got {len(x)}")
    try:
        n = cubic_norm(J, x) if J.degree == 3 else J.norm_value(x)
    except NotCubic as exc:
        raise UsageError(str(exc)) from exc
    payload = {"algebra": str(J.descriptor), "coords": [str(c) for c in x], "norm": str(n)}
    return Result(payload, [payload | {"coords": a.coords}])


def cmd_fts_check(a) -> Result:
    from .fts import build_fts
    from .identities import fts_suite
    from .jordan_core import NotCubic
    J = _algebra(a.algebra)
    try:
        build_fts(J.descriptor)
    except NotCubic as exc:
        raise UsageError(str(exc)) from exc
    r = fts_suite(str(J.descriptor), a.trials, a.seed)
    return Result(r, [{"check": k, "failures": v} for k, v in r["failures"].items()], r["ok"])


def cmd_fts_quartic(a) -> Result:
    from .fts import build_fts, from_vector
    from .jordan_core import NotCubic
    J = _algebra(a.algebra)
    try:
        F = build_fts(J.descriptor)
    except NotCubic as exc:
        raise UsageError(str(exc)) from exc
    x = _coords(a.coords)
    if len(x) != F.dim:
        raise UsageError(f"F({J.descriptor}) needs {F.dim} coordinates (alpha, beta, A, B), got {len(x)}")
    payload = {"algebra": str(J.descriptor), "quartic": str(F.quartic(from_vector(x)))}
    return Result(payload, [payload])


def cmd_symmetry_report(a) -> Result:
    from .symmetry_dims import symmetry_report
    J = _algebra(a.algebra)
    rep = symmetry_report(J.descriptor).as_dict()
    row = {k: v for k, v in rep.items() if k != "table1_labels"}
    return Result(rep, [row])


def cmd_symmetry_verify(a) -> Result:
    from .symmetry_dims import verify_table1
    r = verify_table1()
    return Result(r, r["rows"], r["ok"])


def cmd_roots_info(a) -> Result:
    from .root_system import UnsupportedType, build
    try:
        rs = build(a.type)
    except UnsupportedType as exc:
        raise UsageError(str(exc)) from exc
    payload = {"type": rs.type, "rank": rs.rank, "roots": len(rs.coeffs), "positive": len(rs.positive),
               "dim": rs.dim, "cartan": [list(r) for r in rs.cartan],
               "highest_root": list(rs.coeffs[0])}
    return Result(payload, [{k: v for k, v in payload.items() if k != "cartan"}])


def cmd_realform_list(a) -> Result:
    from .real_form import registry
    forms = [f.as_dict() for f in registry()]
    rows = [{"label": f["label"], "alias": f["alias"], "type": f["type"], "dim_K": f["dim_K"],
             "dim_P": f["dim_P"], "dim_Npm": f["dim_Npm"], "split_rank": f["split_rank"], "m0": f["m0_label"]}
            for f in forms]
    return Result({"forms": forms}, rows)


def cmd_realform_info(a) -> Result:
    from .real_form import dim_m0, get_form, restricted_root_system
    f = get_form(_form(a.form))
    rr = restricted_root_system(f)
    d = f.as_dict() | {"restricted_type": rr.reduced_type, "dim_m0": dim_m0(f)}
    return Result(d, [{k: v for k, v in d.items() if k not in ("pins", "arrows", "black")}])


def cmd_realform_restricted(a) -> Result:
    from .real_form import get_form, restricted_root_system
    rr = restricted_root_system(get_form(_form(a.form))).as_dict()
    rows = [{"coords": " ".join(map(str, r["coords"])), "multiplicity": r["multiplicity"]} for r in rr["roots"]]
    return Result(rr, rows)


def cmd_dump_registry(a) -> Result:
    doc = reg.registry_document()
    return Result(doc, [{"label": f["label"], "type": f["type"], "dim_Npm": f["dim_Npm"]} for f in doc["forms"]])


def _parabolic_row(p, with_grading=True) -> dict:
    from .parabolic import grading_profile
    row = {"form": p.form, "node": p.deleted_node, "levi": list(p.levi_factors),
           "abelian_rank": p.abelian_rank, "dim_n": p.dim_n_theta}
    if with_grading and p.is_maximal:
        row["grading"] = {str(k): v for k, v in grading_profile(p.form, p.deleted_node).grades.items()}
    return row


def _flat(row: dict) -> dict:
    out = {}
    for k, v in row.items():
        if isinstance(v, list):
            out[k] = "+".join(map(str, v)) if v else "-"
        elif isinstance(v, dict):
            out[k] = " ".join(f"{a}:{b}" for a, b in v.items())
        else:
            out[k] = v
    return out


def cmd_parabolic_max(a) -> Result:
    from .parabolic import InvalidIndex, maximal_parabolic, maximal_parabolics
    form = _form(a.form)
    try:
        ps = [maximal_parabolic(form, a.node)] if a.node is not None else maximal_parabolics(form)
    except InvalidIndex as exc:
        raise UsageError(str(exc)) from exc
    rows = [_parabolic_row(p) for p in ps]
    return Result({"form": form, "parabolics": rows}, [_flat(r) for r in rows])


def cmd_parabolic_all(a) -> Result:
    from .parabolic import all_standard_parabolics, bruhat_total
    from .real_form import get_form
    f = get_form(_form(a.form))
    rows = []
    for p in all_standard_parabolics(f):
        rows.append(p.as_dict() | {"bruhat_total": bruhat_total(p)})
    ok = all(r["bruhat_total"] == f.dim_g for r in rows)
    flat = [_flat({k: r[k] for k in ("theta", "levi", "abelian_rank", "dim_m", "dim_a", "dim_n")}) for r in rows]
    return Result({"form": f.label, "count": len(rows), "parabolics": rows}, flat, ok)


def cmd_related_enumerate(a) -> Result:
    from .relations import enumerate_max_related
    from .verify import KNOWN_DISCREPANCIES
    sweep = enumerate_max_related()
    rows = []
    for c in sweep.classes:
        rows.append({"row": c.row_id, "dim_n": c.dim_n, "status": c.status,
                     "members": "; ".join(f"{f} P{j} {lab}" for f, j, lab in c.members)})
    for c in sweep.beyond_paper:
        rows.append({"row": "beyond", "dim_n": c.dim_n, "status": c.status,
                     "members": "; ".join(f"{f} P{j} {lab}" for f, j, lab in c.members)})
    known = {int(k.rsplit("_", 1)[1]) for k in KNOWN_DISCREPANCIES if k.startswith("related:table_a_row_")}
    ok = not sweep.beyond_paper and all(r["ok"] or r["row"] in known for r in sweep.table_rows)
    return Result(sweep.as_dict(), rows, ok)


def cmd_related_check(a) -> Result:
    from .parabolic import InvalidIndex, maximal_parabolic
    from .relations import complexified_levi, parabolically_related
    try:
        p1 = maximal_parabolic(_form(a.form1), a.node1)
        p2 = maximal_parabolic(_form(a.form2), a.node2)
    except InvalidIndex as exc:
        raise UsageError(str(exc)) from exc
    rel = parabolically_related(p1, p2)
    payload = {"first": _parabolic_row(p1, False), "second": _parabolic_row(p2, False), "related": rel,
               "complexified": [list(complexified_levi(p1)[0]), list(complexified_levi(p2)[0])]}
    return Result(payload, [{"form1": p1.form, "node1": p1.deleted_node, "levi1": p1.levi_label,
                             "form2": p2.form, "node2": p2.deleted_node, "levi2": p2.levi_label,
                             "related": rel}])


def cmd_interpret(a) -> Result:
    from .relations import jordan_interpretation
    try:
        roles = jordan_interpretation(a.label)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from exc
    rows = [r.as_dict() for r in roles]
    return Result({"label": a.label, "roles": rows}, rows, all(r.status != "mismatch" for r in roles))


def cmd_verify_all(a) -> Result:
    from .verify import failing_forms, verify_all
    report = verify_all(seed=a.seed, only=a.only, jobs=a.jobs, trials=a.trials,
                        registry_doc=getattr(a, "_registry_doc", None))
    rows = [{"suite": n, **s["counts"]} for n, s in report["suites"].items()]
    msg = None
    if not report["ok"]:
        forms = failing_forms(report)
        msg = "verification failed: " + ", ".join(report["failed"][:10])
        if forms:
            msg += "; forms: " + ", ".join(forms)
    return Result(report, rows, report["ok"], msg)


# ---------------------------------------------------------------------------
# output


def _emit_table(rows, out) -> None:
    if not rows:
        out.write("(no rows)\n")
        return
    width = int(os.environ.get("COLUMNS", "120"))
    cols = list(rows[0].keys())
    for r in rows[1:]:
        cols += [k for k in r if k not in cols]
    cells = [[str(r.get(c, "")) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    # shrink the widest column until the table fits
    while sum(widths) + 2 * (len(widths) - 1) > width and max(widths) > 8:
        widths[widths.index(max(widths))] -= 1

    def fmt(vals):
        parts = []
        for v, w in zip(vals, widths):
            parts.append(v if len(v) <= w else v[: w - 1] + "~")
        return "  ".join(p.ljust(w) for p, w in zip(parts, widths)).rstrip()

    out.write(fmt(cols) + "\n")
    out.write("  ".join("-" * w for w in widths) + "\n")
    for row in cells:
        out.write(fmt(row) + "\n")


def _emit_csv(rows, out) -> None:
    if not rows:
        return
    cols = list(rows[0].keys())
    for r in rows[1:]:
        cols += [k for k in r if k not in cols]
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: (json.dumps(v) if isinstance(v, (list, dict)) else v) for k, v in r.items()})
    out.write(buf.getvalue())


def _json_default(o):
    if isinstance(o, Fraction):
        return str(o)
    if isinstance(o, (set, frozenset, tuple)):
        return list(o)
    raise TypeError(f"cannot serialize {type(o).__name__}")


def output_document(command: str, payload) -> dict:
    return {"schema_version": reg.SCHEMA_VERSION, "command": command, "payload": payload,
            "registry_hash": reg.registry_hash()}


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, default=_json_default)


# ---------------------------------------------------------------------------
# parser


def _common(defaults: bool) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    p.add_argument("--format", choices=("json", "table", "csv"), default=d("json"))
    p.add_argument("--seed", type=int, default=d(0), help="seed for randomized trials")
    p.add_argument("--jobs", type=int, default=d(1), help="parallel workers for independent suites")
    p.add_argument("--trials", type=int, default=d(100), help="random trials per identity suite")
    p.add_argument("--registry", default=d(None), help="registry JSON document replacing the embedded one")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common(False)
    parser = argparse.ArgumentParser(prog="artifact", parents=[_common(True)],
                                     description="Exact checks for exceptional Jordan algebras, "
                                                 "real forms and their parabolic subalgebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    def group(name, help_):
        g = sub.add_parser(name, help=help_).add_subparsers(dest="action", required=True)
        return g

    def leaf(parent, name, fn, help_=None):
        p = parent.add_parser(name, parents=[common], help=help_)
        p.set_defaults(fn=fn)
        return p

    g = group("algebra", "composition algebras")
    leaf(g, "table", cmd_algebra_table, "multiplication table").add_argument("--label", required=True)
    leaf(g, "check", cmd_algebra_check, "norm and alternativity trials")

    g = group("jordan", "Jordan algebras")
    leaf(g, "check", cmd_jordan_check, "randomized identity suite").add_argument("--algebra", required=True)
    p = leaf(g, "norm", cmd_jordan_norm, "norm of an element")
    p.add_argument("--algebra", required=True)
    p.add_argument("--coords", required=True, help="comma-separated rationals")

    g = group("fts", "Freudenthal triple systems")
    leaf(g, "check", cmd_fts_check, "randomized identity suite").add_argument("--algebra", required=True)
    p = leaf(g, "quartic", cmd_fts_quartic, "quartic norm of an element")
    p.add_argument("--algebra", required=True)
    p.add_argument("--coords", required=True)

    g = group("symmetry", "symmetry algebra dimensions")
    leaf(g, "report", cmd_symmetry_report).add_argument("--algebra", required=True)
    leaf(g, "verify-table1", cmd_symmetry_verify)

    g = group("roots", "root systems")
    leaf(g, "info", cmd_roots_info).add_argument("--type", required=True)

    g = group("realform", "registered real forms")
    leaf(g, "list", cmd_realform_list)
    leaf(g, "info", cmd_realform_info).add_argument("--form", required=True)
    leaf(g, "restricted", cmd_realform_restricted).add_argument("--form", required=True)
    leaf(g, "dump-registry", cmd_dump_registry)

    g = group("parabolic", "parabolic subalgebras")
    p = leaf(g, "max", cmd_parabolic_max)
    p.add_argument("--form", required=True)
    p.add_argument("--node", type=int)
    leaf(g, "all", cmd_parabolic_all).add_argument("--form", required=True)

    g = group("related", "parabolic relatedness")
    leaf(g, "enumerate", cmd_related_enumerate).add_argument("--max", action="store_true", default=True)
    p = leaf(g, "check", cmd_related_check)
    for k in ("1", "2"):
        p.add_argument(f"--form{k}", required=True)
        p.add_argument(f"--node{k}", type=int, required=True)

    p = sub.add_parser("interpret", parents=[common], help="Jordan-algebraic roles of a label")
    p.add_argument("--label", required=True)
    p.set_defaults(fn=cmd_interpret)

    p = sub.add_parser("verify-all", parents=[common], help="run the acceptance battery")
    p.add_argument("--only", action="append", help="restrict to a suite (repeatable or comma-separated)")
    p.set_defaults(fn=cmd_verify_all)

    p = sub.add_parser("dump-registry", parents=[common], help="print the embedded registry")
    p.set_defaults(fn=cmd_dump_registry)
    return parser


def _command_name(a) -> str:
    return a.command + (f" {a.action}" if getattr(a, "action", None) else "")


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(a, "only", None):
        a.only = [s for chunk in a.only for s in chunk.split(",") if s]
    try:
        if a.registry:
            with open(a.registry) as fh:
                doc = json.load(fh)
            try:
                reg.install(doc)
            except (KeyError, TypeError, AttributeError, IndexError) as exc:
                raise UsageError(f"malformed registry document: {exc!r}") from exc
            a._registry_doc = doc
            from .verify import reset_caches
            reset_caches()
        res = a.fn(a)
    except (UsageError, ValueError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    if a.format == "json":
        out.write(dumps(output_document(_command_name(a), res.payload)) + "\n")
    elif a.format == "table":
        _emit_table(res.rows if res.rows is not None else [res.payload], out)
    else:
        _emit_csv(res.rows if res.rows is not None else [res.payload], out)
    if not res.ok:
        if res.message:
            err.write(res.message + "\n")
        return EXIT_MISMATCH
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
