"""The acceptance battery behind ``verify-all``.

Every suite returns a list of check records ``{name, status, detail}`` with
status ``pass``, ``fail`` or ``xfail``. An ``xfail`` is a registered known
discrepancy between the computation and the published tables; it does not
fail the run, but an ``xfail`` that starts passing does.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import registry as reg
from .composition_algebra import LABELS, build_algebra
from .identities import FTS_SUITE_ALGEBRAS, JORDAN_SUITE_ALGEBRAS, fts_suite, jordan_suite, suite_rng
from .lie_labels import dimension, same_label

SUITES = ("algebra", "jordan", "fts", "symmetry", "roots", "realform", "parabolic", "related")

# Table A rows that cannot be reproduced by the relatedness criterion
KNOWN_DISCREPANCIES = {
    "related:table_a_row_9": "E7(-25) has no maximal parabolic with Levi su*(6)+su(2)",
}


def _rec(name, ok, detail=None):
    status = "pass" if ok else "fail"
    if name in KNOWN_DISCREPANCIES:
        status = "xfail" if not ok else "fail"
        detail = {"reason": KNOWN_DISCREPANCIES[name], "detail": detail,
                  **({"unexpected_pass": True} if ok else {})}
    return {"name": name, "status": status, "detail": detail}


def reset_caches() -> None:
    from . import parabolic, real_form, relations
    parabolic._standard.cache_clear()
    real_form.satake_lookup.cache_clear()
    real_form._restricted_cached.cache_clear()
    relations.enumerate_max_related.cache_clear()


# ---------------------------------------------------------------------------


def suite_algebra(seed: int, trials: int) -> list:
    out = []
    for label in LABELS:
        A = build_algebra(label)
        rng = suite_rng(seed, "algebra:" + label)
        bad = {"norm_multiplicative": 0, "alternative": 0, "conjugation_antihom": 0}
        for _ in range(trials):
            a, b = ([Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(A.dim)] for _ in range(2))
            ab = A.mul(a, b)
            if A.norm_form(ab) != A.norm_form(a) * A.norm_form(b):
                bad["norm_multiplicative"] += 1
            if A.mul(A.mul(a, a), b) != A.mul(a, ab) or A.mul(b, A.mul(a, a)) != A.mul(A.mul(b, a), a):
                bad["alternative"] += 1
            if A.conj(ab) != A.mul(A.conj(b), A.conj(a)):
                bad["conjugation_antihom"] += 1
        out.append(_rec(f"algebra:{label}", not any(bad.values()), {"dim": A.dim, "failures": bad}))
    return out


def suite_jordan(seed: int, trials: int) -> list:
    out = []
    for d in JORDAN_SUITE_ALGEBRAS:
        r = jordan_suite(d, trials, seed)
        out.append(_rec(f"jordan:{d}", r["ok"], r))
    return out


def suite_fts(seed: int, trials: int) -> list:
    out = []
    for d in FTS_SUITE_ALGEBRAS:
        r = fts_suite(d, trials, seed)
        out.append(_rec(f"fts:{d}", r["ok"], r))
    return out


def suite_symmetry(seed: int, trials: int) -> list:
    from .symmetry_dims import derivation_algebra, verify_embedding_dims, verify_table1
    out = []
    t1 = verify_table1()
    for row in t1["rows"]:
        out.append(_rec(f"symmetry:table1:{row['algebra']}:{row['role']}", row["ok"], row))
    for c in verify_embedding_dims()["checks"]:
        out.append(_rec(f"symmetry:{c['check']}", c["ok"], c["detail"]))
    for d in ("J12(O)", "J12(Os)"):
        n = len(derivation_algebra(d))
        out.append(_rec(f"symmetry:der({d})=52", n == 52, {"dim_der": n}))
    return out


def suite_roots(seed: int, trials: int) -> list:
    from .root_system import build
    # type -> (number of roots, dimension of the Lie algebra)
    expected = {"E6": (72, 78), "E7": (126, 133), "E8": (240, 248), "F4": (48, 52), "G2": (12, 14),
                "A5": (30, 35), "D5": (40, 45), "B3": (18, 21), "C3": (18, 21)}
    out = []
    for t, (n, d) in expected.items():
        rs = build(t)
        out.append(_rec(f"roots:{t}", len(rs.coeffs) == n and rs.dim == d,
                        {"roots": len(rs.coeffs), "dim": rs.dim}))
    return out


def suite_realform(seed: int, trials: int) -> list:
    from .real_form import RegistryMismatch, registry, restricted_root_system
    from .root_system import build
    out = []
    for f in registry():
        name = f"realform:{f.label}"
        try:
            rr = restricted_root_system(f)
        except RegistryMismatch as exc:
            out.append(_rec(name + ":restricted", False, {"form": f.label, "error": str(exc)}))
            continue
        npm = sum(rr.positive.values())
        out.append(_rec(name + ":multiplicity_sum", npm == f.dim_Npm,
                        {"form": f.label, "computed": npm, "registered": f.dim_Npm}))
        m0 = f.dim_g - 2 * npm - f.split_rank
        out.append(_rec(name + ":dim_m0", m0 == dimension(f.m0_label),
                        {"form": f.label, "computed": m0, "label": f.m0_label}))
        out.append(_rec(name + ":K+P", f.dim_K + f.dim_P == f.dim_g and f.dim_K == dimension(f.K),
                        {"form": f.label, "dim_K": f.dim_K, "dim_P": f.dim_P, "dim_g": f.dim_g}))
        out.append(_rec(name + ":dim_g", build(f.satake.type).dim == f.dim_g, {"form": f.label}))
        neg = all(rr.restricted_roots.get(tuple(-x for x in k)) == m for k, m in rr.restricted_roots.items())
        out.append(_rec(name + ":negation", neg, {"form": f.label}))
        if not f.satake.black and not f.satake.arrows:
            split = set(rr.restricted_roots.values()) == {1} and f.dim_Npm == f.dim_K
            out.append(_rec(name + ":split", split, {"form": f.label}))
    return out


def suite_parabolic(seed: int, trials: int) -> list:
    from .parabolic import (all_standard_parabolics, bruhat_total, grading_profile, long_short_counts,
                            maximal_parabolic)
    from .real_form import registry
    out = []
    for form, rows in reg.MAX_PARABOLICS.items():
        for j, (levi, dn) in rows.items():
            p = maximal_parabolic(form, j)
            ok = same_label(p.levi_label, levi) and p.dim_n_theta == dn
            out.append(_rec(f"parabolic:max:{form}:{j}", ok,
                            {"form": form, "node": j, "computed": [p.levi_label, p.dim_n_theta],
                             "registered": [levi, dn]}))
    for form, rows in reg.GRADINGS.items():
        for j, grades in rows.items():
            g = grading_profile(form, j)
            p = maximal_parabolic(form, j)
            dim_g = reg.form_data(form)["dim_g"]
            ok = (g.positive == grades
                  and all(g.grades.get(-k) == v for k, v in g.grades.items())
                  and sum(g.grades.values()) == dim_g
                  and sum(g.positive.values()) == p.dim_n_theta)
            out.append(_rec(f"parabolic:grading:{form}:{j}", ok,
                            {"form": form, "node": j, "depth": g.depth,
                             "computed": {str(k): v for k, v in g.positive.items()},
                             "registered": {str(k): v for k, v in grades.items()}}))
    for (form, j), v in reg.LONG_SHORT.items():
        got = long_short_counts(form, j)
        out.append(_rec(f"parabolic:long_short:{form}:{j}", tuple(got) == tuple(v),
                        {"form": form, "computed": list(got), "registered": list(v)}))
    for f in registry():
        ps = all_standard_parabolics(f)
        bad = [list(p.theta) for p in ps if bruhat_total(p) != f.dim_g]
        out.append(_rec(f"parabolic:bruhat:{f.label}", not bad and len(ps) == 2 ** f.split_rank,
                        {"form": f.label, "subsets": len(ps), "failures": bad}))
    return out


def suite_related(seed: int, trials: int) -> list:
    from .relations import enumerate_max_related, relatedness_is_equivalence, verify_table_b
    out = []
    sweep = enumerate_max_related()
    for row in sweep.table_rows:
        out.append(_rec(f"related:table_a_row_{row['row']}", row["ok"], row))
    out.append(_rec("related:beyond_paper_empty", not sweep.beyond_paper,
                    [c.as_dict() for c in sweep.beyond_paper]))
    out.append(_rec("related:equivalence", relatedness_is_equivalence()))
    tb = verify_table_b()
    out.append(_rec("related:table_b_roles", tb["ok"],
                    {"mismatches": tb["mismatches"], "unverified": tb["unverified"],
                     "checked": len(tb["roles"])}))
    return out


_RUNNERS = {
    "algebra": suite_algebra, "jordan": suite_jordan, "fts": suite_fts, "symmetry": suite_symmetry,
    "roots": suite_roots, "realform": suite_realform, "parabolic": suite_parabolic,
    "related": suite_related,
}


def _run_one(args):
    name, seed, trials, registry_doc = args
    if registry_doc is not None:
        reg.install(registry_doc)
        reset_caches()
    try:
        return name, _RUNNERS[name](seed, trials)
    except Exception as exc:  # a crash inside a suite is a failure of that suite
        return name, [{"name": f"{name}:crashed", "status": "fail",
                       "detail": {"error": f"{type(exc).__name__}: {exc}"}}]


def verify_all(seed: int = 0, only=None, jobs: int = 1, trials: int = 100, registry_doc=None) -> dict:
    names = list(SUITES) if not only else [s for s in SUITES if s in set(only)]
    unknown = set(only or ()) - set(SUITES)
    if unknown:
        raise ValueError(f"unknown suite(s): {sorted(unknown)}")
    tasks = [(n, seed, trials, registry_doc) for n in names]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = dict(ex.map(_run_one, tasks))
    else:
        results = dict(map(_run_one, tasks))
    suites = {}
    for n in names:
        checks = results[n]
        counts = {s: sum(1 for c in checks if c["status"] == s) for s in ("pass", "fail", "xfail")}
        suites[n] = {"counts": counts, "checks": checks,
                     "failures": [c["name"] for c in checks if c["status"] == "fail"]}
    failed = [c for n in names for c in suites[n]["failures"]]
    return {"seed": seed, "trials": trials, "suites": suites, "failed": failed, "ok": not failed}


def failing_forms(report: dict) -> list:
    forms = set()
    for s in report["suites"].values():
        for c in s["checks"]:
            if c["status"] == "fail" and isinstance(c.get("detail"), dict) and "form" in c["detail"]:
                forms.add(c["detail"]["form"])
    return sorted(forms)
