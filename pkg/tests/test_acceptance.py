"""One test per acceptance criterion; each prints a PASS/FAIL line."""

import json
import os
import subprocess
import sys
import time

import pytest

from artifact import registry as reg
from artifact.identities import FTS_SUITE_ALGEBRAS, JORDAN_SUITE_ALGEBRAS, fts_suite, jordan_suite
from artifact.lie_labels import dimension, same_label
from artifact.parabolic import (all_standard_parabolics, bruhat_total, grading_profile, long_short_counts,
                                maximal_parabolic)
from artifact.real_form import get_form, registry, restricted_root_system
from artifact.relations import UNVERIFIED, enumerate_max_related, verify_table_b
from artifact.symmetry_dims import TABLE1_ROWS, symmetry_report, table1_labels
from artifact.verify import reset_caches

NPM = {"E6(6)": 36, "E6(2)": 36, "E6(-14)": 30, "E6(-26)": 24, "E7(7)": 63, "E7(-5)": 60, "E7(-25)": 51,
       "E8(8)": 120, "E8(-24)": 108, "F4(4)": 24, "F4(-20)": 15, "G2(2)": 6}


def timed(fn):
    reset_caches()
    t = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t


def test_c1_maximal_parabolic_table(criterion):
    def run():
        bad, n = [], 0
        for form, rows in reg.MAX_PARABOLICS.items():
            for j, (levi, dn) in rows.items():
                n += 1
                p = maximal_parabolic(form, j)
                if not (same_label(p.levi_label, levi) and p.dim_n_theta == dn):
                    bad.append((form, j, p.levi_label, p.dim_n_theta))
        return bad, n
    (bad, n), dt = timed(run)
    nodes = sum(f.split_rank for f in registry())
    ok = not bad and n == nodes == 47 and dt < 5
    criterion(1, ok, f"{n} maximal parabolics over 12 forms match, {len(bad)} mismatches, {dt:.2f}s")
    assert ok, bad


def test_c2_bruhat(criterion):
    def run():
        cases = bad = 0
        for f in registry():
            for p in all_standard_parabolics(f):
                cases += 1
                bad += bruhat_total(p) != f.dim_g
        return cases, bad
    (cases, bad), dt = timed(run)
    ok = cases == 534 and bad == 0 and dt < 5
    criterion(2, ok, f"{cases} subsets, {bad} failures, {dt:.2f}s")
    assert ok


def test_c3_multiplicity_sums(criterion):
    bad = []
    for f in registry():
        npm = sum(restricted_root_system(f).positive.values())
        m0 = f.dim_g - 2 * npm - f.split_rank
        if npm != NPM[f.label] or npm != f.dim_Npm or m0 != dimension(f.m0_label):
            bad.append((f.label, npm, m0))
    e6 = get_form("E6(-26)")
    f4 = get_form("F4(-20)")
    ok = (not bad and len(NPM) == 12 and dimension(e6.m0_label) == 28
          and dimension(f4.m0_label) == 21)
    criterion(3, ok, f"dim N and dim M0 for 12 forms, {len(bad)} mismatches")
    assert ok, bad


def test_c4_gradings(criterion):
    def run():
        bad, n = [], 0
        for form, rows in reg.GRADINGS.items():
            dim_g = reg.form_data(form)["dim_g"]
            for j, grades in rows.items():
                n += 1
                g = grading_profile(form, j)
                dn = maximal_parabolic(form, j).dim_n_theta
                ok = (g.depth == max(grades) and g.positive == grades
                      and all(g.grades[-k] == v for k, v in g.positive.items())
                      and sum(g.grades.values()) == dim_g and sum(g.positive.values()) == dn)
                if not ok:
                    bad.append((form, j))
        return bad, n
    (bad, n), dt = timed(run)
    e8 = grading_profile("E8(8)", 3)
    e62 = grading_profile("E6(2)", 1)
    spot = (e8.depth == 6 and sum(e8.positive.values()) == 106
            and e62.positive == {1: 16, 2: 8} and e62.grades[-2] == 8 and e62.grades[-1] == 16)
    ok = not bad and spot and dt < 10
    criterion(4, ok, f"{n} grading profiles, {len(bad)} mismatches, spot checks {spot}, {dt:.2f}s")
    assert ok, bad


def test_c5_long_short(criterion):
    want = {("F4(4)", 1): (11, 9), ("F4(4)", 2): (9, 11), ("F4(4)", 3): (9, 6), ("F4(4)", 4): (6, 9),
            ("G2(2)", 1): (2, 3), ("G2(2)", 2): (3, 2)}
    got = {k: long_short_counts(*k) for k in want}
    ok = got == want
    criterion(5, ok, f"long/short counts {sorted(got.values())}")
    assert ok, got


def _row_ok(row_id):
    return next(r for r in enumerate_max_related().table_rows if r["row"] == row_id)


def test_c6_table_a(criterion):
    sweep, dt = timed(enumerate_max_related)
    rows = sweep.table_rows
    others = [r for r in rows if r["row"] != 9]
    three = {c.row_id: len({f for f, _, _ in c.members}) for c in sweep.classes}
    ok = (len(rows) == 14 and all(r["ok"] for r in others) and not sweep.beyond_paper
          and all(three[i] == 3 for i in (1, 6, 7)) and dt < 5)
    criterion(6, ok, f"rows 1-8 and 10-14 reproduced, {len(sweep.beyond_paper)} beyond-table classes, "
                     f"{dt:.2f}s")
    assert ok


@pytest.mark.xfail(strict=True, reason="E7(-25) has no maximal parabolic with Levi su*(6)+su(2)")
def test_c6_table_a_row_9(criterion):
    row = _row_ok(9)
    cls = next(c for c in enumerate_max_related().classes if c.row_id == 9)
    ok = row["ok"] and len({f for f, _, _ in cls.members}) == 3
    criterion(6, ok, f"row 9 three-member class: computed {[(f, j) for f, j, _ in cls.members]}")
    assert ok, row["problems"]


def test_c7_jordan_suites(criterion):
    t = time.perf_counter()
    results = [jordan_suite(d, trials=100, seed=0) for d in JORDAN_SUITE_ALGEBRAS]
    dt = time.perf_counter() - t
    failed = [r["algebra"] for r in results if not r["ok"]]
    ok = not failed and all(r["trials"] >= 100 for r in results) and dt < 60
    criterion(7, ok, f"{len(results)} Jordan algebras x 100 trials, failing {failed}, {dt:.1f}s")
    assert ok


def test_c8_fts_suites(criterion):
    t = time.perf_counter()
    results = [fts_suite(d, trials=100, seed=0) for d in FTS_SUITE_ALGEBRAS]
    dt = time.perf_counter() - t
    failed = [r["algebra"] for r in results if not r["ok"]]
    ok = not failed and all(r["nondegenerate"] for r in results) and dt < 60
    criterion(8, ok, f"{len(results)} triple systems x 100 trials, failing {failed}, {dt:.1f}s")
    assert ok


def test_c9_table1(criterion):
    named = {("J3(O)", "aut"): 52, ("J3(O)", "str0"): 78, ("J3(O)", "conf"): 133, ("J3(O)", "qconf"): 248,
             ("J3(Hs)", "aut"): 21, ("J3(Hs)", "str0"): 35, ("J3(Hs)", "conf"): 66,
             ("J3(Hs)", "qconf"): 133, ("R", "qconf"): 14}
    rows = list(TABLE1_ROWS) + ["R+G(8,0)"]
    bad, slow, got = [], [], {}
    for name in rows:
        t = time.perf_counter()
        rep = symmetry_report(name)
        dt = time.perf_counter() - t
        if dt >= (120 if name == "J3(O)" else 30):
            slow.append((name, round(dt, 1)))
        dims = {"aut": rep.dim_der, "str0": rep.dim_str0, "conf": rep.dim_conf, "qconf": rep.dim_qconf}
        for role, lab in table1_labels(name).items():
            got[name, role] = dims[role]
            if dims[role] != dimension(lab):
                bad.append((name, role, dims[role], lab))
    ok = not bad and not slow and all(got[k] == v for k, v in named.items())
    criterion(9, ok, f"{len(rows)} rows x 4 roles, {len(bad)} mismatches, slow {slow}")
    assert ok, bad


def test_c10_lorentzian(criterion):
    d = symmetry_report("J12(O)").dim_der
    ok = d == 52
    criterion(10, ok, f"dim der(J12(O)) = {d}")
    assert ok


def test_c11_table_b(criterion):
    tb = verify_table_b()
    unverified = {e for _, e in tb["unverified"]}
    computable = [r for r in tb["roles"] if r["status"] != UNVERIFIED]
    ok = tb["ok"] and not tb["mismatches"] and len(tb["unverified"]) <= 3 and unverified <= {"conf(M21(O))"}
    criterion(11, ok, f"{len(computable)} computable roles verified, "
                      f"{len(tb['unverified'])} unverified cells {sorted(unverified)}")
    assert ok, tb["mismatches"]


def test_c12_determinism(criterion):
    outs = []
    for hashseed in ("1", "2"):
        env = dict(os.environ, PYTHONHASHSEED=hashseed)
        proc = subprocess.run([sys.executable, "-m", "artifact", "verify-all", "--seed", "42"],
                              capture_output=True, env=env)
        outs.append((proc.returncode, proc.stdout))
    same = outs[0] == outs[1]
    report = json.loads(outs[0][1])
    ok = same and outs[0][0] == 0 and report["payload"]["seed"] == 42
    criterion(12, ok, f"two verify-all --seed 42 runs byte-identical: {same}, exit {outs[0][0]}")
    assert ok
