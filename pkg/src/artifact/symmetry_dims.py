"""Derivation, structure, conformal and quasi-conformal dimensions of Jordan algebras."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from .exact_arith import SparseEchelon, span_dimension
from .jordan_core import (CubicJordanAlgebra, JordanDescriptor, build_jordan, left_mult_matrix,
                          parse_descriptor)
from . import lie_labels


@dataclass
class SymmetryReport:
    algebra: str
    dim_J: int
    dim_der: int
    dim_str: int
    dim_str0: int
    dim_conf: int
    dim_qconf: int
    table1_labels: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "algebra": self.algebra,
            "dim_J": self.dim_J,
            "dim_der": self.dim_der,
            "dim_str": self.dim_str,
            "dim_str0": self.dim_str0,
            "dim_conf": self.dim_conf,
            "dim_qconf": self.dim_qconf,
            "table1_labels": dict(self.table1_labels),
        }


def _integer_table(J: CubicJordanAlgebra):
    """Circ structure constants scaled to integers, plus the scale."""
    den = 1
    for row in J.circ_table:
        for entry in row:
            for v in entry.values():
                den = lcm(den, v.denominator)
    return [[{k: int(v * den) for k, v in entry.items()} for entry in row] for row in J.circ_table], den


def leibniz_rows(J: CubicJordanAlgebra):
    """Sparse rows of the Leibniz system D(e_i o e_j) = D(e_i) o e_j + e_i o D(e_j).

    The unknown D[k][m] (coefficient of e_k in D(e_m)) sits in column k*n + m.
    """
    n = J.dim
    tab, _ = _integer_table(J)
    for i in range(n):
        for j in range(i, n):
            eq = {}
            # sum_m c_ij^m D[k][m]
            for m, c in tab[i][j].items():
                for k in range(n):
                    col = k * n + m
                    eq.setdefault(k, {})
                    eq[k][col] = eq[k].get(col, 0) + c
            # - sum_m D[m][i] c_mj^k  - sum_m D[m][j] c_im^k
            for m in range(n):
                for k, c in tab[m][j].items():
                    col = m * n + i
                    eq.setdefault(k, {})
                    eq[k][col] = eq[k].get(col, 0) - c
                for k, c in tab[i][m].items():
                    col = m * n + j
                    eq.setdefault(k, {})
                    eq[k][col] = eq[k].get(col, 0) - c
            for k in sorted(eq):
                row = {c: v for c, v in eq[k].items() if v}
                if row:
                    yield row


_DER_CACHE: dict = {}


def derivation_algebra(J) -> list:
    """Basis of der(J) as dim x dim matrices (lists of rows)."""
    if isinstance(J, (str, JordanDescriptor)):
        J = build_jordan(J)
    key = J.descriptor
    if key in _DER_CACHE:
        return _DER_CACHE[key]
    n = J.dim
    ech = SparseEchelon()
    for row in leibniz_rows(J):
        ech.add(row)
        if ech.rank == n * n:
            break
    basis = []
    for v in ech.kernel(n * n):
        basis.append([[v[k * n + m] for m in range(n)] for k in range(n)])
    _DER_CACHE[key] = basis
    return basis


def structure_algebra_dim(J) -> int:
    if isinstance(J, (str, JordanDescriptor)):
        J = build_jordan(J)
    vecs = []
    for i in range(J.dim):
        L = left_mult_matrix(J, J.basis(i))
        vecs.append([x for row in L for x in row])
    for D in derivation_algebra(J):
        vecs.append([x for row in D for x in row])
    return span_dimension(vecs)


def symmetry_report(desc) -> SymmetryReport:
    if isinstance(desc, str):
        desc = parse_descriptor(desc)
    J = build_jordan(desc)
    d_der = len(derivation_algebra(J))
    d_str = structure_algebra_dim(J)
    d_conf = 2 * J.dim + d_str
    d_qconf = d_conf + 1 + 2 * (2 * J.dim + 2) + 2
    return SymmetryReport(str(desc), J.dim, d_der, d_str, d_str - 1, d_conf, d_qconf,
                          table1_labels=table1_labels(desc))


# ---------------------------------------------------------------------------
# Table 1

TABLE1_ROWS = {
    "R": ("0", "0", "sl(2,R)", "G2(2)"),
    "J3(R)": ("so(3)", "sl(3,R)", "sp(3,R)", "F4(4)"),
    "J3(C)": ("su(3)", "sl(3,C)_R", "su(3,3)", "E6(2)"),
    "J3(Cs)": ("sl(3,R)", "sl(3,R)+sl(3,R)", "sl(6,R)", "E6(6)"),
    "J3(H)": ("usp(3)", "su*(6)", "so*(12)", "E7(-5)"),
    "J3(Hs)": ("sp(3,R)", "sl(6,R)", "so(6,6)", "E7(7)"),
    "J3(O)": ("F4(-52)", "E6(-26)", "E7(-25)", "E8(-24)"),
    "J3(Os)": ("F4(4)", "E6(6)", "E7(7)", "E8(8)"),
}

# spin-factor pairs that appear in the tables
SPIN_SAMPLES = [(8, 0), (4, 4), (9, 1), (5, 5), (7, 0), (4, 3), (7, 1), (5, 3), (6, 4), (8, 2),
                (1, 2), (3, 1), (7, 3), (12, 4), (2, 10), (8, 4), (5, 4), (8, 8), (11, 3), (1, 1)]


def spin_table1_labels(m: int, n: int, as_printed: bool = False) -> tuple:
    """Table 1 row R+G(m,n).

    With ``as_printed`` the labels are the table's own; otherwise the aut and
    str0 entries are the ones the cubic norm xi*eta(g,g) actually produces
    (der = so(m-1,n), str0 = so(m,n)+so(1,1)); conf and qconf agree.
    """
    conf = f"sl(2,R)+{_so(m + 1, n + 1)}"
    qconf = _so(m + 3, n + 3)
    if as_printed:
        return (f"{_so(m, 0)}+{_so(n, 0)}", _so(m, n), conf, qconf)
    return (_so(m - 1, n), f"{_so(m, n)}+so(1,1)", conf, qconf)


def _so(p: int, q: int) -> str:
    p, q = max(p, q), min(p, q)
    return f"so({p})" if q == 0 else f"so({p},{q})"


def table1_labels(desc) -> dict:
    if isinstance(desc, str):
        desc = parse_descriptor(desc)
    if desc.kind == "SpinFactor":
        labels = spin_table1_labels(desc.m, desc.n)
    else:
        labels = TABLE1_ROWS.get(str(desc))
        if labels is None:
            return {}
    return dict(zip(("aut", "str0", "conf", "qconf"), labels))


def verify_table1(spin_samples=None) -> dict:
    """Compare computed dims to Table 1 label dims for every row."""
    rows = list(TABLE1_ROWS)
    samples = SPIN_SAMPLES if spin_samples is None else spin_samples
    rows += [f"R+G({m},{n})" for m, n in samples if m >= 1]
    results, failures = [], []
    for name in rows:
        rep = symmetry_report(name)
        labels = rep.table1_labels
        computed = {"aut": rep.dim_der, "str0": rep.dim_str0, "conf": rep.dim_conf, "qconf": rep.dim_qconf}
        for role in ("aut", "str0", "conf", "qconf"):
            expected = lie_labels.dimension(labels[role])
            ok = expected == computed[role]
            results.append({"algebra": name, "role": role, "label": labels[role],
                            "expected": expected, "computed": computed[role], "ok": ok})
            if not ok:
                failures.append(results[-1])
    return {"rows": results, "failures": failures, "ok": not failures}


def verify_embedding_dims() -> dict:
    checks = []

    def check(name, ok, detail):
        checks.append({"check": name, "ok": bool(ok), "detail": detail})

    for name in list(TABLE1_ROWS):
        rep = symmetry_report(name)
        dimF = 2 * rep.dim_J + 2
        check(f"aut<=str0 {name}", rep.dim_der <= rep.dim_str0, [rep.dim_der, rep.dim_str0])
        check(f"str0+so(1,1)<=conf {name}", rep.dim_str0 + 1 <= rep.dim_conf, [rep.dim_str0 + 1, rep.dim_conf])
        check(f"conf+sl2<=qconf {name}", rep.dim_conf + 3 <= rep.dim_qconf, [rep.dim_conf + 3, rep.dim_qconf])
        check(f"qconf-conf-3=2dimF {name}", rep.dim_qconf - rep.dim_conf - 3 == 2 * dimF,
              [rep.dim_qconf - rep.dim_conf - 3, 2 * dimF])
    # J2 over A is the spin factor G(1, q+1); over A_s it is G(q/2+1, q/2+1)
    for label in ("R", "C", "H", "O", "Cs", "Hs", "Os"):
        J2 = build_jordan(f"J2({label})")
        q = J2.dim - 2
        if label.endswith("s"):
            m = n = q // 2 + 1
        else:
            m, n = 1, q + 1
        G = build_jordan(f"G({m},{n})")
        sig2 = quadratic_signature(J2)
        sigG = quadratic_signature(G)
        check(f"J2({label}) ~ G({m},{n})", J2.dim == G.dim and sig2 == sigG,
              {"dims": [J2.dim, G.dim], "signatures": [list(sig2), list(sigG)]})
    return {"checks": checks, "ok": all(c["ok"] for c in checks)}


def quadratic_signature(J: CubicJordanAlgebra) -> tuple:
    """Signature (p, q) of the quadratic norm of a rank-2 algebra, by exact congruence."""
    n = J.dim
    e = [[Fraction(int(k == i)) for k in range(n)] for i in range(n)]
    N = J.norm_value
    g = [[(N([a + b for a, b in zip(e[i], e[j])]) - N(e[i]) - N(e[j])) / 2 if i != j else N(e[i])
          for j in range(n)] for i in range(n)]
    return _signature(g)


def _signature(g) -> tuple:
    g = [list(r) for r in g]
    n = len(g)
    pos = neg = 0
    for k in range(n):
        if g[k][k] == 0:
            j = next((j for j in range(k + 1, n) if g[k][j] != 0), None)
            if j is None:
                continue
            # replace e_k by e_k + e_j (or e_k - e_j) to get a nonzero pivot
            t = 1 if g[k][k] + 2 * g[k][j] + g[j][j] != 0 else -1
            for r in range(n):
                g[r][k] += t * g[r][j]
            for c in range(n):
                g[k][c] += t * g[j][c]
        p = g[k][k]
        if p == 0:
            continue
        pos += p > 0
        neg += p < 0
        for r in range(k + 1, n):
            f = g[r][k] / p
            if f:
                for c in range(k, n):
                    g[r][c] -= f * g[k][c]
        for r in range(k + 1, n):
            g[k][r] = g[r][k] = Fraction(0)
    return (pos, neg)
