"""Randomized exact identity suites for the Jordan algebras and their triple systems."""

from __future__ import annotations

import random
import zlib
from fractions import Fraction

from .fts import EFTSPoint, build_fts
from .jordan_core import build_jordan, circ, cubic_norm, matrix_circ, random_element, sharp, trace_form

JORDAN_SUITE_ALGEBRAS = ("R", "R+G(1,2)", "R+G(3,1)", "R+G(4,4)", "R+G(8,0)",
                         "J3(R)", "J3(C)", "J3(Cs)", "J3(H)", "J3(Hs)", "J3(O)", "J3(Os)")
FTS_SUITE_ALGEBRAS = ("J3(R)", "J3(C)", "J3(Os)")


def suite_rng(seed: int, name: str) -> random.Random:
    return random.Random(seed * 1_000_003 + zlib.crc32(name.encode()))


def _vadd(*vs):
    return [sum(t, Fraction(0)) for t in zip(*vs)]


def _vsub(a, b):
    return [x - y for x, y in zip(a, b)]


def _scale(s, v):
    return [s * x for x in v]


class _Ops:
    def __init__(self, J):
        self.J = J
        self.c = J.circ_raw

    def U(self, x, y):
        c = self.c
        return _vsub(_scale(2, c(x, c(x, y))), c(c(x, x), y))

    def brace(self, x, y, z):
        """{x, y, z} = U_{x+z} y - U_x y - U_z y."""
        return _vsub(_vsub(self.U(_vadd(x, z), y), self.U(x, y)), self.U(z, y))


def jordan_suite(desc: str, trials: int = 100, seed: int = 0, matrix_checks: int = 5) -> dict:
    J = build_jordan(desc)
    rng = suite_rng(seed, "jordan:" + desc)
    ops = _Ops(J)
    c = J.circ_raw
    cubic = J.degree == 3
    one = list(J.identity.coords)
    fails = {k: 0 for k in ("commutativity", "jordan_identity", "unit", "adjoint_identity",
                            "trace_associativity", "fundamental_formula", "qja_unit",
                            "qja_commutation", "matrix_product")}
    if not cubic:
        for k in ("adjoint_identity", "trace_associativity"):
            fails.pop(k)
    has_matrix = J.descriptor.kind == "Hermitian3"
    if not has_matrix:
        fails.pop("matrix_product")
    for t in range(trials):
        x, y, z = (list(random_element(J, rng).coords) for _ in range(3))
        xy = c(x, y)
        if xy != c(y, x):
            fails["commutativity"] += 1
        xx = c(x, x)
        if c(xy, xx) != c(x, c(y, xx)):
            fails["jordan_identity"] += 1
        if c(one, x) != x:
            fails["unit"] += 1
        if cubic:
            xs = list(sharp(J, x).coords)
            if list(sharp(J, xs).coords) != _scale(cubic_norm(J, x), x):
                fails["adjoint_identity"] += 1
            if trace_form(J, xy, z) != trace_form(J, x, c(y, z)):
                fails["trace_associativity"] += 1
        # quadratic Jordan axioms, applied to a test vector
        if ops.U(one, z) != z:
            fails["qja_unit"] += 1
        uxy = ops.U(x, y)
        if ops.U(uxy, z) != ops.U(x, ops.U(y, ops.U(x, z))):
            fails["fundamental_formula"] += 1
        if ops.brace(x, y, ops.U(x, z)) != ops.U(x, ops.brace(y, x, z)):
            fails["qja_commutation"] += 1
        if has_matrix and t < matrix_checks:
            if list(matrix_circ(J, x, y).coords) != xy:
                fails["matrix_product"] += 1
    return {"algebra": desc, "trials": trials, "failures": fails, "ok": not any(fails.values())}


def fts_suite(desc: str, trials: int = 100, seed: int = 0, oracle_checks: int = 3) -> dict:
    F = build_fts(desc)
    rng = suite_rng(seed, "fts:" + desc)
    fails = {k: 0 for k in ("antisymmetry", "quartic_homogeneity", "diagonal_linearization",
                            "T_contraction", "T_symmetry", "efts_zero_distance", "linearization_oracle")}
    nondegenerate = F.gram().rows == F.dim and _rank(F) == F.dim
    for t in range(trials):
        x, y, w = (F.random_element(rng) for _ in range(3))
        if F.sympl(x, y) != -F.sympl(y, x):
            fails["antisymmetry"] += 1
        s = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
        d = F.quartic(x)
        if F.quartic(x.scale(s)) != s ** 4 * d:
            fails["quartic_homogeneity"] += 1
        if F.quartic_linearization(x, x, x, x) != d:
            fails["diagonal_linearization"] += 1
        if F.sympl(F.triple_T(x, x, x), x) != 2 * d:
            fails["T_contraction"] += 1
        T = F.triple_T(x, y, w).vector()
        if T != F.triple_T(y, x, w).vector() or T != F.triple_T(w, y, x).vector():
            fails["T_symmetry"] += 1
        phi = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        p = EFTSPoint(x, phi)
        if F.quartic_distance(p, F.zero_point()) != F.efts_norm(p):
            fails["efts_zero_distance"] += 1
        if t < oracle_checks:
            z = F.random_element(rng)
            if F.quartic_linearization(x, y, w, z) != F.quartic_linearization_oracle(x, y, w, z):
                fails["linearization_oracle"] += 1
    return {"algebra": desc, "trials": trials, "nondegenerate": nondegenerate, "failures": fails,
            "ok": nondegenerate and not any(fails.values())}


def _rank(F) -> int:
    from .exact_arith import rank
    return rank(F.gram())
