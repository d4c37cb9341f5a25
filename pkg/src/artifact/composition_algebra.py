"""Composition algebras R, C, H, O and their split forms by Cayley-Dickson doubling.

Doubling rule on pairs: (a, b)(c, d) = (ac + g * conj(d) b, d a + b conj(c)).
Division labels use g = -1 at every step; split labels switch the last step
to g = +1. Basis order is the doubling order, so in H we get e1 e2 = e3.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact_arith import as_rational

LABELS = ("R", "C", "Cs", "H", "Hs", "O", "Os")

_GAMMAS = {
    "R": (),
    "C": (-1,),
    "Cs": (1,),
    "H": (-1, -1),
    "Hs": (-1, 1),
    "O": (-1, -1, -1),
    "Os": (-1, -1, 1),
}


class AlgebraMismatch(ValueError):
    pass


def _cd_conj(x: tuple) -> tuple:
    return (x[0],) + tuple(-c for c in x[1:])


def _cd_mult(x: tuple, y: tuple, gammas: tuple) -> tuple:
    if not gammas:
        return (x[0] * y[0],)
    h = len(x) // 2
    a, b = x[:h], x[h:]
    c, d = y[:h], y[h:]
    g = gammas[-1]
    rest = gammas[:-1]
    ac = _cd_mult(a, c, rest)
    dbb = _cd_mult(_cd_conj(d), b, rest)
    da = _cd_mult(d, a, rest)
    bcc = _cd_mult(b, _cd_conj(c), rest)
    first = tuple(p + g * q for p, q in zip(ac, dbb))
    second = tuple(p + q for p, q in zip(da, bcc))
    return first + second


@dataclass(frozen=True)
class CompositionAlgebra:
    label: str
    dim: int
    mult_table: tuple  # mult_table[i][j] = (k, sign): e_i e_j = sign * e_k
    conj_signs: tuple

    @property
    def split(self) -> bool:
        return self.label.endswith("s")

    def unit(self, i: int) -> "CAElement":
        return CAElement(self.label, tuple(Fraction(int(k == i)) for k in range(self.dim)))

    def element(self, coords: Sequence) -> "CAElement":
        coords = tuple(as_rational(c) for c in coords)
        if len(coords) != self.dim:
            raise ValueError(f"{self.label} elements have {self.dim} coordinates")
        return CAElement(self.label, coords)

    def zero(self) -> "CAElement":
        return CAElement(self.label, (Fraction(0),) * self.dim)

    def mul(self, x: Sequence, y: Sequence) -> list:
        """Product of raw coordinate vectors."""
        out = [Fraction(0)] * self.dim
        for i, a in enumerate(x):
            if not a:
                continue
            row = self.mult_table[i]
            for j, b in enumerate(y):
                if b:
                    k, s = row[j]
                    out[k] += s * a * b
        return out

    def conj(self, x: Sequence) -> list:
        return [s * a for s, a in zip(self.conj_signs, x)]

    def norm_form(self, x: Sequence) -> Fraction:
        # n(x) = x conj(x) is real and diagonal in this basis
        return sum((self.norm_signs[i] * a * a for i, a in enumerate(x) if a), Fraction(0))

    @property
    def norm_signs(self) -> tuple:
        return tuple(-self.mult_table[i][i][1] if i else 1 for i in range(self.dim))

    def signature(self) -> tuple:
        pos = sum(1 for s in self.norm_signs if s > 0)
        return (pos, self.dim - pos)


@dataclass(frozen=True)
class CAElement:
    algebra: str
    coords: tuple


_CACHE: dict = {}


def build_algebra(label: str) -> CompositionAlgebra:
    if label not in _GAMMAS:
        raise ValueError(f"unsupported composition algebra label {label!r}")
    if label in _CACHE:
        return _CACHE[label]
    gammas = _GAMMAS[label]
    q = 2 ** len(gammas)
    basis = [tuple(int(k == i) for k in range(q)) for i in range(q)]
    table = []
    for i in range(q):
        row = []
        for j in range(q):
            p = _cd_mult(basis[i], basis[j], gammas)
            nz = [(k, v) for k, v in enumerate(p) if v]
            if len(nz) != 1 or abs(nz[0][1]) != 1:
                raise AssertionError("Cayley-Dickson table is not monomial")
            row.append(nz[0])
        table.append(tuple(row))
    conj_signs = tuple(1 if i == 0 else -1 for i in range(q))
    alg = CompositionAlgebra(label, q, tuple(table), conj_signs)
    _CACHE[label] = alg
    return alg


def _same(a: CAElement, b: CAElement):
    if a.algebra != b.algebra:
        raise AlgebraMismatch(f"{a.algebra} vs {b.algebra}")


def multiply(a: CAElement, b: CAElement) -> CAElement:
    _same(a, b)
    alg = build_algebra(a.algebra)
    return CAElement(a.algebra, tuple(alg.mul(a.coords, b.coords)))


def add(a: CAElement, b: CAElement) -> CAElement:
    _same(a, b)
    return CAElement(a.algebra, tuple(x + y for x, y in zip(a.coords, b.coords)))


def conjugate(a: CAElement) -> CAElement:
    return CAElement(a.algebra, tuple(build_algebra(a.algebra).conj(a.coords)))


def real_part(a: CAElement) -> Fraction:
    return a.coords[0]


def norm(a: CAElement) -> Fraction:
    return real_part(multiply(a, conjugate(a)))


def table_json(label: str) -> dict:
    alg = build_algebra(label)
    return {
        "label": label,
        "dim": alg.dim,
        "signature": list(alg.signature()),
        "table": [[[k, s] for k, s in row] for row in alg.mult_table],
    }
