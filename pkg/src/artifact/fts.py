"""Freudenthal triple systems F(J) = R + R + J + J and their extension by one real variable.

The quartic form is linearized term by term. For fixed x, y, w the map
z -> Delta(x, y, w, z) is linear, so it is computed as a coefficient vector;
that vector gives both the symmetric four-form and the triple product T,
which is solved from {T(x,y,w), z} = 2 Delta(x,y,w,z).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .exact_arith import RatMatrix, inverse, as_rational
from .jordan_core import CubicJordanAlgebra, NotCubic, build_jordan


class AlgebraMismatch(ValueError):
    pass


@dataclass(frozen=True)
class FTSElement:
    alpha: Fraction
    beta: Fraction
    A: tuple
    B: tuple

    def vector(self) -> list:
        return [self.alpha, self.beta, *self.A, *self.B]

    def __add__(self, o):
        return from_vector([a + b for a, b in zip(self.vector(), o.vector())])

    def __sub__(self, o):
        return from_vector([a - b for a, b in zip(self.vector(), o.vector())])

    def scale(self, s):
        s = as_rational(s)
        return from_vector([s * a for a in self.vector()])


@dataclass(frozen=True)
class EFTSPoint:
    x: FTSElement
    phi: Fraction


def from_vector(v: Sequence) -> FTSElement:
    v = [as_rational(a) for a in v]
    n = (len(v) - 2) // 2
    if len(v) != 2 * n + 2:
        raise ValueError("FTS vectors have even length 2 dim J + 2")
    return FTSElement(v[0], v[1], tuple(v[2:2 + n]), tuple(v[2 + n:]))


def make(alpha, beta, A, B) -> FTSElement:
    return FTSElement(as_rational(alpha), as_rational(beta),
                      tuple(as_rational(a) for a in A), tuple(as_rational(b) for b in B))


class FTS:
    """F(J) for a cubic Jordan algebra J."""

    def __init__(self, J: CubicJordanAlgebra):
        if J.degree != 3:
            raise NotCubic(f"F(J) needs a cubic Jordan algebra, got {J.descriptor}")
        self.J = J
        self.n = J.dim
        self.dim = 2 * J.dim + 2
        self._gram = J.trace_gram.to_rows()
        self._omega_t_inv = None

    # -- helpers on J ----------------------------------------------------------
    def _check(self, *xs):
        for x in xs:
            if len(x.A) != self.n or len(x.B) != self.n:
                raise AlgebraMismatch("element does not belong to this FTS")

    def _tr(self, u, v) -> Fraction:
        s = Fraction(0)
        for i, a in enumerate(u):
            if a:
                row = self._gram[i]
                for j, b in enumerate(v):
                    if b and row[j]:
                        s += a * row[j] * b
        return s

    def _tr_vec(self, u) -> list:
        out = [Fraction(0)] * self.n
        for i, a in enumerate(u):
            if a:
                row = self._gram[i]
                for j in range(self.n):
                    if row[j]:
                        out[j] += a * row[j]
        return out

    def _pvec(self, p, q) -> list:
        """Coefficient vector of z -> N(p, q, z)."""
        out = [Fraction(0)] * self.n
        for k, lst in self.J._tri_by_last.items():
            s = Fraction(0)
            for i, j, v in lst:
                a = p[i]
                if a:
                    b = q[j]
                    if b:
                        s += v * a * b
            out[k] = s
        return out

    def _s(self, p, q) -> list:
        return [c / 2 for c in self.J._cross_raw(p, q)]

    # -- forms -----------------------------------------------------------------
    def sympl(self, x: FTSElement, y: FTSElement) -> Fraction:
        self._check(x, y)
        return x.alpha * y.beta - x.beta * y.alpha + self._tr(x.A, y.B) - self._tr(x.B, y.A)

    def kappa(self, x: FTSElement) -> Fraction:
        return (x.alpha * x.beta - self._tr(x.A, x.B)) / 2

    def quartic(self, x: FTSElement) -> Fraction:
        self._check(x)
        J = self.J
        k = self.kappa(x)
        sa = J._sharp_raw(list(x.A))
        sb = J._sharp_raw(list(x.B))
        return -4 * (x.alpha * J.norm_value(list(x.A)) + x.beta * J.norm_value(list(x.B))
                     + k * k - self._tr(sa, sb))

    def _kappa_bilinear(self, u: FTSElement, v: FTSElement) -> Fraction:
        return (u.alpha * v.beta + v.alpha * u.beta - self._tr(u.A, v.B) - self._tr(v.A, u.B)) / 4

    def _kappa_functional(self, u: FTSElement) -> list:
        n = self.n
        f = [Fraction(0)] * self.dim
        f[0] = u.beta / 4
        f[1] = u.alpha / 4
        ga = self._tr_vec(u.B)
        gb = self._tr_vec(u.A)
        for i in range(n):
            f[2 + i] = -ga[i] / 4
            f[2 + n + i] = -gb[i] / 4
        return f

    def linear_functional(self, x1: FTSElement, x2: FTSElement, x3: FTSElement) -> list:
        """Coefficient vector of z -> Delta(x1, x2, x3, z)."""
        self._check(x1, x2, x3)
        J, n = self.J, self.n
        xs = (x1, x2, x3)
        f = [Fraction(0)] * self.dim
        offA, offB = 2, 2 + n

        # t1 = 1/4 sum_i alpha_i N(A_j, A_k, A_l), t2 the same with beta, B
        t1 = [Fraction(0)] * self.dim
        t1[0] = J.polar(list(x1.A), list(x2.A), list(x3.A)) / 4
        t1[1] = J.polar(list(x1.B), list(x2.B), list(x3.B)) / 4
        for i, j, k in ((0, 1, 2), (1, 0, 2), (2, 0, 1)):
            pa = self._pvec(list(xs[j].A), list(xs[k].A))
            pb = self._pvec(list(xs[j].B), list(xs[k].B))
            for t in range(n):
                t1[offA + t] += xs[i].alpha * pa[t] / 4
                t1[offB + t] += xs[i].beta * pb[t] / 4
        # t3 = 1/3 (k12 k3z + k13 k2z + k23 k1z)
        t3 = [Fraction(0)] * self.dim
        for (i, j), k in (((0, 1), 2), ((0, 2), 1), ((1, 2), 0)):
            kij = self._kappa_bilinear(xs[i], xs[j])
            if kij:
                kf = self._kappa_functional(xs[k])
                for t in range(self.dim):
                    t3[t] += kij * kf[t] / 3
        # t4 = 1/6 sum over pairs of A-slots of Tr(s(A_i,A_j), s(B_k,B_l))
        t4 = [Fraction(0)] * self.dim
        for i, j in combinations(range(3), 2):
            (k,) = [t for t in range(3) if t not in (i, j)]
            sa = self._s(list(xs[i].A), list(xs[j].A))
            v = self._pvec(list(xs[k].B), sa)
            for t in range(n):
                t4[offB + t] += 3 * v[t] / 6
            sb = self._s(list(xs[i].B), list(xs[j].B))
            v = self._pvec(list(xs[k].A), sb)
            for t in range(n):
                t4[offA + t] += 3 * v[t] / 6
        for t in range(self.dim):
            f[t] = -4 * (t1[t] + t3[t] - t4[t])
        return f

    def quartic_linearization(self, x, y, w, z) -> Fraction:
        f = self.linear_functional(x, y, w)
        return sum((a * b for a, b in zip(f, z.vector()) if a and b), Fraction(0))

    def quartic_linearization_oracle(self, x, y, w, z) -> Fraction:
        """(1/4!) sum over subsets S of (-1)^(4-|S|) Delta(sum of S)."""
        args = (x, y, w, z)
        total = Fraction(0)
        for r in range(1, 5):
            for sub in combinations(range(4), r):
                v = [Fraction(0)] * self.dim
                for i in sub:
                    v = [a + b for a, b in zip(v, args[i].vector())]
                total += (-1) ** (4 - r) * self.quartic(from_vector(v))
        return total / 24

    def gram(self) -> RatMatrix:
        basis = [from_vector([int(i == j) for j in range(self.dim)]) for i in range(self.dim)]
        return RatMatrix.from_rows([[self.sympl(a, b) for b in basis] for a in basis], self.dim)

    def triple_T(self, x, y, w) -> FTSElement:
        if self._omega_t_inv is None:
            self._omega_t_inv = inverse(self.gram().transpose())
        f = self.linear_functional(x, y, w)
        rhs = [2 * a for a in f]
        return from_vector(self._omega_t_inv.apply(rhs))

    # -- extended system -------------------------------------------------------
    def efts_norm(self, p: EFTSPoint) -> Fraction:
        return self.quartic(p.x) - p.phi * p.phi

    def quartic_distance(self, p: EFTSPoint, q: EFTSPoint) -> Fraction:
        d = p.x - q.x
        t = p.phi - q.phi + self.sympl(p.x, q.x)
        return self.quartic(d) - t * t

    def zero_point(self) -> EFTSPoint:
        return EFTSPoint(from_vector([0] * self.dim), Fraction(0))

    def random_element(self, rng, spread: int = 4) -> FTSElement:
        return from_vector([Fraction(rng.randint(-spread, spread), rng.randint(1, 3)) for _ in range(self.dim)])


_FTS_CACHE: dict = {}


def build_fts(desc) -> FTS:
    J = build_jordan(desc)
    key = J.descriptor
    if key not in _FTS_CACHE:
        _FTS_CACHE[key] = FTS(J)
    return _FTS_CACHE[key]


def sympl(F: FTS, x, y):
    return F.sympl(x, y)


def quartic(F: FTS, x):
    return F.quartic(x)


def quartic_linearization(F: FTS, x, y, w, z):
    return F.quartic_linearization(x, y, w, z)


def triple_T(F: FTS, x, y, w):
    return F.triple_T(x, y, w)


def efts_norm(F: FTS, p):
    return F.efts_norm(p)


def quartic_distance(F: FTS, p, q):
    return F.quartic_distance(p, q)
