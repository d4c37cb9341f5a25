"""Cubic Jordan algebras built from their norms (Freudenthal-Springer-Tits).

Every cubic kind supplies a norm evaluator and a base point. From these the
module derives the full polarization, traces, the trace form, the sharp map
and finally the Jordan product structure constants. Hermitian kinds also carry
a matrix realization so the derived product can be compared with (XY+YX)/2.

Two rank-2 kinds (``QuadraticSpin`` for Gamma_{m,n} and ``Hermitian2``) and
``Lorentzian12`` are product-only: their circ tables come from the quadratic
norm or from the matrix product, and the sharp/trace apparatus is not defined.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from itertools import permutations
from typing import Sequence

from .composition_algebra import build_algebra, LABELS
from .exact_arith import RatMatrix, inverse, as_rational

KINDS = ("RealField", "SpinFactor", "Hermitian3", "Lorentzian12", "QuadraticSpin", "Hermitian2")
CUBIC_KINDS = ("RealField", "SpinFactor", "Hermitian3")


class UnsupportedDescriptor(ValueError):
    pass


class NotCubic(ValueError):
    """Raised when a cubic-only operation is requested on a product-only algebra."""


@dataclass(frozen=True)
class JordanDescriptor:
    kind: str
    m: int = 0
    n: int = 0
    label: str = ""

    def __post_init__(self):
        if self.kind not in KINDS:
            raise UnsupportedDescriptor(f"unknown kind {self.kind!r}")
        if self.kind in ("SpinFactor", "QuadraticSpin"):
            if self.m < 0 or self.n < 0 or self.m + self.n < 1:
                raise UnsupportedDescriptor("spin factor needs m+n >= 1")
        if self.kind in ("Hermitian3", "Lorentzian12", "Hermitian2") and self.label not in LABELS:
            raise UnsupportedDescriptor(f"unknown composition algebra {self.label!r}")

    @property
    def dim(self) -> int:
        q = build_algebra(self.label).dim if self.label else 0
        return {
            "RealField": 1,
            "SpinFactor": 1 + self.m + self.n,
            "Hermitian3": 3 + 3 * q,
            "Lorentzian12": 3 + 3 * q,
            "QuadraticSpin": self.m + self.n,
            "Hermitian2": 2 + q,
        }[self.kind]

    @property
    def name(self) -> str:
        if self.kind == "RealField":
            return "R"
        if self.kind == "SpinFactor":
            return f"R+G({self.m},{self.n})"
        if self.kind == "QuadraticSpin":
            return f"G({self.m},{self.n})"
        if self.kind == "Hermitian3":
            return f"J3({self.label})"
        if self.kind == "Hermitian2":
            return f"J2({self.label})"
        return f"J12({self.label})"

    def __str__(self):
        return self.name


_DESC_PATTERNS = [
    (re.compile(r"^R$"), lambda g: JordanDescriptor("RealField")),
    (re.compile(r"^R\+G\((\d+),(\d+)\)$"), lambda g: JordanDescriptor("SpinFactor", int(g[0]), int(g[1]))),
    (re.compile(r"^G\((\d+),(\d+)\)$"), lambda g: JordanDescriptor("QuadraticSpin", int(g[0]), int(g[1]))),
    (re.compile(r"^J3\((\w+)\)$"), lambda g: JordanDescriptor("Hermitian3", label=g[0])),
    (re.compile(r"^J2\((\w+)\)$"), lambda g: JordanDescriptor("Hermitian2", label=g[0])),
    (re.compile(r"^J12\((\w+)\)$"), lambda g: JordanDescriptor("Lorentzian12", label=g[0])),
]


def parse_descriptor(text: str) -> JordanDescriptor:
    """Parse ``R``, ``R+G(m,n)``, ``G(m,n)``, ``J3(O)``, ``J2(Os)`` or ``J12(O)``."""
    t = text.replace(" ", "")
    for pat, make in _DESC_PATTERNS:
        mt = pat.match(t)
        if mt:
            return make(mt.groups())
    raise UnsupportedDescriptor(f"cannot parse algebra descriptor {text!r}")


# ---------------------------------------------------------------------------
# Hermitian 3x3 matrices over a composition algebra
#
# coordinates: alpha1, alpha2, alpha3, then x1 (slot (2,3)), x2 (slot (3,1)),
# x3 (slot (1,2)), each a block of q composition-algebra coordinates.
# For the eta-twisted (Lorentzian) case, eta = diag(-1, 1, 1), the mirrored
# entry picks up eta_i eta_j.

_SLOTS = {0: (1, 2), 1: (2, 0), 2: (0, 1)}


def _hermitian_matrix(coords, alg, eta=(1, 1, 1)):
    q = alg.dim
    mat = [[None] * 3 for _ in range(3)]
    for i in range(3):
        mat[i][i] = [coords[i]] + [Fraction(0)] * (q - 1)
    for s, (i, j) in _SLOTS.items():
        x = list(coords[3 + s * q: 3 + (s + 1) * q])
        mat[i][j] = x
        sign = eta[i] * eta[j]
        mat[j][i] = [sign * c for c in alg.conj(x)]
    return mat


def _matrix_product(a, b, alg):
    q = alg.dim
    out = [[None] * 3 for _ in range(3)]
    for i in range(3):
        for k in range(3):
            acc = [Fraction(0)] * q
            for j in range(3):
                p = alg.mul(a[i][j], b[j][k])
                acc = [u + v for u, v in zip(acc, p)]
            out[i][k] = acc
    return out


def _matrix_coords(mat, alg, eta=(1, 1, 1)):
    q = alg.dim
    coords = []
    for i in range(3):
        d = mat[i][i]
        if any(d[1:]):
            raise AssertionError("diagonal entry is not real")
        coords.append(d[0])
    for s in range(3):
        i, j = _SLOTS[s]
        coords.extend(mat[i][j])
    check = _hermitian_matrix(coords, alg, eta)
    if check != mat:
        raise AssertionError("matrix is not (eta-)Hermitian")
    return coords


def _hermitian_norm(coords, alg) -> Fraction:
    q = alg.dim
    a1, a2, a3 = coords[0], coords[1], coords[2]
    x1 = coords[3:3 + q]
    x2 = coords[3 + q:3 + 2 * q]
    x3 = coords[3 + 2 * q:3 + 3 * q]
    re3 = alg.mul(alg.mul(x1, x2), x3)[0]
    return (a1 * a2 * a3 - a1 * alg.norm_form(x1) - a2 * alg.norm_form(x2)
            - a3 * alg.norm_form(x3) + 2 * re3)


def _spin_eta(m: int, n: int) -> list:
    return [1] * m + [-1] * n


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class JordanElement:
    algebra: "CubicJordanAlgebra" = field(repr=False, compare=False)
    coords: tuple

    def __add__(self, other):
        return JordanElement(self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return JordanElement(self.algebra, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def scale(self, s) -> "JordanElement":
        s = as_rational(s)
        return JordanElement(self.algebra, tuple(s * a for a in self.coords))

    def __eq__(self, other):
        return isinstance(other, JordanElement) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)


class CubicJordanAlgebra:
    """A Jordan algebra together with the norm-derived structure.

    ``circ_table[i][j]`` is a dict ``k -> coefficient`` for e_i o e_j.
    """

    def __init__(self, desc: JordanDescriptor):
        self.descriptor = desc
        self.dim = desc.dim
        self.degree = 3 if desc.kind in CUBIC_KINDS else 2 if desc.kind in ("QuadraticSpin", "Hermitian2") else None
        self.comp = build_algebra(desc.label) if desc.label else None
        self._identity = self._base_point()
        if self.degree == 3:
            self._build_cubic()
        elif self.degree == 2:
            self._build_quadratic()
        else:
            self._build_lorentzian()

    # -- elements ----------------------------------------------------------
    @property
    def identity(self) -> JordanElement:
        return JordanElement(self, self._identity)

    def element(self, coords: Sequence) -> JordanElement:
        coords = tuple(as_rational(c) for c in coords)
        if len(coords) != self.dim:
            raise ValueError(f"{self.descriptor} has dimension {self.dim}")
        return JordanElement(self, coords)

    def basis(self, i: int) -> JordanElement:
        return JordanElement(self, tuple(Fraction(int(k == i)) for k in range(self.dim)))

    def zero(self) -> JordanElement:
        return JordanElement(self, (Fraction(0),) * self.dim)

    def diag(self, a, b, c) -> JordanElement:
        if self.descriptor.kind not in ("Hermitian3", "Lorentzian12"):
            raise ValueError("diag() needs a 3x3 matrix algebra")
        v = [Fraction(0)] * self.dim
        v[0], v[1], v[2] = as_rational(a), as_rational(b), as_rational(c)
        return JordanElement(self, tuple(v))

    def _base_point(self) -> tuple:
        d = self.descriptor
        v = [Fraction(0)] * self.dim
        if d.kind == "RealField":
            v[0] = Fraction(1)
        elif d.kind == "SpinFactor":
            if d.m < 1:
                raise UnsupportedDescriptor("R+G(m,n) needs m >= 1 for a base point")
            v[0] = Fraction(1)
            v[1] = Fraction(1)
        elif d.kind == "QuadraticSpin":
            if d.m < 1:
                raise UnsupportedDescriptor("G(m,n) needs m >= 1 for a base point")
            v[0] = Fraction(1)
        elif d.kind == "Hermitian2":
            v[0] = v[1] = Fraction(1)
        else:
            v[0] = v[1] = v[2] = Fraction(1)
        return tuple(v)

    # -- norms ---------------------------------------------------------------
    def norm_value(self, x: Sequence) -> Fraction:
        d = self.descriptor
        if d.kind == "RealField":
            return x[0] ** 3
        if d.kind == "SpinFactor":
            eta = _spin_eta(d.m, d.n)
            return x[0] * sum((e * g * g for e, g in zip(eta, x[1:])), Fraction(0))
        if d.kind == "Hermitian3":
            return _hermitian_norm(x, self.comp)
        if d.kind == "Lorentzian12":
            q = self.comp.dim
            y = list(x)
            y[0] = -y[0]
            for k in range(3 + 2 * q, 3 + 3 * q):
                y[k] = -y[k]
            return -_hermitian_norm(y, self.comp)
        if d.kind == "QuadraticSpin":
            eta = _spin_eta(d.m, d.n)
            return sum((e * g * g for e, g in zip(eta, x)), Fraction(0))
        # Hermitian2: determinant a b - n(x)
        return x[0] * x[1] - self.comp.norm_form(x[2:])

    # -- construction --------------------------------------------------------
    def _build_cubic(self):
        n = self.dim
        N = self.norm_value
        zero = [Fraction(0)] * n

        def e(i):
            v = list(zero)
            v[i] = Fraction(1)
            return v

        def unit(*idx):
            v = [0] * n
            for i in idx:
                v[i] += 1
            return v

        # full linearization on basis triples via the inclusion-exclusion formula
        tri = {}
        for i in range(n):
            for j in range(i, n):
                for k in range(j, n):
                    val = Fraction(N(unit(i, j, k)) - N(unit(i, j)) - N(unit(j, k)) - N(unit(i, k))
                                   + N(unit(i)) + N(unit(j)) + N(unit(k))) / 6
                    if val:
                        tri[(i, j, k)] = val
        full = {}
        for key, val in tri.items():
            for p in set(permutations(key)):
                full[p] = val
        self._tri = full
        by_last = {}
        for (i, j, k), v in full.items():
            by_last.setdefault(k, []).append((i, j, v))
        self._tri_by_last = by_last

        c = list(self._identity)
        self._trace_vec = [3 * self.polar(c, c, e(k)) for k in range(n)]
        gram = [[self._trace_form_raw(e(a), e(b)) for b in range(n)] for a in range(n)]
        self.trace_gram = RatMatrix.from_rows(gram, n)
        ginv = inverse(self.trace_gram)
        self._ginv = ginv
        # sharp(X)_m = sum_ij B[m][(i,j)] x_i x_j
        sharp_b = [dict() for _ in range(n)]
        for (i, j, l), v in full.items():
            for m in range(n):
                g = ginv[m, l]
                if g:
                    sharp_b[m][(i, j)] = sharp_b[m].get((i, j), Fraction(0)) + 3 * g * v
        self._sharp_b = [{k: v for k, v in d.items() if v} for d in sharp_b]
        self.circ_table = [[self._circ_from_norm(e(i), e(j)) for j in range(n)] for i in range(n)]

    def _build_quadratic(self):
        n = self.dim
        c = list(self._identity)

        def q2(x, y):
            return (self.norm_value([a + b for a, b in zip(x, y)]) - self.norm_value(x) - self.norm_value(y)) / 2

        def e(i):
            return [Fraction(int(k == i)) for k in range(n)]

        self._q2 = q2
        table = []
        for i in range(n):
            row = []
            for j in range(n):
                x, y = e(i), e(j)
                v = [q2(x, c) * b + q2(y, c) * a - q2(x, y) * cc for a, b, cc in zip(x, y, c)]
                row.append({k: val for k, val in enumerate(v) if val})
            table.append(row)
        self.circ_table = table

    def _build_lorentzian(self):
        self.circ_table = matrix_circ_table(self)

    # -- cubic apparatus -------------------------------------------------------
    def _require_cubic(self):
        if self.degree != 3:
            raise NotCubic(f"{self.descriptor} carries no cubic norm structure")

    def polar(self, x, y, z) -> Fraction:
        (xi, dx), (yi, dy), (zi, dz) = _int_vec(x), _int_vec(y), _int_vec(z)
        tab, den = self._int_tri()
        s = 0
        for k, lst in tab.items():
            zk = zi[k]
            if not zk:
                continue
            for i, j, v in lst:
                a = xi[i]
                if a:
                    b = yi[j]
                    if b:
                        s += v * a * b * zk
        return Fraction(s, den * dx * dy * dz)

    def _int_tri(self):
        if not hasattr(self, "_tri_int"):
            den = _common_den(v for lst in self._tri_by_last.values() for _, _, v in lst)
            self._tri_int = ({k: [(i, j, int(v * den)) for i, j, v in lst]
                              for k, lst in self._tri_by_last.items()}, den)
        return self._tri_int

    def _trace_form_raw(self, x, y) -> Fraction:
        c = list(self._identity)
        trx = 3 * self.polar(c, c, x)
        tr_y = 3 * self.polar(c, c, y)
        return trx * tr_y - 6 * self.polar(x, y, c)

    def _int_sharp(self):
        if not hasattr(self, "_sharp_int"):
            den = _common_den(v for d in self._sharp_b for v in d.values())
            self._sharp_int = ([[(i, j, int(v * den)) for (i, j), v in d.items()] for d in self._sharp_b], den)
        return self._sharp_int

    def _bilinear_sharp(self, x, y, factor) -> list:
        (xi, dx), (yi, dy) = _int_vec(x), _int_vec(y)
        tab, den = self._int_sharp()
        out = []
        for lst in tab:
            s = 0
            for i, j, v in lst:
                a = xi[i]
                if a:
                    b = yi[j]
                    if b:
                        s += v * a * b
            out.append(Fraction(factor * s, den * dx * dy))
        return out

    def _sharp_raw(self, x) -> list:
        return self._bilinear_sharp(x, x, 1)

    def _cross_raw(self, x, y) -> list:
        return self._bilinear_sharp(x, y, 2)

    def _circ_from_norm(self, x, y) -> dict:
        c = self._identity
        cr = self._cross_raw(x, y)
        trx = sum((t * a for t, a in zip(self._trace_vec, x)), Fraction(0))
        tr_y = sum((t * a for t, a in zip(self._trace_vec, y)), Fraction(0))
        sxy = 6 * self.polar(x, y, c)
        v = [(cr[k] + trx * y[k] + tr_y * x[k] - sxy * c[k]) / 2 for k in range(self.dim)]
        return {k: val for k, val in enumerate(v) if val}

    # -- product ---------------------------------------------------------------
    def circ_raw(self, x, y) -> list:
        if not hasattr(self, "_circ_int"):
            den = _common_den(v for row in self.circ_table for e in row for v in e.values())
            self._circ_int = ([[[(k, int(v * den)) for k, v in e.items()] for e in row]
                               for row in self.circ_table], den)
        tab, den = self._circ_int
        (xi, dx), (yi, dy) = _int_vec(x), _int_vec(y)
        acc = [0] * self.dim
        for i, a in enumerate(xi):
            if not a:
                continue
            row = tab[i]
            for j, b in enumerate(yi):
                if b:
                    ab = a * b
                    for k, v in row[j]:
                        acc[k] += ab * v
        d = den * dx * dy
        return [Fraction(a, d) for a in acc]


def _common_den(values) -> int:
    den = 1
    for v in values:
        den = lcm(den, Fraction(v).denominator)
    return den


def _int_vec(v):
    """Integer numerators over a common denominator."""
    den = 1
    for a in v:
        if isinstance(a, Fraction):
            den = lcm(den, a.denominator)
    if den == 1:
        return [int(a) for a in v], 1
    return [int(a * den) for a in v], den


_ALG_CACHE: dict = {}


def build_jordan(desc) -> CubicJordanAlgebra:
    if isinstance(desc, str):
        desc = parse_descriptor(desc)
    if desc not in _ALG_CACHE:
        _ALG_CACHE[desc] = CubicJordanAlgebra(desc)
    return _ALG_CACHE[desc]


def _coords(J: CubicJordanAlgebra, X) -> list:
    if isinstance(X, JordanElement):
        return list(X.coords)
    v = [as_rational(a) for a in X]
    if len(v) != J.dim:
        raise ValueError("coordinate length mismatch")
    return v


def _elt(J, v) -> JordanElement:
    return JordanElement(J, tuple(v))


def cubic_norm(J: CubicJordanAlgebra, X) -> Fraction:
    return J.norm_value(_coords(J, X))


def cubic_polarization(J: CubicJordanAlgebra, X, Y, Z) -> Fraction:
    J._require_cubic()
    return J.polar(_coords(J, X), _coords(J, Y), _coords(J, Z))


def polarization_oracle(J: CubicJordanAlgebra, X, Y, Z) -> Fraction:
    """N(X,Y,Z) straight from the 6N(X,Y,Z) inclusion-exclusion formula."""
    x, y, z = _coords(J, X), _coords(J, Y), _coords(J, Z)
    N = J.norm_value

    def s(*vs):
        return [sum(t, Fraction(0)) for t in zip(*vs)]

    return (N(s(x, y, z)) - N(s(x, y)) - N(s(y, z)) - N(s(x, z)) + N(x) + N(y) + N(z)) / 6


def trace(J, X) -> Fraction:
    J._require_cubic()
    c = list(J._identity)
    return 3 * J.polar(c, c, _coords(J, X))


def quad_S(J, X) -> Fraction:
    J._require_cubic()
    x = _coords(J, X)
    return 3 * J.polar(x, x, list(J._identity))


def bilin_S(J, X, Y) -> Fraction:
    J._require_cubic()
    return 6 * J.polar(_coords(J, X), _coords(J, Y), list(J._identity))


def trace_form(J, X, Y) -> Fraction:
    J._require_cubic()
    return J._trace_form_raw(_coords(J, X), _coords(J, Y))


def sharp(J, X) -> JordanElement:
    J._require_cubic()
    return _elt(J, J._sharp_raw(_coords(J, X)))


def cross(J, X, Y) -> JordanElement:
    J._require_cubic()
    return _elt(J, J._cross_raw(_coords(J, X), _coords(J, Y)))


def circ(J, X, Y) -> JordanElement:
    return _elt(J, J.circ_raw(_coords(J, X), _coords(J, Y)))


def triple(J, X, Y, Z) -> JordanElement:
    x, y, z = _coords(J, X), _coords(J, Y), _coords(J, Z)
    c = J.circ_raw
    a = c(c(x, y), z)
    b = c(x, c(y, z))
    d = c(c(x, z), y)
    return _elt(J, [p + q - r for p, q, r in zip(a, b, d)])


def u_op(J, X, Y) -> JordanElement:
    x, y = _coords(J, X), _coords(J, Y)
    c = J.circ_raw
    a = c(x, c(x, y))
    b = c(c(x, x), y)
    return _elt(J, [2 * p - q for p, q in zip(a, b)])


def v_op(J, X, Y, Z) -> JordanElement:
    x, y, z = _coords(J, X), _coords(J, Y), _coords(J, Z)
    xz = [a + b for a, b in zip(x, z)]
    a = u_op(J, xz, y).coords
    b = u_op(J, x, y).coords
    d = u_op(J, z, y).coords
    return _elt(J, [p - q - r for p, q, r in zip(a, b, d)])


def u_matrix(J, X) -> list:
    """Matrix of U_X; column k is U_X e_k."""
    x = _coords(J, X)
    cols = [u_op(J, x, J.basis(k)).coords for k in range(J.dim)]
    return [[cols[k][i] for k in range(J.dim)] for i in range(J.dim)]


def left_mult_matrix(J, X) -> list:
    x = _coords(J, X)
    cols = [J.circ_raw(x, list(J.basis(k).coords)) for k in range(J.dim)]
    return [[cols[k][i] for k in range(J.dim)] for i in range(J.dim)]


def matrix_circ_table(J: CubicJordanAlgebra) -> list:
    """Structure constants of (XY+YX)/2 from the 3x3 matrix realization."""
    d = J.descriptor
    if d.kind not in ("Hermitian3", "Lorentzian12"):
        raise ValueError("matrix realization exists only for 3x3 kinds")
    eta = (-1, 1, 1) if d.kind == "Lorentzian12" else (1, 1, 1)
    alg = J.comp
    mats = []
    for i in range(J.dim):
        v = [Fraction(int(k == i)) for k in range(J.dim)]
        mats.append(_hermitian_matrix(v, alg, eta))
    table = []
    for i in range(J.dim):
        row = []
        for j in range(J.dim):
            ab = _matrix_product(mats[i], mats[j], alg)
            ba = _matrix_product(mats[j], mats[i], alg)
            s = [[[(u + w) / 2 for u, w in zip(ab[r][t], ba[r][t])] for t in range(3)] for r in range(3)]
            v = _matrix_coords(s, alg, eta)
            row.append({k: val for k, val in enumerate(v) if val})
        table.append(row)
    return table


def matrix_circ(J: CubicJordanAlgebra, X, Y) -> JordanElement:
    """(XY+YX)/2 computed with explicit 3x3 matrices over the composition algebra."""
    d = J.descriptor
    eta = (-1, 1, 1) if d.kind == "Lorentzian12" else (1, 1, 1)
    alg = J.comp
    a = _hermitian_matrix(_coords(J, X), alg, eta)
    b = _hermitian_matrix(_coords(J, Y), alg, eta)
    ab = _matrix_product(a, b, alg)
    ba = _matrix_product(b, a, alg)
    s = [[[(u + w) / 2 for u, w in zip(ab[r][t], ba[r][t])] for t in range(3)] for r in range(3)]
    return _elt(J, _matrix_coords(s, alg, eta))


def random_element(J: CubicJordanAlgebra, rng, spread: int = 5) -> JordanElement:
    """Random element with small rational coordinates."""
    return _elt(J, [Fraction(rng.randint(-spread, spread), rng.randint(1, 3)) for _ in range(J.dim)])
