"""Exact rational linear algebra.

Scalars are ``fractions.Fraction``. Dense matrices go through Bareiss
fraction-free elimination; the large sparse constraint systems used for
derivation algebras go through :class:`SparseEchelon`, which keeps integer
rows with their content divided out.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Rational = Fraction


class InconsistentSystem(ValueError):
    """Raised by :func:`solve` when the right-hand side is not in the image."""


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, str or Fraction")
    return Fraction(x)


@dataclass(frozen=True)
class RatMatrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entries length must equal rows * cols")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "RatMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        flat = tuple(as_rational(x) for r in rows for x in r)
        return cls(len(rows), cols, flat)

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls.from_rows([[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def to_rows(self) -> list:
        return [self.row(i) for i in range(self.rows)]

    def apply(self, v: Sequence) -> list:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        out = []
        for i in range(self.rows):
            base = i * self.cols
            s = Fraction(0)
            for j, x in enumerate(v):
                if x:
                    a = self.entries[base + j]
                    if a:
                        s += a * x
            out.append(s)
        return out

    def matmul(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        cols_b = [[other[k, j] for k in range(other.rows)] for j in range(other.cols)]
        out = []
        for i in range(self.rows):
            r = self.row(i)
            out.append([sum((a * b for a, b in zip(r, c) if a and b), Fraction(0)) for c in cols_b])
        return RatMatrix.from_rows(out, other.cols)

    def transpose(self) -> "RatMatrix":
        return RatMatrix.from_rows([[self[i, j] for i in range(self.rows)] for j in range(self.cols)], self.rows)


def _integer_row(row: Sequence[Fraction]) -> list:
    """Scale a rational row to a primitive integer row (same span)."""
    den = 1
    for x in row:
        if x:
            den = lcm(den, x.denominator)
    ints = [int(x * den) for x in row]
    g = 0
    for x in ints:
        if x:
            g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def _bareiss(rows: list, ncols: int):
    """In-place Bareiss elimination on integer rows.

    Pivot choice is deterministic: columns scanned left to right, the first
    row at or below the current one with a nonzero entry is swapped up.
    Returns the list of pivot columns; ``rows`` ends in echelon form.
    """
    nrows = len(rows)
    prev = 1
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        for i in range(r + 1, nrows):
            a = rows[i][c]
            ri = rows[i]
            rr = rows[r]
            for k in range(c, ncols):
                ri[k] = (piv * ri[k] - a * rr[k]) // prev
        prev = piv
        pivots.append(c)
        r += 1
    return pivots


def _echelon(m: RatMatrix):
    rows = [_integer_row(m.row(i)) for i in range(m.rows)]
    pivots = _bareiss(rows, m.cols)
    return rows, pivots


def rank(m: RatMatrix) -> int:
    return len(_echelon(m)[1])


def _back_substitute(rows, pivots, ncols, rhs_col=None, free_values=None):
    """Solve the echelon system for the pivot variables."""
    x = [Fraction(0)] * ncols
    if free_values:
        for c, v in free_values.items():
            x[c] = Fraction(v)
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        row = rows[r]
        s = Fraction(row[rhs_col]) if rhs_col is not None else Fraction(0)
        for k in range(c + 1, ncols):
            if row[k] and x[k]:
                s -= row[k] * x[k]
        x[c] = s / row[c]
    return x


def nullspace(m: RatMatrix) -> list:
    """Basis of the exact kernel, one vector per free column (in column order)."""
    rows, pivots = _echelon(m)
    pivset = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivset:
            continue
        basis.append(_back_substitute(rows, pivots, m.cols, free_values={f: 1}))
    return basis


def solve(m: RatMatrix, rhs: Sequence) -> list:
    """One exact solution of m x = rhs (free variables set to zero)."""
    if len(rhs) != m.rows:
        raise ValueError("rhs length must equal number of rows")
    aug = [m.row(i) + [as_rational(rhs[i])] for i in range(m.rows)]
    rows = [_integer_row(r) for r in aug]
    pivots = _bareiss(rows, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        raise InconsistentSystem("system has no solution")
    return _back_substitute(rows, pivots, m.cols, rhs_col=m.cols)[: m.cols]


def inverse(m: RatMatrix) -> RatMatrix:
    if m.rows != m.cols:
        raise ValueError("square matrix required")
    n = m.rows
    if rank(m) != n:
        raise InconsistentSystem("matrix is singular")
    cols = [solve(m, [Fraction(int(i == j)) for i in range(n)]) for j in range(n)]
    return RatMatrix.from_rows([[cols[j][i] for j in range(n)] for i in range(n)], n)


def span_dimension(vectors: Iterable[Sequence]) -> int:
    """Rank of the stacked vectors."""
    ech = SparseEchelon()
    for v in vectors:
        ech.add({i: as_rational(x) for i, x in enumerate(v) if x})
    return ech.rank


class SparseEchelon:
    """Incremental fraction-free elimination on sparse rows.

    Rows are dicts ``column -> int``. Each stored row is primitive (content 1)
    with a positive leading entry; new rows are reduced against stored pivots
    in increasing pivot order using integer combinations only.
    """

    def __init__(self):
        self.pivots = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @staticmethod
    def _primitive(row: dict) -> dict:
        den = 1
        for v in row.values():
            if isinstance(v, Fraction) and v.denominator != 1:
                den = lcm(den, v.denominator)
        ints = {k: int(v * den) for k, v in row.items() if v}
        g = 0
        for v in ints.values():
            g = gcd(g, v)
            if g == 1:
                break
        if g > 1:
            ints = {k: v // g for k, v in ints.items()}
        return ints

    def reduce(self, row: dict) -> dict:
        row = self._primitive(row)
        while row:
            c = min(row)
            prow = self.pivots.get(c)
            if prow is None:
                return row
            a = row[c]
            p = prow[c]
            g = gcd(a, p)
            fa, fp = p // g, a // g
            new = {k: v * fa for k, v in row.items()}
            for k, v in prow.items():
                nv = new.get(k, 0) - fp * v
                if nv:
                    new[k] = nv
                else:
                    new.pop(k, None)
            row = self._primitive(new) if new else new
        return row

    def add(self, row: dict) -> bool:
        """Insert a row; returns True if it increased the rank."""
        red = self.reduce(row)
        if not red:
            return False
        c = min(red)
        if red[c] < 0:
            red = {k: -v for k, v in red.items()}
        self.pivots[c] = red
        return True

    def kernel(self, ncols: int) -> list:
        """Kernel basis of the stored rows, one vector per free column."""
        order = sorted(self.pivots)
        # back-eliminate to reduced form so each pivot row involves only free columns
        reduced = {}
        for c in reversed(order):
            row = dict(self.pivots[c])
            for k in sorted(k for k in row if k != c):
                if k in reduced and k in row:
                    q = reduced[k]
                    a, p = row[k], q[k]
                    g = gcd(a, p)
                    fa, fp = p // g, a // g
                    new = {kk: v * fa for kk, v in row.items()}
                    for kk, v in q.items():
                        nv = new.get(kk, 0) - fp * v
                        if nv:
                            new[kk] = nv
                        else:
                            new.pop(kk, None)
                    row = self._primitive(new)
            if row[c] < 0:
                row = {k: -v for k, v in row.items()}
            reduced[c] = row
        free = [f for f in range(ncols) if f not in self.pivots]
        basis = []
        for f in free:
            v = [Fraction(0)] * ncols
            v[f] = Fraction(1)
            for c, row in reduced.items():
                a = row.get(f)
                if a:
                    v[c] = Fraction(-a, row[c])
            basis.append(v)
        return basis


def matrix_vector(rows: Sequence[Sequence], v: Sequence) -> list:
    return [sum((a * b for a, b in zip(r, v) if a and b), Fraction(0)) for r in rows]
