"""Root systems of types A-G with exact ambient coordinates.

Exceptional E-types use the node numbering of the Satake diagrams in the
tables: a chain 1..r-1 with the extra node r attached to node 3. The map to
Bourbaki numbering is ``PAPER_TO_BOURBAKI``. F4 follows Bourbaki (alpha_1,
alpha_2 long); G2 has alpha_1 long and alpha_2 short.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

F = Fraction
H = Fraction(1, 2)

PAPER_TO_BOURBAKI = {
    "E6": (1, 3, 4, 5, 6, 2),
    "E7": (1, 3, 4, 5, 6, 7, 2),
    "E8": (1, 3, 4, 5, 6, 7, 8, 2),
}


class UnsupportedType(ValueError):
    pass


def _unit(n, i, s=1):
    v = [F(0)] * n
    v[i] = F(s)
    return v


def _diff(n, i, j):
    v = [F(0)] * n
    v[i] += 1
    v[j] -= 1
    return v


def _bourbaki_e8():
    e = lambda i: _unit(8, i - 1)
    a1 = [H, -H, -H, -H, -H, -H, -H, H]
    a2 = [x + y for x, y in zip(e(1), e(2))]
    rest = [_diff(8, i, i - 1) for i in range(1, 7)]  # e2-e1, ..., e7-e6
    return [a1, a2] + rest


def _simple_roots(t: str, n: int) -> list:
    if t == "A":
        return [_diff(n + 1, i, i + 1) for i in range(n)]
    if t == "B":
        return [_diff(n, i, i + 1) for i in range(n - 1)] + [_unit(n, n - 1)]
    if t == "C":
        return [_diff(n, i, i + 1) for i in range(n - 1)] + [_unit(n, n - 1, 2)]
    if t == "D":
        last = _unit(n, n - 2)
        last[n - 1] = F(1)
        return [_diff(n, i, i + 1) for i in range(n - 1)] + [last]
    if t == "E":
        bour = _bourbaki_e8()[:n]
        return [bour[b - 1] for b in PAPER_TO_BOURBAKI[f"E{n}"]]
    if t == "F":
        return [_diff(4, 1, 2), _diff(4, 2, 3), _unit(4, 3), [H, -H, -H, -H]]
    if t == "G":
        return [[F(-2), F(1), F(1)], [F(1), F(-1), F(0)]]
    raise UnsupportedType(t)


def _dot(u, v):
    return sum((a * b for a, b in zip(u, v)), F(0))


def parse_type(label: str):
    m = re.match(r"^([A-G])(\d+)$", label)
    if not m:
        raise UnsupportedType(f"bad type label {label!r}")
    t, n = m.group(1), int(m.group(2))
    ok = {
        "A": n >= 1, "B": n >= 2, "C": n >= 3, "D": n >= 4,
        "E": n in (6, 7, 8), "F": n == 4, "G": n == 2,
    }[t]
    if not ok:
        raise UnsupportedType(f"unsupported type {label!r}")
    return t, n


@dataclass(frozen=True)
class RootSystem:
    type: str
    rank: int
    simple_roots: tuple
    gram: tuple
    cartan: tuple
    coeffs: tuple  # every root as integer coefficients over the simple roots

    @property
    def all_roots(self) -> list:
        dim = len(self.simple_roots[0])
        out = []
        for c in self.coeffs:
            v = [F(0)] * dim
            for k, a in enumerate(c):
                if a:
                    for t in range(dim):
                        v[t] += a * self.simple_roots[k][t]
            out.append(tuple(v))
        return out

    @property
    def positive(self) -> list:
        return [c for c in self.coeffs if any(x > 0 for x in c)]

    @property
    def dim(self) -> int:
        return self.rank + len(self.coeffs)

    def inner(self, c1, c2) -> Fraction:
        g = self.gram
        s = F(0)
        for i, a in enumerate(c1):
            if a:
                for j, b in enumerate(c2):
                    if b:
                        s += a * b * g[i][j]
        return s

    def length2(self, i: int) -> Fraction:
        return self.gram[i][i]

    def is_long(self, i: int) -> bool:
        return self.gram[i][i] == max(self.gram[k][k] for k in range(self.rank))


@lru_cache(maxsize=None)
def build(label: str) -> RootSystem:
    t, n = parse_type(label)
    simple = _simple_roots(t, n)
    gram = tuple(tuple(_dot(a, b) for b in simple) for a in simple)
    cartan = []
    for i in range(n):
        row = []
        for j in range(n):
            v = 2 * gram[i][j] / gram[j][j]
            if v.denominator != 1:
                raise AssertionError("non-integral Cartan entry")
            row.append(int(v))
        cartan.append(tuple(row))
    cartan = tuple(cartan)
    roots = set()
    frontier = [tuple(int(i == k) for k in range(n)) for i in range(n)]
    roots.update(frontier)
    while frontier:
        nxt = []
        for b in frontier:
            for i in range(n):
                pair = sum(b[j] * cartan[j][i] for j in range(n))
                if pair:
                    r = list(b)
                    r[i] -= pair
                    r = tuple(r)
                    if r not in roots:
                        roots.add(r)
                        nxt.append(r)
        frontier = nxt
    coeffs = tuple(sorted(roots, key=lambda c: (-sum(c), tuple(-x for x in c))))
    return RootSystem(label, n, tuple(tuple(s) for s in simple), gram, cartan, coeffs)


def grade_vector(rs: RootSystem, j: int) -> dict:
    """Root coefficients -> grade n_j for the deleted node j (1-based)."""
    return {c: c[j - 1] for c in rs.coeffs}


def grade_histogram(rs: RootSystem, nodes: Iterable[int]) -> dict:
    """Number of roots at each grade, where the grade sums the coefficients on ``nodes``."""
    idx = [j - 1 for j in nodes]
    hist = {}
    for c in rs.coeffs:
        g = sum(c[i] for i in idx)
        hist[g] = hist.get(g, 0) + 1
    return hist


# ---------------------------------------------------------------------------
# Dynkin classification of subdiagrams


@dataclass(frozen=True)
class Component:
    type: str  # e.g. "D5"
    nodes: tuple  # diagram nodes (1-based, ambient numbering) in standard label order


def _components(cartan, nodes):
    nodes = sorted(nodes)
    seen, comps = set(), []
    for s in nodes:
        if s in seen:
            continue
        stack, comp = [s], []
        seen.add(s)
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in nodes:
                if v not in seen and cartan[u - 1][v - 1] != 0:
                    seen.add(v)
                    stack.append(v)
        comps.append(sorted(comp))
    return comps


def _path_from(start, adj, comp):
    order, prev, cur = [start], None, start
    while True:
        nxt = [v for v in adj[cur] if v != prev]
        if not nxt:
            return order
        prev, cur = cur, nxt[0]
        order.append(cur)


def classify_component(cartan, gram, comp) -> Component:
    comp = sorted(comp)
    k = len(comp)
    adj = {u: [v for v in comp if v != u and cartan[u - 1][v - 1] != 0] for u in comp}
    if k == 1:
        return Component("A1", tuple(comp))
    bonds = {}
    for u in comp:
        for v in adj[u]:
            bonds[(u, v)] = cartan[u - 1][v - 1] * cartan[v - 1][u - 1]
    length = {u: gram[u - 1][u - 1] for u in comp}
    maxb = max(bonds.values())
    ends = [u for u in comp if len(adj[u]) == 1]
    if maxb == 3:
        long_, short = sorted(comp, key=lambda u: -length[u])
        return Component("G2", (long_, short))
    if maxb == 2:
        if max(len(a) for a in adj.values()) > 2:
            raise ValueError("branched diagram with a double bond")
        longest = max(length.values())
        longs = [u for u in comp if length[u] == longest]
        shorts = [u for u in comp if length[u] != longest]
        if k == 2:
            return Component("B2", (longs[0], shorts[0]))
        if k == 4 and len(longs) == 2:
            start = [u for u in ends if length[u] == longest][0]
            return Component("F4", tuple(_path_from(start, adj, comp)))
        if len(shorts) == 1:
            start = [u for u in ends if u != shorts[0]][0]
            return Component(f"B{k}", tuple(_path_from(start, adj, comp)))
        if len(longs) == 1:
            start = [u for u in ends if u != longs[0]][0]
            return Component(f"C{k}", tuple(_path_from(start, adj, comp)))
        raise ValueError("unrecognized doubly-laced diagram")
    branch = [u for u in comp if len(adj[u]) == 3]
    if not branch:
        return Component(f"A{k}", tuple(_path_from(min(ends), adj, comp)))
    if len(branch) > 1 or max(len(a) for a in adj.values()) > 3:
        raise ValueError("not a Dynkin diagram")
    b = branch[0]
    arms = []
    for v in sorted(adj[b]):
        arm, prev, cur = [v], b, v
        while True:
            nxt = [w for w in adj[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            arm.append(cur)
        arms.append(arm)
    arms.sort(key=len)
    lens = tuple(len(a) for a in arms)
    if lens[0] == 1 and lens[1] == 1:
        order = list(reversed(arms[2])) + [b] + arms[0] + arms[1]
        return Component(f"D{k}", tuple(order))
    if lens in ((1, 2, 2), (1, 2, 3), (1, 2, 4)):
        order = list(reversed(arms[1])) + [b] + arms[2] + arms[0]
        return Component(f"E{k}", tuple(order))
    raise ValueError(f"not a Dynkin diagram (arms {lens})")


def classify_nodes(rs: RootSystem, nodes) -> list:
    """Components of the subdiagram on ``nodes`` with standard labellings."""
    return [classify_component(rs.cartan, rs.gram, c) for c in _components(rs.cartan, nodes)]


def classify_subsystem(rs: RootSystem, simple_subset) -> list:
    """Sorted multiset of Dynkin types of the subdiagram, e.g. ['A4', 'A1']."""
    from .lie_labels import _type_key
    return sorted((c.type for c in classify_nodes(rs, simple_subset)), key=_type_key)
