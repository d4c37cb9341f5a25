"""Satake data of the registered real forms and their restricted root systems.

Restriction: average a root over the diagram involution tau, then remove its
orthogonal projection onto the span of the black simple roots. The images of
the white simple roots (one per tau-orbit) form the restricted simple system;
the multiplicity of a restricted root is the number of complex roots landing
on it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from . import registry as reg
from .exact_arith import RatMatrix, solve
from .lie_labels import dimension, join
from .root_system import RootSystem, build, classify_component, classify_nodes


class RegistryMismatch(AssertionError):
    pass


class UnclassifiedSubdiagram(LookupError):
    pass


@dataclass(frozen=True)
class SatakeDiagram:
    type: str
    black: frozenset
    arrows: tuple  # pairs (i, j), i < j

    def tau(self) -> dict:
        return diagram_involution(self.type, self.arrows)

    def arrow_partner(self) -> dict:
        p = {}
        for i, j in self.arrows:
            p[i], p[j] = j, i
        return p


@dataclass(frozen=True)
class RealForm:
    label: str
    alias: str
    satake: SatakeDiagram
    dim_g: int
    K: str
    dim_K: int
    dim_P: int
    dim_Npm: int
    m0_label: str
    split_rank: int
    has_discrete_series: bool
    pins: tuple  # ((i, (nodes...)), ...)

    @property
    def pin_map(self) -> dict:
        return {i: list(n) for i, n in self.pins}

    def as_dict(self) -> dict:
        return {
            "label": self.label, "alias": self.alias, "type": self.satake.type,
            "black": sorted(self.satake.black), "arrows": [list(a) for a in self.satake.arrows],
            "dim_g": self.dim_g, "K": self.K, "dim_K": self.dim_K, "dim_P": self.dim_P,
            "dim_Npm": self.dim_Npm, "m0_label": self.m0_label, "split_rank": self.split_rank,
            "has_discrete_series": self.has_discrete_series,
            "pins": {str(i): list(n) for i, n in self.pins},
        }


def _make_form(d: dict) -> RealForm:
    sat = SatakeDiagram(d["type"], frozenset(d["black"]), tuple(tuple(sorted(a)) for a in d["arrows"]))
    return RealForm(d["label"], d["alias"], sat, d["dim_g"], d["K"], d["dim_K"], d["dim_P"],
                    d["dim_Npm"], d["m0"], d["split_rank"], d["discrete_series"],
                    tuple(sorted((int(i), tuple(n)) for i, n in d["pins"].items())))


def registry(forms=None) -> list:
    return [_make_form(d) for d in (reg.FORMS if forms is None else forms)]


def get_form(label) -> RealForm:
    if isinstance(label, RealForm):
        return label
    return _make_form(reg.form_data(label))


@lru_cache(maxsize=None)
def diagram_automorphisms(type_label: str) -> tuple:
    """All node permutations preserving the Cartan matrix (as dicts 1-based)."""
    rs = build(type_label)
    n = rs.rank
    C = rs.cartan
    out = []

    def extend(perm):
        k = len(perm)
        if k == n:
            out.append({i + 1: perm[i] + 1 for i in range(n)})
            return
        for c in range(n):
            if c in perm:
                continue
            if C[k][k] != C[c][c]:
                continue
            if all(C[k][j] == C[c][perm[j]] and C[j][k] == C[perm[j]][c] for j in range(k)):
                extend(perm + [c])

    extend([])
    return tuple(tuple(sorted(p.items())) for p in out)


def diagram_involution(type_label: str, arrows) -> dict:
    """The Dynkin automorphism realizing the arrows (identity when there are none)."""
    n = build(type_label).rank
    if not arrows:
        return {i: i for i in range(1, n + 1)}
    for auto in diagram_automorphisms(type_label):
        p = dict(auto)
        if all(p[i] == j and p[j] == i for i, j in arrows):
            if all(p[p[i]] == i for i in p):
                return p
    raise RegistryMismatch(f"arrows {arrows} do not extend to a diagram involution of {type_label}")


# ---------------------------------------------------------------------------


@dataclass
class RestrictedRootSystem:
    form: str
    split_rank: int
    orbits: list  # per restricted simple index i (1-based): complex white nodes
    restricted_simple: list  # coefficient vectors over complex simple roots
    restricted_roots: dict  # tuple of integer coords in restricted simple basis -> multiplicity
    gram: list  # inner products of restricted simple roots
    reduced_type: str
    images: dict = field(repr=False, default_factory=dict)  # complex root -> restricted coords

    @property
    def positive(self) -> dict:
        return {k: m for k, m in self.restricted_roots.items() if any(x > 0 for x in k)}

    def length2(self, k) -> Fraction:
        g = self.gram
        return sum((a * b * g[i][j] for i, a in enumerate(k) for j, b in enumerate(k) if a and b), Fraction(0))

    def as_dict(self) -> dict:
        return {
            "form": self.form,
            "split_rank": self.split_rank,
            "orbits": self.orbits,
            "reduced_type": self.reduced_type,
            "restricted_simple": [[str(x) for x in v] for v in self.restricted_simple],
            "roots": [{"coords": list(k), "multiplicity": m}
                      for k, m in sorted(self.restricted_roots.items(), key=lambda t: (-sum(t[0]), t[0]))],
            "positive_multiplicity_sum": sum(self.positive.values()),
        }


def _project(rs: RootSystem, black: list, v: list) -> list:
    """v minus its orthogonal projection onto span{alpha_b : b black}."""
    if not black:
        return v
    idx = [b - 1 for b in black]
    g = rs.gram
    rhs = [sum((v[k] * g[k][b] for k in range(rs.rank) if v[k]), Fraction(0)) for b in idx]
    G = RatMatrix.from_rows([[g[a][b] for b in idx] for a in idx])
    y = solve(G, rhs)
    out = list(v)
    for t, b in enumerate(idx):
        out[b] -= y[t]
    return out


def restriction_map(form: RealForm, c) -> list:
    """Image of a complex root (coefficients over simple roots) in coefficient space."""
    rs = build(form.satake.type)
    tau = form.satake.tau()
    v = [Fraction(0)] * rs.rank
    for i, a in enumerate(c):
        if a:
            v[i] += Fraction(a, 2)
            v[tau[i + 1] - 1] += Fraction(a, 2)
    return _project(rs, sorted(form.satake.black), v)


def _classify_restricted(gram, roots, r) -> str:
    cartan = [[int(2 * gram[i][j] / gram[j][j]) for j in range(r)] for i in range(r)]
    comps = []
    seen = set()
    for s in range(1, r + 1):
        if s in seen:
            continue
        stack, comp = [s], []
        seen.add(s)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in range(1, r + 1):
                if w not in seen and cartan[u - 1][w - 1]:
                    seen.add(w)
                    stack.append(w)
        comps.append(comp)
    if len(comps) != 1:
        raise RegistryMismatch("restricted Dynkin diagram is disconnected")
    comp = classify_component(cartan, gram, comps[0])
    doubled = any(tuple(2 * int(i == k) for k in range(r)) in roots for i in range(r))
    if doubled:
        return f"BC{r}"
    return comp.type


@lru_cache(maxsize=None)
def _restricted_cached(label: str, payload: str) -> RestrictedRootSystem:
    import json
    d = json.loads(payload)
    form = _make_form(d)
    return _compute_restricted(form)


def restricted_root_system(form) -> RestrictedRootSystem:
    import json
    form = get_form(form) if not isinstance(form, RealForm) else form
    d = {**form.as_dict(), "m0": form.m0_label, "discrete_series": form.has_discrete_series}
    d["black"] = sorted(form.satake.black)
    return _restricted_cached(form.label, json.dumps(d, sort_keys=True))


def _compute_restricted(form: RealForm) -> RestrictedRootSystem:
    rs = build(form.satake.type)
    r = form.split_rank
    pins = form.pin_map
    if sorted(pins) != list(range(1, r + 1)):
        raise RegistryMismatch(f"{form.label}: pins must cover 1..{r}")
    tau = form.satake.tau()
    black = form.satake.black
    orbits = [sorted(pins[i]) for i in range(1, r + 1)]
    covered = sorted(x for o in orbits for x in o)
    whites = sorted(i for i in range(1, rs.rank + 1) if i not in black)
    if covered != whites:
        raise RegistryMismatch(f"{form.label}: pinned nodes {covered} differ from white nodes {whites}")
    for o in orbits:
        if sorted({tau[x] for x in o}) != o:
            raise RegistryMismatch(f"{form.label}: pinned orbit {o} is not tau-stable")
    lam = []
    for o in orbits:
        e = [int(k + 1 == o[0]) for k in range(rs.rank)]
        lam.append(restriction_map(form, e))
    # express images in the lambda basis; combinatorial rule: sum of coefficients over each orbit
    L = RatMatrix.from_rows([[lam[i][k] for i in range(r)] for k in range(rs.rank)], r)
    roots, images = {}, {}
    for c in rs.coeffs:
        v = restriction_map(form, c)
        if not any(v):
            continue
        comb = tuple(sum(c[x - 1] for x in o) for o in orbits)
        geo = solve(L, v)
        if tuple(geo) != tuple(Fraction(x) for x in comb):
            raise RegistryMismatch(f"{form.label}: projection disagrees with orbit sums for {c}")
        roots[comb] = roots.get(comb, 0) + 1
        images[c] = comb
    gram = [[rs.inner(lam[i], lam[j]) for j in range(r)] for i in range(r)]
    rtype = _classify_restricted(gram, roots, r)
    return RestrictedRootSystem(form.label, r, orbits, lam, roots, gram, rtype, images)


def dim_m0(form) -> int:
    form = get_form(form)
    rr = restricted_root_system(form)
    npm = sum(rr.positive.values())
    value = form.dim_g - 2 * npm - form.split_rank
    if value != dimension(form.m0_label):
        raise RegistryMismatch(f"{form.label}: dim m0 = {value} but {form.m0_label} has "
                               f"dimension {dimension(form.m0_label)}")
    return value


# ---------------------------------------------------------------------------
# Satake subdiagram lookup


def _component_automorphisms(t: str) -> list:
    """Position permutations of the standard labelling of a connected type."""
    letter, n = t[0], int(t[1:])
    ident = list(range(n))
    out = [ident]
    if letter == "A" and n > 1:
        out.append(list(reversed(ident)))
    elif letter == "D" and n > 4:
        p = list(ident)
        p[n - 2], p[n - 1] = p[n - 1], p[n - 2]
        out.append(p)
    elif letter == "D" and n == 4:
        out = []
        for a, b, c in permutations((0, 2, 3)):
            p = [0] * 4
            p[0], p[1], p[2], p[3] = a, 1, b, c
            out.append(p)
    elif t == "E6":
        out.append([4, 3, 2, 1, 0, 5])
    return out


def _encode(n: int, black: set, arrows: dict) -> tuple:
    return (tuple(int(i in black) for i in range(n)), tuple(arrows.get(i, -1) for i in range(n)))


def _canonical(t: str, black: set, arrows: dict) -> tuple:
    n = int(t[1:])
    best = None
    for p in _component_automorphisms(t):
        # position i goes to p[i]
        b2 = {p[i] for i in black}
        a2 = {p[i]: p[j] for i, j in arrows.items()}
        code = _encode(n, b2, a2)
        if best is None or code < best:
            best = code
    return best


def _pm(p: int, q: int) -> str:
    return f"({max(p, q)},{min(p, q)})"


def _rules(t: str) -> list:
    """(label, black positions, arrows) for every real form of a connected type."""
    letter, n = t[0], int(t[1:])
    allpos = set(range(n))
    rules = []
    if letter == "A":
        N = n + 1
        rules.append((f"sl({N},R)", set(), {}))
        rules.append((f"su({N})", set(allpos), {}))
        if N % 2 == 0 and N >= 4:
            rules.append((f"su*({N})", {i for i in range(0, n, 2)}, {}))
        for p in range(1, N // 2 + 1):
            if 2 * p == N and p == 1:
                continue
            arrows = {}
            for i in range(p if 2 * p < N else N // 2):
                j = n - 1 - i
                if i != j:
                    arrows[i], arrows[j] = j, i
            black = set(range(p, n - p)) if 2 * p < N else set()
            rules.append((f"su{_pm(N - p, p)}", black, arrows))
    elif letter == "B":
        for k in range(0, n + 1):
            lab = f"so({2 * n + 1})" if k == 0 else f"so{_pm(k, 2 * n + 1 - k)}"
            rules.append((lab, set(range(k, n)), {}))
    elif letter == "C":
        rules.append((f"sp({n},R)", set(), {}))
        rules.append((f"usp({n})", set(allpos), {}))
        for p in range(1, n // 2 + 1):
            white = {2 * i + 1 for i in range(p)}
            rules.append((f"sp{_pm(n - p, p)}", allpos - white, {}))
    elif letter == "D":
        rules.append((f"so({2 * n},{0})".replace(",0)", ")"), set(allpos), {}))
        for k in range(1, n - 1):
            rules.append((f"so{_pm(k, 2 * n - k)}", set(range(k, n)), {}))
        rules.append((f"so{_pm(n - 1, n + 1)}", set(), {n - 2: n - 1, n - 1: n - 2}))
        rules.append((f"so({n},{n})", set(), {}))
        if n % 2 == 0:
            black = {i for i in range(0, n - 2, 2)} | {n - 2}
            rules.append((f"so*({2 * n})", black, {}))
        else:
            black = {i for i in range(0, n - 2, 2)}
            rules.append((f"so*({2 * n})", black, {n - 2: n - 1, n - 1: n - 2}))
    elif letter in "EFG":
        for f in reg.FORMS:
            if f["type"] == t:
                rules.append((f["label"], {b - 1 for b in f["black"]},
                              {a - 1: b - 1 for a, b in f["arrows"]} | {b - 1: a - 1 for a, b in f["arrows"]}))
        rules.append((reg.COMPACT_EXCEPTIONAL[t], set(allpos), {}))
    return rules


@lru_cache(maxsize=None)
def satake_lookup(t: str) -> dict:
    table = {}
    for label, black, arrows in _rules(t):
        key = _canonical(t, black, arrows)
        table.setdefault(key, label)
    return table


def classify_satake_component(t: str, black_positions: set, arrow_positions: dict) -> str:
    key = _canonical(t, set(black_positions), dict(arrow_positions))
    table = satake_lookup(t)
    if key not in table:
        raise UnclassifiedSubdiagram(f"no real form of {t} with decoration {key}")
    return table[key]


def _complex_label(t: str) -> str:
    letter, n = t[0], int(t[1:])
    if letter == "A":
        return f"sl({n + 1},C)_R"
    if letter == "B":
        return f"so({2 * n + 1},C)_R"
    if letter == "C":
        return f"sp({n},C)_R"
    if letter == "D":
        return f"so({2 * n},C)_R"
    return f"{t}(C)_R"


@dataclass(frozen=True)
class LeviFactor:
    label: str
    complex_types: tuple
    nodes: tuple


def classify_subdiagram(form: RealForm, nodes) -> list:
    """Real-form labels of the Satake subdiagram induced on ``nodes``."""
    rs = build(form.satake.type)
    tau = form.satake.tau()
    black = form.satake.black
    partner = form.satake.arrow_partner()
    comps = classify_nodes(rs, nodes)
    nonsimply = form.satake.type[0] in "FG"
    out, used = [], set()
    for comp in comps:
        if comp.nodes in used:
            continue
        image = tuple(sorted(tau[x] for x in comp.nodes))
        if image != tuple(sorted(comp.nodes)):
            other = [c for c in comps if tuple(sorted(c.nodes)) == image]
            if len(other) != 1 or any(x in black for x in comp.nodes + other[0].nodes):
                raise UnclassifiedSubdiagram(f"unexpected tau-pairing on {comp.nodes}")
            used.add(comp.nodes)
            used.add(other[0].nodes)
            out.append(LeviFactor(_complex_label(comp.type), (comp.type, comp.type),
                                  tuple(sorted(comp.nodes + other[0].nodes))))
            continue
        used.add(comp.nodes)
        pos = {x: i for i, x in enumerate(comp.nodes)}
        bpos = {pos[x] for x in comp.nodes if x in black}
        apos = {pos[x]: pos[partner[x]] for x in comp.nodes if x in partner and partner[x] in pos}
        label = classify_satake_component(comp.type, bpos, apos)
        if nonsimply and comp.type[0] == "A":
            label += "_L" if rs.is_long(comp.nodes[0] - 1) else "_S"
        out.append(LeviFactor(label, (comp.type,), tuple(sorted(comp.nodes))))
    return out


def levi_label(factors, abelian: int) -> str:
    parts = sorted(factors, key=lambda f: (-dimension(f.label), f.label))
    return join([f.label for f in parts] + ["u(1)"] * abelian)
