"""Standard and maximal parabolic subalgebras of the registered real forms.

A standard parabolic is indexed by a subset theta of restricted simple roots
(1..r in the pinned numbering). Its Levi subalgebra is read off from the
Satake subdiagram on the black nodes plus the white nodes pinned to theta.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .lie_labels import dimension, join
from .real_form import (RealForm, classify_subdiagram, get_form, levi_label,
                        restricted_root_system)
from .root_system import build


class InvalidIndex(ValueError):
    pass


class NotApplicable(ValueError):
    pass


@dataclass(frozen=True)
class ParabolicSubalgebra:
    form: str
    theta: tuple
    levi_factors: tuple
    abelian_rank: int
    dim_m: int
    dim_a_theta: int
    dim_n_theta: int
    is_maximal: bool
    deleted_node: int | None = None

    @property
    def levi_label(self) -> str:
        return join(list(self.levi_factors) + ["u(1)"] * self.abelian_rank)

    def as_dict(self) -> dict:
        return {
            "form": self.form,
            "theta": list(self.theta),
            "levi": list(self.levi_factors),
            "abelian_rank": self.abelian_rank,
            "levi_label": self.levi_label,
            "dim_m": self.dim_m,
            "dim_a": self.dim_a_theta,
            "dim_n": self.dim_n_theta,
            "is_maximal": self.is_maximal,
            "node": self.deleted_node,
        }


@dataclass(frozen=True)
class GradingProfile:
    form: str
    deleted_node: int
    grades: dict = field(default_factory=dict)

    @property
    def depth(self) -> int:
        return max(abs(k) for k, v in self.grades.items() if v)

    @property
    def positive(self) -> dict:
        return {k: v for k, v in sorted(self.grades.items()) if k > 0}

    def as_dict(self) -> dict:
        return {"form": self.form, "node": self.deleted_node, "depth": self.depth,
                "grading": {str(k): v for k, v in sorted(self.grades.items())},
                "kind": f"{2 * self.depth + 1}-grading"}


def _check_theta(form: RealForm, theta) -> tuple:
    r = form.split_rank
    theta = tuple(sorted(set(theta)))
    for i in theta:
        if not isinstance(i, int) or not 1 <= i <= r:
            raise InvalidIndex(f"{form.label}: index {i!r} outside 1..{r}")
    return theta


def levi_nodes(form: RealForm, theta) -> list:
    pins = form.pin_map
    nodes = set(form.satake.black)
    for i in theta:
        nodes.update(pins[i])
    return sorted(nodes)


@lru_cache(maxsize=None)
def _standard(label: str, theta: tuple) -> ParabolicSubalgebra:
    form = get_form(label)
    rs = build(form.satake.type)
    r = form.split_rank
    rr = restricted_root_system(form)
    deleted = [i for i in range(1, r + 1) if i not in theta]
    dim_n = sum(m for k, m in rr.positive.items() if any(k[i - 1] > 0 for i in deleted))
    nodes = levi_nodes(form, theta)
    out_nodes = [k for k in range(1, rs.rank + 1) if k not in nodes]
    levi_roots = sum(1 for c in rs.coeffs if all(c[k - 1] == 0 for k in out_nodes))
    dim_a = r - len(theta)
    dim_m = rs.rank + levi_roots - dim_a
    abelian = len(out_nodes) - dim_a
    factors = classify_subdiagram(form, nodes) if nodes else []
    ordered = sorted(factors, key=lambda f: (-dimension(f.label), f.label))
    return ParabolicSubalgebra(form.label, theta, tuple(f.label for f in ordered), abelian, dim_m,
                               dim_a, dim_n, len(theta) == r - 1,
                               deleted[0] if len(deleted) == 1 else None)


def standard_parabolic(form, theta) -> ParabolicSubalgebra:
    form = get_form(form)
    return _standard(form.label, _check_theta(form, theta))


def maximal_parabolic(form, j: int) -> ParabolicSubalgebra:
    form = get_form(form)
    r = form.split_rank
    if not isinstance(j, int) or not 1 <= j <= r:
        raise InvalidIndex(f"{form.label}: node {j!r} outside 1..{r}")
    return standard_parabolic(form, [i for i in range(1, r + 1) if i != j])


def maximal_parabolics(form) -> list:
    form = get_form(form)
    return [maximal_parabolic(form, j) for j in range(1, form.split_rank + 1)]


def all_standard_parabolics(form) -> list:
    form = get_form(form)
    r = form.split_rank
    out = []
    for k in range(r + 1):
        for theta in combinations(range(1, r + 1), k):
            out.append(standard_parabolic(form, theta))
    return out


def classify_levi(form, theta) -> list:
    p = standard_parabolic(form, theta)
    return list(p.levi_factors) + ["u(1)"] * p.abelian_rank


def bruhat_total(p: ParabolicSubalgebra) -> int:
    return p.dim_m + p.dim_a_theta + 2 * p.dim_n_theta


def grading_profile(form, j: int) -> GradingProfile:
    form = get_form(form)
    p = maximal_parabolic(form, j)
    rr = restricted_root_system(form)
    grades = {0: p.dim_m + 1}
    for k, m in rr.restricted_roots.items():
        g = k[j - 1]
        if g:
            grades[g] = grades.get(g, 0) + m
    return GradingProfile(form.label, j, dict(sorted(grades.items())))


def long_short_counts(form, j: int) -> tuple:
    """(long, short) counts of positive restricted roots in the nilradical, with multiplicity.

    For non-reduced systems "long" means the longest class and "short" every
    other class.
    """
    form = get_form(form)
    rr = restricted_root_system(form)
    if rr.reduced_type[0] not in "BCFG":
        raise NotApplicable(f"{form.label}: restricted system {rr.reduced_type} is simply laced")
    maximal_parabolic(form, j)
    roots = {k: m for k, m in rr.positive.items() if k[j - 1] > 0}
    top = max(rr.length2(k) for k in rr.positive)
    long_ = sum(m for k, m in roots.items() if rr.length2(k) == top)
    short = sum(m for k, m in roots.items() if rr.length2(k) != top)
    return long_, short
