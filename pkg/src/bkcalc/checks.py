"""Built-in invariant suite behind ``bkcalc check``.

All assertions are exact; random inputs come from a seeded generator so the
report is reproducible.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .degrees import bk_degree, mixed_degree
from .errors import BKError
from .integrate import bk_linear_forms, integrate_over_polytope
from .polytope import (RationalPolytope, convex_hull, lattice_volume, minkowski_sum,
                       triangulate)
from .rootsys import GroupSpec, RootSystemData, apply, build_root_system, weyl_orbit

DEFAULT_GROUPS = (
    GroupSpec((("A", 1),)),
    GroupSpec((("A", 2),)),
    GroupSpec((("B", 2),)),
    GroupSpec((("G", 2),)),
    GroupSpec((("A", 1), ("A", 1))),
    GroupSpec((), 2),
)


@dataclass(frozen=True)
class CheckResult:
    group: str
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.group}: {self.name}" + (
            f" ({self.detail})" if self.detail else "")


def _rand_vec(rng: random.Random, k: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(k))


def sample_polytopes(rs: RootSystemData, rng: random.Random) -> list[RationalPolytope]:
    """Two full-dimensional Weyl-invariant lattice polytopes for the group."""
    if rs.is_torus:
        out = []
        for _ in range(2):
            while True:
                pts = [tuple(rng.randint(-2, 2) for _ in range(rs.k)) for _ in range(rs.k + 3)]
                p = convex_hull(pts)
                if p.is_full_dimensional:
                    out.append(p)
                    break
        return out
    two_rho = [int(x) for x in rs.two_rho]
    rho = [int(x) for x in rs.rho] if all(x.denominator == 1 for x in rs.rho) else two_rho
    central = rs.spec.torus_rank
    ss = rs.k - central
    out = []
    for base, c in ((rho, 1), ([x + (i % 2) for i, x in enumerate(two_rho)], 2)):
        pts = set()
        for sign in ((1, -1) if central else (1,)):
            pts |= weyl_orbit(rs, list(base[:ss]) + [sign * c] * central)
        out.append(convex_hull(pts))
    return out


def check_weyl_closure(rs: RootSystemData) -> tuple[bool, str]:
    elems = set(rs.weyl_elements)
    gens = []
    for alpha, kappa in zip(rs.simple_roots, rs.coroot_pairing):
        gens.append(tuple(tuple(int(i == j) - alpha[i] * kappa[j] for j in range(rs.k))
                          for i in range(rs.k)))
    for g in gens:
        for w in rs.weyl_elements:
            prod = tuple(tuple(sum(g[i][t] * w[t][j] for t in range(rs.k)) for j in range(rs.k))
                         for i in range(rs.k))
            if prod not in elems:
                return False, f"generator times {w} leaves the group"
    return True, f"|W| = {len(elems)}"


def check_form_invariance(rs: RootSystemData, rng: random.Random, samples=4) -> tuple[bool, str]:
    roots = set(rs.positive_roots) | {tuple(-x for x in a) for a in rs.positive_roots}
    for _ in range(samples):
        x, y = _rand_vec(rng, rs.k), _rand_vec(rng, rs.k)
        base = rs.form(x, y)
        for w in rs.weyl_elements:
            if rs.form(apply(w, x), apply(w, y)) != base:
                return False, f"w={w} changes (x,y)"
    for w in rs.weyl_elements:
        if {apply(w, a) for a in roots} != roots:
            return False, f"w={w} does not permute the roots"
    return True, ""


def check_hull_idempotence(p: RationalPolytope) -> tuple[bool, str]:
    q = convex_hull(p.vertices)
    ok = set(q.vertices) == set(p.vertices) and set(q.facets) == set(p.facets)
    return ok, f"{len(p.vertices)} vertices, {len(p.facets)} facets"


def check_triangulation_independence(rs: RootSystemData, p: RationalPolytope) -> tuple[bool, str]:
    f = bk_linear_forms(rs)
    a = integrate_over_polytope(f, p, "centroid")
    b = integrate_over_polytope(f, p, "pulling")
    va = sum((s.volume() for s in triangulate(p, "centroid")), Fraction(0))
    vb = sum((s.volume() for s in triangulate(p, "pulling")), Fraction(0))
    return a == b and va == vb, f"integral {a}, volume {va}"


def check_minkowski_scaling(p: RationalPolytope) -> tuple[bool, str]:
    s = minkowski_sum(p, p)
    doubled = {tuple(2 * x for x in v) for v in p.vertices}
    return set(s.vertices) == doubled, ""


def check_mixed_symmetry(rs: RootSystemData, p: RationalPolytope, q: RationalPolytope
                         ) -> tuple[bool, str]:
    n = rs.n
    a = mixed_degree(rs, [(p, 1), (q, n - 1)])
    b = mixed_degree(rs, [(q, n - 1), (p, 1)])
    c = mixed_degree(rs, [(p, 1), (q, n - 1)], method="interpolation")
    return a == b == c, f"D_pol = {a.value}"


def check_mixed_diagonal(rs: RootSystemData, p: RationalPolytope) -> tuple[bool, str]:
    n = rs.n
    d = bk_degree(rs, p)
    split = mixed_degree(rs, [(p, 1), (p, n - 1)])
    return d == split, f"D = {d.value}"


def run_invariant_suite(specs: Iterable[GroupSpec] | None = None, seed: int = 0
                        ) -> list[CheckResult]:
    rng = random.Random(seed)
    results = []
    for spec in specs or DEFAULT_GROUPS:
        label = spec.label()

        def record(name: str, fn: Callable[[], tuple[bool, str]]):
            try:
                ok, detail = fn()
            except BKError as exc:
                ok, detail = False, f"{type(exc).__name__}: {exc}"
            results.append(CheckResult(label, name, ok, detail))

        try:
            rs = build_root_system(spec)
        except BKError as exc:
            results.append(CheckResult(label, "build root system", False, str(exc)))
            continue
        record("Weyl closure", lambda: check_weyl_closure(rs))
        record("form invariance", lambda: check_form_invariance(rs, rng))
        record("rho identity", lambda: (
            tuple(2 * x for x in rs.rho) == rs.two_rho
            and all(v == 1 for v in rs.coroot_values(rs.rho)), ""))
        p, q = sample_polytopes(rs, rng)
        record("hull idempotence", lambda: check_hull_idempotence(p))
        record("triangulation independence", lambda: check_triangulation_independence(rs, p))
        record("volume positivity", lambda: (lattice_volume(p) > 0, ""))
        record("Minkowski scaling", lambda: check_minkowski_scaling(p))
        record("mixed-degree symmetry", lambda: check_mixed_symmetry(rs, p, q))
        record("mixed-degree diagonal", lambda: check_mixed_diagonal(rs, q))
    return results
