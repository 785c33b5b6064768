"""Exact rational polytopes in lattice coordinates.

Hulls are computed by gift-wrapping with exact integer arithmetic: one
facet is found by rotating a supporting hyperplane until its face is
(d-1)-dimensional, and neighbouring facets are obtained by rotating about
each ridge.  Ridges of a facet come from a recursive hull in dimension d-1,
so non-simplicial facets (common for Weyl-invariant polytopes) need no
special treatment.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import factorial, gcd, lcm
from typing import Iterable, Sequence

from .errors import InternalError, PreconditionError, SchemaError
from .linalg import determinant, nullspace, primitive, rank, rref
from .rootsys import RootSystemData, apply, is_dominant, weyl_orbit

Point = tuple  # tuple of Fraction


@dataclass(frozen=True, order=True)
class Facet:
    """Inequality ``<normal, x> <= offset`` with a primitive integer normal."""

    normal: tuple[int, ...]
    offset: Fraction

    def value(self, x: Sequence) -> Fraction:
        return sum((a * b for a, b in zip(self.normal, x)), Fraction(0)) - self.offset


@dataclass(frozen=True)
class RationalPolytope:
    dim_ambient: int
    vertices: tuple[Point, ...]
    facets: tuple[Facet, ...]
    affine_dim: int
    equations: tuple[Facet, ...] = ()

    @property
    def is_full_dimensional(self) -> bool:
        return self.affine_dim == self.dim_ambient

    def facet_vertices(self, facet: Facet) -> tuple[Point, ...]:
        return tuple(v for v in self.vertices if facet.value(v) == 0)

    def contains(self, x: Sequence) -> bool:
        x = tuple(Fraction(v) for v in x)
        return (all(f.value(x) <= 0 for f in self.facets)
                and all(e.value(x) == 0 for e in self.equations))

    def support(self, u: Sequence) -> Fraction:
        return max(sum((a * b for a, b in zip(u, v)), Fraction(0)) for v in self.vertices)

    def barycenter(self) -> Point:
        m = len(self.vertices)
        return tuple(sum(c, Fraction(0)) / m for c in zip(*self.vertices))

    def scale(self, t) -> "RationalPolytope":
        t = Fraction(t)
        if t <= 0:
            raise PreconditionError("dilation factor must be positive")
        return convex_hull([tuple(t * x for x in v) for v in self.vertices])

    def translate(self, shift: Sequence) -> "RationalPolytope":
        return convex_hull([tuple(x + Fraction(s) for x, s in zip(v, shift))
                            for v in self.vertices])

    def __eq__(self, other):
        if not isinstance(other, RationalPolytope):
            return NotImplemented
        return (self.dim_ambient == other.dim_ambient
                and set(self.vertices) == set(other.vertices))

    def __hash__(self):
        return hash((self.dim_ambient, frozenset(self.vertices)))

    def __repr__(self):
        return (f"RationalPolytope(dim={self.affine_dim}/{self.dim_ambient}, "
                f"{len(self.vertices)} vertices, {len(self.facets)} facets)")


@dataclass(frozen=True)
class Simplex:
    vertices: tuple[Point, ...]

    def __post_init__(self):
        if self.signed_volume_times_factorial() == 0:
            raise PreconditionError("degenerate simplex")

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    def signed_volume_times_factorial(self) -> Fraction:
        v0 = self.vertices[0]
        edges = [[a - b for a, b in zip(v, v0)] for v in self.vertices[1:]]
        if not edges:
            return Fraction(1)
        if len(edges) != len(edges[0]):
            raise PreconditionError("simplex must be full-dimensional in its ambient space")
        return determinant(edges)

    def volume(self) -> Fraction:
        return abs(self.signed_volume_times_factorial()) / factorial(self.dim)


# ---------------------------------------------------------------- hull core


def _aff(h, p):
    """Evaluate the affine function ``h = (a_1..a_d, b)`` as ``a.p - b``."""
    return sum(a * x for a, x in zip(h, p)) - h[-1]


def _other_direction(rows, f, d):
    """An affine function vanishing on ``rows`` that is not a multiple of ``f``."""
    for g in nullspace(rows, d + 1):
        if rank([list(g), list(f)]) == 2:
            return primitive(g)
    raise InternalError("no independent supporting direction")


def _rotate(points, f, g):
    """Rotate hyperplane f about {f = g = 0} until it touches more points.

    ``f`` is supporting (f <= 0 on all points); returns ``g - mu f`` with the
    largest admissible rotation.
    """
    num, den = None, None
    for p in points:
        fp = _aff(f, p)
        if fp < 0:
            gp = _aff(g, p)
            # gp / fp < num / den, with fp, den < 0
            if num is None or gp * den < num * fp:
                num, den = gp, fp
    if num is None:
        raise InternalError("point set is not full-dimensional")
    return primitive([num * fi - den * gi for gi, fi in zip(g, f)])


def _hull_full(points: list[tuple[int, ...]], d: int) -> dict[tuple[int, ...], frozenset[int]]:
    """Facets of a full-dimensional integer point set in Z^d.

    Returns ``{(a_1..a_d, b): indices on the facet}`` where ``a.x <= b``.
    ``(a, b)`` is primitive as a whole vector; callers renormalise.
    """
    if d == 1:
        xs = [p[0] for p in points]
        lo, hi = min(xs), max(xs)
        return {(-1, -lo): frozenset(i for i, x in enumerate(xs) if x == lo),
                (1, hi): frozenset(i for i, x in enumerate(xs) if x == hi)}

    # initial facet: rotate the supporting hyperplane x_0 <= max
    top = max(p[0] for p in points)
    f = tuple([1] + [0] * (d - 1) + [top])
    face = [i for i, p in enumerate(points) if _aff(f, p) == 0]
    while rank([[x - y for x, y in zip(points[i], points[face[0]])] for i in face]) < d - 1:
        rows = [list(points[i]) + [-1] for i in face]
        g = _other_direction(rows, f, d)
        f = _rotate(points, f, g)
        face = [i for i, p in enumerate(points) if _aff(f, p) == 0]

    facets: dict[tuple[int, ...], frozenset[int]] = {f: frozenset(face)}
    queue = [f]
    while queue:
        f = queue.pop()
        idx = sorted(facets[f])
        drop = next(j for j in range(d) if f[j] != 0)
        proj = [tuple(x for j, x in enumerate(points[i]) if j != drop) for i in idx]
        for ridge_local in _hull_full(proj, d - 1).values():
            ridge = [idx[i] for i in ridge_local]
            rows = [list(points[i]) + [-1] for i in ridge]
            g = _other_direction(rows, f, d)
            q = next(i for i in idx if _aff(g, points[i]) != 0)
            if _aff(g, points[q]) > 0:
                g = tuple(-x for x in g)
            h = _rotate(points, f, g)
            if h not in facets:
                facets[h] = frozenset(i for i, p in enumerate(points) if _aff(h, p) == 0)
                queue.append(h)
    return facets


def _to_fraction_points(points: Iterable[Sequence]) -> list[Point]:
    out = []
    seen = set()
    for p in points:
        q = tuple(Fraction(x) for x in p)
        if q not in seen:
            seen.add(q)
            out.append(q)
    return out


def convex_hull(points: Iterable[Sequence]) -> RationalPolytope:
    pts = sorted(_to_fraction_points(points))
    if not pts:
        raise SchemaError("convex hull of an empty point set")
    d = len(pts[0])
    if any(len(p) != d for p in pts):
        raise SchemaError("points have inconsistent dimensions")
    den = lcm(*(x.denominator for p in pts for x in p)) if d else 1
    ints = [tuple(int(x * den) for x in p) for p in pts]
    p0 = ints[0]
    diffs = [[x - y for x, y in zip(p, p0)] for p in ints[1:]]
    if diffs and d:
        _, pivots = rref(diffs)
    else:
        pivots = []
    r = len(pivots)

    equations = []
    if r < d:
        for c in nullspace(diffs, d) if diffs else nullspace([], d):
            c = primitive(c)
            equations.append(Facet(c, Fraction(sum(a * b for a, b in zip(c, pts[0])))))
        equations.sort()
    if r == 0:
        return RationalPolytope(d, (pts[0],), (), 0, tuple(equations))

    proj = [tuple(p[j] for j in pivots) for p in ints]
    raw = _hull_full(proj, r)
    facets = []
    incid: dict[int, list[tuple[int, ...]]] = {i: [] for i in range(len(pts))}
    for h, idx in raw.items():
        a = h[:-1]
        g = 0
        for x in a:
            g = gcd(g, x)
        normal = [0] * d
        for j, x in zip(pivots, a):
            normal[j] = x // g
        facets.append(Facet(tuple(normal), Fraction(h[-1], g * den)))
        for i in idx:
            incid[i].append(tuple(x // g for x in a))
    verts = tuple(p for i, p in enumerate(pts) if incid[i] and rank(incid[i]) == r)
    return RationalPolytope(d, verts, tuple(sorted(facets)), r, tuple(equations))


def _same_polytope(p: RationalPolytope, q: RationalPolytope) -> bool:
    return (set(p.vertices) == set(q.vertices) and set(p.facets) == set(q.facets)
            and p.affine_dim == q.affine_dim)


def verify_representations(p: RationalPolytope) -> None:
    """Cross-check V- and H-representations; raises InternalError on mismatch."""
    for v in p.vertices:
        for f in p.facets:
            if f.value(v) > 0:
                raise InternalError(f"vertex {v} violates facet {f}")
    for f in p.facets:
        if len(p.facet_vertices(f)) < p.affine_dim:
            raise InternalError(f"facet {f} supported by too few vertices")
        if gcd(*f.normal) != 1:
            raise InternalError(f"facet normal {f.normal} is not primitive")


# ---------------------------------------------------------- triangulation


def _triangulate_points(points: list[Point], pulling: bool) -> list[tuple[Point, ...]]:
    p = convex_hull(points)
    if p.affine_dim == 0:
        return [p.vertices]
    if p.affine_dim == 1:
        return [p.vertices]
    apex = p.vertices[0] if pulling else p.barycenter()
    out = []
    for f in p.facets:
        fv = list(p.facet_vertices(f))
        if pulling and apex in fv:
            continue
        for s in _triangulate_points(fv, pulling):
            out.append((apex,) + tuple(s))
    return out


def triangulate(p: RationalPolytope, method: str = "centroid") -> list[Simplex]:
    """Simplices with disjoint interiors covering ``p``.

    ``method="centroid"`` cones from the vertex barycenter over recursively
    triangulated facets; ``method="pulling"`` cones from a vertex instead.
    """
    if not p.is_full_dimensional:
        raise PreconditionError(
            f"cannot triangulate: affine dimension {p.affine_dim} < ambient {p.dim_ambient}")
    if method not in ("centroid", "pulling"):
        raise SchemaError(f"unknown triangulation method {method!r}")
    if p.dim_ambient == 0:
        return [Simplex(p.vertices)]
    return [Simplex(s) for s in _triangulate_points(list(p.vertices), method == "pulling")]


def lattice_volume(p: RationalPolytope) -> Fraction:
    if not p.is_full_dimensional:
        raise PreconditionError(
            f"volume needs a full-dimensional polytope (affine dimension {p.affine_dim})")
    return sum((s.volume() for s in triangulate(p)), Fraction(0))


def minkowski_sum(p: RationalPolytope, q: RationalPolytope) -> RationalPolytope:
    if p.dim_ambient != q.dim_ambient:
        raise SchemaError("Minkowski sum of polytopes in different dimensions")
    return convex_hull(tuple(a + b for a, b in zip(u, v))
                       for u, v in product(p.vertices, q.vertices))


def linear_combination(polys: Sequence[RationalPolytope], coeffs: Sequence) -> RationalPolytope:
    """Hull of ``sum_i c_i P_i`` for nonnegative rational ``c_i`` (at least one positive)."""
    if len(polys) != len(coeffs):
        raise SchemaError("need one coefficient per polytope")
    d = polys[0].dim_ambient
    acc = [tuple(Fraction(0) for _ in range(d))]
    for P, c in zip(polys, coeffs):
        c = Fraction(c)
        if c < 0:
            raise PreconditionError("Minkowski coefficients must be nonnegative")
        if c == 0:
            continue
        scaled = [tuple(c * x for x in v) for v in P.vertices]
        sums = {tuple(a + b for a, b in zip(u, v)) for u in acc for v in scaled}
        acc = list(convex_hull(sums).vertices)
    return convex_hull(acc)


# ------------------------------------------------------- weight polytopes


@dataclass(frozen=True)
class Summand:
    weight: tuple[tuple[int, ...], ...]
    central: tuple[int, ...] = ()


@dataclass(frozen=True)
class RepresentationSpec:
    summands: tuple[Summand, ...]
    name: str | None = None

    def __post_init__(self):
        if not self.summands:
            raise SchemaError("a representation needs at least one summand")


def irreducible(*weight_blocks, central=(), name=None) -> RepresentationSpec:
    """``irreducible([3])`` for Sym^3 of SL2; ``irreducible([1], [2])`` for A1xA1."""
    return RepresentationSpec(
        (Summand(tuple(tuple(int(x) for x in b) for b in weight_blocks),
                 tuple(int(x) for x in central)),),
        name)


def highest_weights(rs: RootSystemData, rep: RepresentationSpec) -> list[Point]:
    out = []
    for s in rep.summands:
        x = rs.to_lattice(s.weight, s.central)
        if any(v.denominator != 1 for v in x):
            raise SchemaError(f"weight {s.weight} does not lie in the chosen character lattice")
        if not is_dominant(rs, x):
            raise SchemaError(f"highest weight {s.weight} is not dominant")
        out.append(x)
    return out


def weight_polytope(rs: RootSystemData, rep: RepresentationSpec) -> RationalPolytope:
    pts = set()
    for x in highest_weights(rs, rep):
        pts |= weyl_orbit(rs, x)
    return convex_hull(pts)


def orbit_polytope(rs: RootSystemData, weight: Sequence) -> RationalPolytope:
    return convex_hull(weyl_orbit(rs, weight))


# ------------------------------------------------------------ Weyl action


def check_weyl_invariant(rs: RootSystemData, p: RationalPolytope) -> None:
    if p.dim_ambient != rs.k:
        raise SchemaError(f"polytope lives in dimension {p.dim_ambient}, group rank is {rs.k}")
    vs = set(p.vertices)
    for w in rs.weyl_elements:
        for v in p.vertices:
            if apply(w, v) not in vs:
                raise PreconditionError(
                    f"polytope is not Weyl-invariant: w={w} maps vertex {v} outside")


@dataclass(frozen=True)
class FacetOrbit:
    representative: Facet
    members: tuple[Facet, ...]
    stabilizer_size: int

    @property
    def size(self) -> int:
        return len(self.members)


def facet_orbits(rs: RootSystemData, p: RationalPolytope) -> list[FacetOrbit]:
    check_weyl_invariant(rs, p)
    by_verts = {frozenset(p.facet_vertices(f)): f for f in p.facets}
    remaining = list(p.facets)
    done: set[Facet] = set()
    orbits = []
    for f in remaining:
        if f in done:
            continue
        fv = p.facet_vertices(f)
        members = []
        stab = 0
        for w in rs.weyl_elements:
            img = by_verts[frozenset(apply(w, v) for v in fv)]
            if img == f:
                stab += 1
            if img not in members:
                members.append(img)
        members.sort()
        done.update(members)
        orbits.append(FacetOrbit(f, tuple(members), stab))
    return orbits
