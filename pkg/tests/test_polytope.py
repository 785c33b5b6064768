from fractions import Fraction
from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bkcalc.errors import PreconditionError, SchemaError
from bkcalc.polytope import (RepresentationSpec, Summand, convex_hull, facet_orbits,
                             irreducible, lattice_volume, linear_combination, minkowski_sum,
                             triangulate, verify_representations, weight_polytope)
from bkcalc.rootsys import group

from conftest import box, segment, shoelace

HEXAGON = [(1, 1), (-1, 2), (-2, 1), (-1, -1), (1, -2), (2, -1)]


def brute_force_facets_2d(points):
    """Lines through two points with every point weakly on one side."""
    out = set()
    for p, q in combinations(points, 2):
        a, b = q[1] - p[1], p[0] - q[0]
        vals = [a * x + b * y for x, y in points]
        c = a * p[0] + b * p[1]
        if all(v <= c for v in vals):
            out.add(frozenset(pt for pt, v in zip(points, vals) if v == c))
        if all(v >= c for v in vals):
            out.add(frozenset(pt for pt, v in zip(points, vals) if v == c))
    return out


def test_unit_square():
    sq = convex_hull([(0, 0), (1, 0), (0, 1), (1, 1)])
    assert len(sq.vertices) == 4 and len(sq.facets) == 4
    assert sq.affine_dim == 2
    assert lattice_volume(sq) == 1


def test_segment_hull():
    p = convex_hull([(0,), (5,), (2,)])
    assert set(p.vertices) == {(0,), (5,)}
    assert lattice_volume(p) == 5


def test_hexagon_with_interior_point():
    p = convex_hull(HEXAGON + [(0, 0)])
    assert set(p.vertices) == set(HEXAGON)
    assert len(p.facets) == 6
    facet_sets = {frozenset(p.facet_vertices(f)) for f in p.facets}
    oracle = brute_force_facets_2d([tuple(Fraction(c) for c in v) for v in HEXAGON + [(0, 0)]])
    assert facet_sets == oracle


def test_weight_polytopes(a1, a2):
    for n in range(1, 5):
        p = weight_polytope(a1, irreducible([n]))
        assert set(p.vertices) == {(-n,), (n,)}
    triv = weight_polytope(a2, irreducible([0, 0]))
    assert triv.affine_dim == 0 and triv.vertices == ((0, 0),)
    adj = weight_polytope(a2, irreducible([1, 1]))
    assert set(adj.vertices) == set(HEXAGON)


def test_weight_polytope_validation(a2):
    with pytest.raises(SchemaError):
        weight_polytope(a2, irreducible([1, -1]))
    with pytest.raises(SchemaError):
        RepresentationSpec(())
    rs = group("A1", lattice="root")
    with pytest.raises(SchemaError):
        weight_polytope(rs, irreducible([1]))
    assert set(weight_polytope(rs, irreducible([4])).vertices) == {(-2,), (2,)}


def test_weight_polytope_contains_origin(b2, g2):
    for rs in (b2, g2):
        p = weight_polytope(rs, RepresentationSpec((Summand(((1, 0),)), Summand(((0, 2),)))))
        assert p.contains((0, 0))


def test_lower_dimensional_polytopes():
    seg = convex_hull([(0, 0, 0), (1, 1, 1), (2, 2, 2)])
    assert seg.affine_dim == 1 and len(seg.equations) == 2
    assert set(seg.vertices) == {(0, 0, 0), (2, 2, 2)}
    assert seg.contains((1, 1, 1)) and not seg.contains((1, 1, 0))
    with pytest.raises(PreconditionError):
        lattice_volume(seg)
    with pytest.raises(PreconditionError):
        triangulate(seg)


def test_triangulation_examples(a2):
    sq = convex_hull([(0, 0), (1, 0), (0, 1), (1, 1)])
    simplices = triangulate(sq, "pulling")
    assert len(simplices) == 2 and all(s.volume() == Fraction(1, 2) for s in simplices)
    segs = triangulate(segment(3))
    assert sum(s.volume() for s in segs) == 6
    hexagon = weight_polytope(a2, irreducible([1, 1]))
    tris = triangulate(hexagon)
    assert len(tris) == 6
    assert all((0, 0) in s.vertices for s in tris)
    assert sum(s.volume() for s in tris) == shoelace(HEXAGON) == 9


def test_unit_cube_volume():
    assert lattice_volume(box(1, 1, 1)) == 1
    assert lattice_volume(box(2, 3, 5)) == 30


def test_minkowski_examples(a2):
    assert minkowski_sum(segment(1), segment(2)) == segment(3)
    sq = box(1, 1)
    moved = minkowski_sum(sq, convex_hull([(3, 3)]))
    assert set(moved.vertices) == {(3, 3), (4, 3), (3, 4), (4, 4)}
    hexagon = weight_polytope(a2, irreducible([1, 1]))
    doubled = minkowski_sum(hexagon, hexagon)
    assert set(doubled.vertices) == {(2 * x, 2 * y) for x, y in HEXAGON}
    with pytest.raises(SchemaError):
        minkowski_sum(segment(1), sq)


def test_minkowski_support_function(b2):
    p = weight_polytope(b2, irreducible([1, 0]))
    q = weight_polytope(b2, irreducible([0, 3]))
    s = minkowski_sum(p, q)
    for f in s.facets + p.facets + q.facets:
        assert s.support(f.normal) == p.support(f.normal) + q.support(f.normal)


def test_linear_combination(a2):
    hexagon = weight_polytope(a2, irreducible([1, 1]))
    tri = weight_polytope(a2, irreducible([1, 0]))
    combo = linear_combination([hexagon, tri], [2, 3])
    direct = minkowski_sum(hexagon.scale(2), tri.scale(3))
    assert combo == direct


def test_facet_orbits(a1, a2, t2):
    orbits = facet_orbits(a1, segment(4))
    assert len(orbits) == 1 and orbits[0].size == 2
    hexagon = weight_polytope(a2, irreducible([1, 1]))
    orbits = facet_orbits(a2, hexagon)
    # the normals form the orbits of omega_1 and omega_2, which A2 keeps apart
    assert sorted(o.size for o in orbits) == [3, 3]
    assert all(o.size * o.stabilizer_size == a2.weyl_order for o in orbits)
    assert len(facet_orbits(t2, box(1, 1))) == 4
    with pytest.raises(PreconditionError):
        facet_orbits(a1, convex_hull([(0,), (2,)]))


def test_facet_orbits_of_b2_and_g2(b2, g2):
    for rs in (b2, g2):
        p = weight_polytope(rs, irreducible([1, 1]))
        orbits = facet_orbits(rs, p)
        assert len(orbits) == 2
        assert sum(o.size for o in orbits) == len(p.facets)


small = st.integers(-4, 4)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(small, small), min_size=3, max_size=12))
def test_hull_2d_against_brute_force(points):
    p = convex_hull(points)
    if p.affine_dim < 2:
        return
    verify_representations(p)
    pts = list({tuple(Fraction(c) for c in q) for q in points})
    oracle = brute_force_facets_2d(pts)
    assert {frozenset(q for q in pts if f.value(q) == 0) for f in p.facets} == oracle
    assert lattice_volume(p) == shoelace(list(p.vertices))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(small, small, small), min_size=4, max_size=14))
def test_hull_3d_properties(points):
    p = convex_hull(points)
    verify_representations(p)
    for q in points:
        assert p.contains(q)
    again = convex_hull(p.vertices)
    assert set(again.vertices) == set(p.vertices) and set(again.facets) == set(p.facets)
    if p.affine_dim == 3:
        a = sum(s.volume() for s in triangulate(p, "centroid"))
        b = sum(s.volume() for s in triangulate(p, "pulling"))
        assert a == b == lattice_volume(p) > 0
        assert minkowski_sum(p, p) == p.scale(2)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.tuples(small, small, small), min_size=4, max_size=10),
       st.sampled_from([(1, 0, 0), (0, 1, 0), (1, 1, 0), (1, -1, 2)]))
def test_volume_additivity(points, normal):
    """Splitting by a hyperplane through the barycenter preserves volume."""
    p = convex_hull(points)
    if p.affine_dim < 3:
        return
    c = sum(Fraction(sum(a * x for a, x in zip(normal, v))) for v in p.vertices) / len(p.vertices)
    pieces = []
    for sign in (1, -1):
        pts = [v for v in p.vertices if sign * (sum(a * x for a, x in zip(normal, v)) - c) >= 0]
        for u, w in product(p.vertices, repeat=2):
            fu = sum(a * x for a, x in zip(normal, u)) - c
            fw = sum(a * x for a, x in zip(normal, w)) - c
            if fu < 0 < fw:
                s = fu / (fu - fw)
                pts.append(tuple(x + s * (y - x) for x, y in zip(u, w)))
        piece = convex_hull(pts)
        pieces.append(lattice_volume(piece) if piece.affine_dim == 3 else 0)
    assert sum(pieces) == lattice_volume(p)
