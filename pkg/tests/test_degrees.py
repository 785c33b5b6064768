from fractions import Fraction
from math import factorial

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from bkcalc.degrees import (IntersectionNumber, boundary_count, bk_degree, chern1_polytope,
                            chern_top_degree, mixed_degree, polarize, torus_degree,
                            torus_mixed_degree)
from bkcalc.errors import InternalError, PreconditionError, SchemaError
from bkcalc.polytope import (convex_hull, irreducible, lattice_volume, minkowski_sum,
                             weight_polytope)
from bkcalc.rootsys import group

from conftest import box, segment, shoelace


def test_sl2_degree():
    rs = group("A1")
    for n in range(1, 7):
        assert bk_degree(rs, segment(n)) == 2 * n ** 3


def test_sl2_chern_degrees(a1):
    assert chern1_polytope(a1) == segment(2)
    for n in range(1, 7):
        assert mixed_degree(a1, [(segment(2), 1), (segment(n), 2)]) == 4 * n ** 2
        assert chern_top_degree(a1, [segment(n)]) == 4 * n
        assert torus_degree(a1, segment(n)) == 2 * n
        assert torus_mixed_degree(a1, [segment(n)]) == 2 * n
    assert chern_top_degree(a1, [segment(1)]) == 4


def test_sl2_mixed_examples(a1):
    for n in range(1, 5):
        assert mixed_degree(a1, [segment(n)] * 3) == 2 * n ** 3
    # oracle: coefficient of t1 t2 t3 in 2 (t1 + 2 t2 + 3 t3)^3, divided by 3!
    t = sympy.symbols("t1:4")
    poly = sympy.Poly(2 * (t[0] + 2 * t[1] + 3 * t[2]) ** 3, *t)
    coeff = poly.coeff_monomial(t[0] * t[1] * t[2]) / 6
    for method in ("differences", "interpolation"):
        assert mixed_degree(a1, [segment(1), segment(2), segment(3)], method) == int(coeff) == 12


def test_sl2_boundary(a1):
    for n in range(1, 5):
        assert boundary_count(a1, [(segment(n), 2)]) == 2 * n ** 2
    assert boundary_count(a1, [(segment(1), 2)]) == 2
    for m in range(1, 4):
        for n in range(1, 4):
            assert boundary_count(a1, [segment(m), segment(n)]) == 2 * m * n


def test_torus_examples(t2):
    assert bk_degree(t2, box(1, 1)) == 2
    tri = convex_hull([(0, 0), (1, 0), (0, 1)])
    assert torus_degree(t2, tri) == 1
    assert bk_degree(t2, tri) == 1
    for a in range(1, 4):
        for b in range(1, 4):
            # oracle: coefficient of t1 t2 in 2 (a t1 + b t2)^2, over 2!
            assert torus_mixed_degree(t2, [box(a, a), box(b, b)]) == 2 * a * b
            assert mixed_degree(t2, [box(a, a), box(b, b)]) == 2 * a * b
    with pytest.raises(PreconditionError):
        chern1_polytope(t2)
    with pytest.raises(PreconditionError):
        chern_top_degree(t2, [box(1, 1), box(1, 1)])


def test_chern1_polytopes(a2, a1a1):
    hexagon = chern1_polytope(a2)
    assert len(hexagon.vertices) == 6 and (2, 2) in hexagon.vertices
    assert chern1_polytope(a1a1) == box(4, 4).translate((-2, -2))


def test_chamber_folding_a1():
    # independent route: n! times the integral over the dominant half [0, n]
    rs = group("A1")
    t = sympy.symbols("t")
    for n in range(1, 6):
        oracle = factorial(rs.n) * sympy.integrate(t ** 2, (t, 0, n))
        assert bk_degree(rs, segment(n)) == int(oracle)


def test_chamber_folding_a2():
    rs = group("A2")
    # dominant part of the hexagon of (1,1): x1, x2 >= 0, 2x1 + x2 <= 3, x1 + 2x2 <= 3
    # integrand (x,a1)^2 (x,a2)^2 (x,a1+a2)^2 / (1 * 1 * 4) = x1^2 x2^2 (x1+x2)^2 / 4
    x1, x2 = sympy.symbols("x1 x2")
    f = x1 ** 2 * x2 ** 2 * (x1 + x2) ** 2 / 4
    half = sympy.Rational(3, 2)
    # symmetric under x1 <-> x2; integrate the half below the diagonal and double
    lower = (sympy.integrate(f, (x2, 0, x1), (x1, 0, 1))
             + sympy.integrate(f, (x2, 0, 3 - 2 * x1), (x1, 1, half)))
    oracle = factorial(rs.n) * 2 * lower
    got = bk_degree(rs, weight_polytope(rs, irreducible([1, 1])))
    assert got == Fraction(int(oracle.p), int(oracle.q))
    assert got.value.denominator == 1


def test_chamber_folding_torus(t2):
    # W trivial: the dominant chamber is everything, so D = 2! * area
    rng_polys = [convex_hull([(0, 0), (3, 1), (1, 4)]), convex_hull([(-1, -1), (2, 0), (2, 2), (0, 3)])]
    for p in rng_polys:
        assert bk_degree(t2, p) == 2 * shoelace(list(p.vertices))


def test_integrality_on_weight_polytopes(a2, b2, g2):
    for rs in (a2, b2, g2):
        for hw in ([1, 0], [0, 1], [1, 1]):
            p = weight_polytope(rs, irreducible(hw))
            d = bk_degree(rs, p)
            assert d.expected_integer and d.value.denominator == 1 and d.value > 0


def test_scaling(a2, b2):
    for rs in (a2, b2):
        p = weight_polytope(rs, irreducible([1, 0]))
        base = bk_degree(rs, p).value
        assert bk_degree(rs, p.scale(2)) == 2 ** rs.n * base


def test_monotonicity(b2):
    small = weight_polytope(b2, irreducible([1, 0]))
    big = weight_polytope(b2, irreducible([1, 1]))
    assert all(big.contains(v) for v in small.vertices)
    assert bk_degree(b2, small).value <= bk_degree(b2, big).value


def test_symmetry_and_diagonal(a2):
    p = weight_polytope(a2, irreducible([1, 0]))
    q = weight_polytope(a2, irreducible([0, 1]))
    a = mixed_degree(a2, [(p, 3), (q, 5)])
    assert a == mixed_degree(a2, [(q, 5), (p, 3)])
    assert a == mixed_degree(a2, [(p, 3), (q, 5)], method="interpolation")
    assert mixed_degree(a2, [(p, 1), (p, 7)]) == bk_degree(a2, p)
    assert mixed_degree(a2, [(p, 0), (q, 8)]) == bk_degree(a2, q)


def test_polarization_of_a_known_polynomial():
    """Cube of segment length is the trilinear form l(P) l(Q) l(R)."""
    p, q = convex_hull([(0,), (1,)]), convex_hull([(0,), (2,)])
    f = lambda s: lattice_volume(s) ** 3
    for method in ("differences", "interpolation"):
        assert polarize(f, [p, q], [2, 1], method) == 2
        assert polarize(f, [p, q], [1, 2], method) == 4
        assert polarize(f, [q], [3], method) == 8


def test_errors(a1, a2):
    with pytest.raises(PreconditionError):
        bk_degree(a2, convex_hull([(0, 0), (1, -1), (-1, 1)]))
    with pytest.raises(PreconditionError):
        bk_degree(a1, convex_hull([(0,), (1,)]))
    with pytest.raises(PreconditionError):
        mixed_degree(a1, [(segment(1), 2)])
    with pytest.raises(PreconditionError):
        boundary_count(a1, [(segment(1), 3)])
    with pytest.raises(SchemaError):
        bk_degree(a1, box(1, 1))
    with pytest.raises(SchemaError):
        mixed_degree(a1, [segment(1)] * 3, method="newton")
    with pytest.raises(InternalError):
        IntersectionNumber(Fraction(1, 2), expected_integer=True)
    assert int(IntersectionNumber(6, True)) == 6


small = st.integers(-3, 3)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.tuples(small, small), min_size=3, max_size=7),
       st.lists(st.tuples(small, small), min_size=3, max_size=7))
def test_torus_mixed_matches_mixed_volume(pa, pb):
    t2 = group(torus_rank=2)
    p, q = convex_hull(pa), convex_hull(pb)
    if not (p.is_full_dimensional and q.is_full_dimensional):
        return
    # two-dimensional mixed volume: V(P+Q) - V(P) - V(Q), with area via shoelace
    s = minkowski_sum(p, q)
    mv = shoelace(list(s.vertices)) - shoelace(list(p.vertices)) - shoelace(list(q.vertices))
    assert torus_mixed_degree(t2, [p, q]) == mv
    assert mixed_degree(t2, [p, q]) == mv
    assert mixed_degree(t2, [p, q], method="interpolation") == mv


@settings(max_examples=10, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.integers(1, 4))
def test_a1_multilinear_closed_form(a, b, c):
    rs = group("A1")
    assert mixed_degree(rs, [segment(a), segment(b), segment(c)]) == 2 * a * b * c
