import random
from fractions import Fraction
from itertools import product
from math import factorial

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from bkcalc.adjunction import (AdjunctionTerm, adjunction_series, chi_complete_intersection,
                               curve_chi, curve_genus, curve_invariants, hypersurface_chi,
                               inclusion_exclusion_identity_check)
from bkcalc.degrees import bk_degree, chern_top_degree, mixed_degree
from bkcalc.errors import PreconditionError, SchemaError
from bkcalc.polytope import convex_hull, irreducible, lattice_volume
from bkcalc.rootsys import group

from conftest import box, segment


def series_oracle(m, n, k):
    """Degree-n part of (1 + S_1 + ... + S_{n-k}) prod H_i / (1 + H_i), via sympy."""
    h = sympy.symbols(f"h1:{m + 1}")
    s = sympy.symbols(f"s0:{n - k + 1}")
    x = sympy.symbols("x")
    g = sympy.Poly(sympy.series(x / (1 + x), x, 0, n + 1).removeO(), x)
    # graded pieces, truncated above degree n
    acc = [s[j] if j <= n - k else 0 for j in range(n + 1)]
    for hi in h:
        factor = [g.coeff_monomial(x ** d) * hi ** d for d in range(n + 1)]
        acc = [sympy.expand(sum(acc[a] * factor[d - a] for a in range(d + 1)))
               for d in range(n + 1)]
    out = {}
    for mono, c in sympy.Poly(acc[n], *s, *h).terms():
        j = next(i for i in range(n - k + 1) if mono[i])
        out[(j, tuple(mono[n - k + 1:]))] = int(c)
    return out


@pytest.mark.parametrize("m,n,k", [(1, 3, 1), (2, 3, 1), (3, 3, 1), (1, 6, 2), (2, 6, 2),
                                   (3, 8, 2), (5, 6, 2), (2, 4, 4), (4, 8, 2), (4, 14, 2)])
def test_series_matches_formal_expansion(m, n, k):
    terms = adjunction_series(m, n, k)
    got = {(t.chern_index, t.exponents): t.sign for t in terms}
    assert got == series_oracle(m, n, k)
    for t in terms:
        assert t.degree == n and all(e >= 1 for e in t.exponents)
        assert t.evaluable == (t.chern_index in (0, 1, n - k))


def test_series_examples():
    terms = adjunction_series(1, 3, 1)
    assert [(t.chern_index, t.exponents, t.sign) for t in terms] == [
        (0, (3,), 1), (1, (2,), -1), (2, (1,), 1)]
    assert [str(t) for t in terms] == ["+ deg(H_1^3)", "- deg(S_1 · H_1^2)", "+ deg(S_2 · H_1)"]
    assert adjunction_series(4, 4, 2) == [AdjunctionTerm(0, (1, 1, 1, 1), True)]
    assert adjunction_series(5, 4, 2) == []
    with pytest.raises(SchemaError):
        adjunction_series(0, 3, 1)


@pytest.mark.parametrize("n,k", [(3, 1), (6, 2), (8, 2), (14, 2), (10, 4)])
def test_curve_series_uses_first_chern_class_only(n, k):
    terms = adjunction_series(n - 1, n, k)
    assert {t.chern_index for t in terms} <= {0, 1}
    assert all(t.evaluable for t in terms)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 10), st.integers(1, 8), st.integers(0, 4))
def test_no_term_beyond_top_chern_class(m, n, k):
    k = min(k, n)
    for t in adjunction_series(m, n, k):
        assert 0 <= t.chern_index <= n - k
        assert t.sign == (-1) ** sum(e - 1 for e in t.exponents)


def test_sl2_chi(a1):
    for n in range(1, 7):
        res = chi_complete_intersection(a1, [segment(n)])
        assert res.is_numeric and res.value == 2 * n ** 3 - 4 * n ** 2 + 4 * n
        assert hypersurface_chi(a1, segment(n)).value == res.value
    assert chi_complete_intersection(a1, [irreducible([1])]).value == 2


def test_chi_alternating_sum_term_by_term(a1, a1a1):
    for rs, p in ((a1, segment(3)), (a1a1, box(2, 4).translate((-1, -2)))):
        n = rs.n
        res = chi_complete_intersection(rs, [p])
        alt = hypersurface_chi(rs, p)
        assert [(t, v) for t, v in res.evaluated] == [(t, v) for t, v in alt.evaluated]
        assert [str(t) for t in res.symbolic_residual] == [str(t) for t in alt.symbolic_residual]
        by_index = {t.chern_index: v for t, v in res.evaluated}
        assert by_index[0] == bk_degree(rs, p)
        assert by_index[n - rs.k] == chern_top_degree(rs, [(p, rs.k)])


def test_symbolic_terms_are_kept(a1a1):
    res = chi_complete_intersection(a1a1, [box(2, 4).translate((-1, -2))])
    assert not res.is_numeric and res.value is None
    assert [str(t) for t in res.symbolic_residual] == ["- deg(S_2 · H_1^4)", "+ deg(S_3 · H_1^3)"]
    assert "deg(S_2 · H_1^4)" in str(res)


def test_torus_chi():
    rng = random.Random(3)
    for r in (1, 2, 3):
        rs = group(torus_rank=r)
        for _ in range(3):
            while True:
                p = convex_hull([tuple(rng.randint(-2, 2) for _ in range(r)) for _ in range(r + 3)])
                if p.is_full_dimensional:
                    break
            res = chi_complete_intersection(rs, [p])
            assert res.value == (-1) ** (r - 1) * factorial(r) * lattice_volume(p)


def test_sl2_curves(a1):
    for m in range(1, 4):
        for n in range(1, 4):
            assert curve_chi(a1, [segment(m), segment(n)]) == -2 * m * n * (m + n - 2)
    inv = curve_invariants(a1, [segment(1), segment(1)])
    assert (inv.chi, inv.boundary_points, inv.genus, inv.chi_compact) == (0, 2, 0, 2)
    assert curve_genus(a1, [segment(1), segment(2)]) == 1
    inv = curve_invariants(a1, [segment(2), segment(2)])
    assert (inv.chi, inv.boundary_points, inv.genus) == (-16, 8, 5)


def test_curve_generic_path_matches_shortcut(a1, a1a1):
    for rs, ps in ((a1, [segment(2), segment(3)]),
                   (a1a1, [box(2, 2).translate((-1, -1)), box(2, 4).translate((-1, -2)),
                           box(4, 2).translate((-2, -1)), box(2, 2).translate((-1, -1)),
                           box(2, 4).translate((-1, -2))])):
        res = chi_complete_intersection(rs, ps)
        assert res.is_numeric
        assert res.value == curve_chi(rs, ps)


def test_torus_curve_genus_counts_interior_points():
    t2 = group(torus_rank=2)
    rng = random.Random(11)
    for _ in range(6):
        while True:
            p = convex_hull([(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(5)])
            if p.is_full_dimensional:
                break
        interior = sum(1 for x, y in product(range(-3, 4), repeat=2)
                       if all(f.value((x, y)) < 0 for f in p.facets))
        assert curve_genus(t2, [p]) == interior


def test_curve_errors(a1):
    with pytest.raises(PreconditionError):
        curve_chi(a1, [segment(1)])
    with pytest.raises(PreconditionError):
        chi_complete_intersection(a1, [convex_hull([(0,)])])


@pytest.mark.parametrize("l", range(1, 7))
def test_inclusion_exclusion_identity(l):
    assert inclusion_exclusion_identity_check(l)


def test_identity_cap():
    with pytest.raises(PreconditionError):
        inclusion_exclusion_identity_check(0)
    with pytest.raises(PreconditionError):
        inclusion_exclusion_identity_check(11)
