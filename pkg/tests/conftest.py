import math
from fractions import Fraction
from itertools import product

import pytest

from bkcalc.polytope import convex_hull
from bkcalc.rootsys import group


@pytest.fixture(scope="session")
def a1():
    return group("A1")


@pytest.fixture(scope="session")
def a2():
    return group("A2")


@pytest.fixture(scope="session")
def b2():
    return group("B2")


@pytest.fixture(scope="session")
def g2():
    return group("G2")


@pytest.fixture(scope="session")
def a1a1():
    return group("A1", "A1")


@pytest.fixture(scope="session")
def t2():
    return group(torus_rank=2)


def segment(n):
    return convex_hull([(-n,), (n,)])


def box(*sides):
    return convex_hull(list(product(*[(0, s) for s in sides])))


def shoelace(poly_vertices):
    """Area of a convex polygon from its vertices (any order)."""
    cx = sum(Fraction(v[0]) for v in poly_vertices) / len(poly_vertices)
    cy = sum(Fraction(v[1]) for v in poly_vertices) / len(poly_vertices)
    ordered = sorted(poly_vertices,
                     key=lambda v: math.atan2(float(v[1] - cy), float(v[0] - cx)))
    area = Fraction(0)
    for (x0, y0), (x1, y1) in zip(ordered, ordered[1:] + ordered[:1]):
        area += Fraction(x0) * y1 - Fraction(x1) * y0
    return abs(area) / 2
