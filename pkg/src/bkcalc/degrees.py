"""Brion-Kazarnovskii degrees, their polarizations, and Chern-class degrees.

Every degree here is a homogeneous polynomial functional ``F`` on polytopes.
Mixed values are read off from ``F(t_1 P_1 + ... + t_m P_m)`` on the open
positive orthant, where the normal fan of the sum is constant and ``F`` is a
polynomial in ``t``.  Two exact extraction routes are available:

* ``"differences"``: the mixed forward difference ``Delta^r F(1,...,1)``
  equals ``prod r_i! * [t^r] F``; it needs ``prod (r_i + 1)`` evaluations.
* ``"interpolation"``: solve for all coefficients of ``F(t', 1)`` on the
  principal lattice ``{1 + a : |a| <= N}`` and read off ``[t^r]``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb, factorial, prod
from typing import Callable, Sequence, Union

from .errors import InternalError, PreconditionError, SchemaError
from .integrate import (MAX_POSITIVE_ROOTS, bk_linear_forms, integrate_over_boundary,
                        integrate_over_polytope)
from .linalg import rref
from .polytope import (RationalPolytope, check_weyl_invariant, lattice_volume,
                       linear_combination, orbit_polytope)
from .rootsys import RootSystemData


@dataclass(frozen=True)
class IntersectionNumber:
    value: Fraction
    expected_integer: bool = False

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))
        if self.expected_integer:
            if self.value.denominator != 1:
                raise InternalError(f"intersection number {self.value} is not an integer")
            if self.value < 0:
                raise InternalError(f"intersection number {self.value} is negative")

    def __int__(self):
        if self.value.denominator != 1:
            raise ValueError(f"{self.value} is not an integer")
        return int(self.value)

    def __eq__(self, other):
        if isinstance(other, IntersectionNumber):
            return self.value == other.value
        return self.value == other

    def __hash__(self):
        return hash(self.value)


PolyArg = Union[RationalPolytope, tuple]


def _normalize(polys: Sequence[PolyArg]) -> tuple[list[RationalPolytope], list[int]]:
    ps, ms = [], []
    for item in polys:
        if isinstance(item, RationalPolytope):
            p, m = item, 1
        else:
            p, m = item
        if not isinstance(p, RationalPolytope):
            raise SchemaError("expected a polytope or a (polytope, multiplicity) pair")
        m = int(m)
        if m < 0:
            raise SchemaError("multiplicities must be nonnegative")
        if m == 0:
            continue
        ps.append(p)
        ms.append(m)
    return ps, ms


def _is_lattice(p: RationalPolytope) -> bool:
    return all(x.denominator == 1 for v in p.vertices for x in v)


def _check_inputs(rs: RootSystemData, ps: Sequence[RationalPolytope]):
    for p in ps:
        if p.dim_ambient != rs.k:
            raise SchemaError(f"polytope lives in dimension {p.dim_ambient}, group rank is {rs.k}")
        check_weyl_invariant(rs, p)
    total = linear_combination(ps, [1] * len(ps))
    if not total.is_full_dimensional:
        raise PreconditionError(
            "representation not faithful enough: weight polytope not full-dimensional "
            f"(affine dimension {total.affine_dim} < rank {rs.k})")


# ------------------------------------------------------------ polarization


def polarize(func: Callable[[RationalPolytope], Fraction], polys: Sequence[RationalPolytope],
             mults: Sequence[int], method: str = "differences") -> Fraction:
    """Symmetric multilinear form of a homogeneous functional of degree ``sum(mults)``.

    Returns ``D_pol(P_1^{r_1}, ..., P_m^{r_m})``, i.e. the coefficient of
    ``prod t_i^{r_i}`` in ``func(sum t_i P_i)`` divided by the multinomial
    ``N! / prod r_i!``.
    """
    total = sum(mults)
    cache: dict[tuple[int, ...], Fraction] = {}

    def F(t):
        if t not in cache:
            cache[t] = func(linear_combination(polys, t))
        return cache[t]

    m = len(polys)
    if m == 0:
        raise SchemaError("polarization of an empty list")
    if method == "differences":
        acc = Fraction(0)
        for s in product(*(range(r + 1) for r in mults)):
            sign = -1 if (total - sum(s)) % 2 else 1
            acc += sign * prod(comb(r, x) for r, x in zip(mults, s)) * F(tuple(1 + x for x in s))
        return acc / factorial(total)
    if method == "interpolation":
        coeff = _interpolated_coefficient(F, m, total, tuple(mults))
        return coeff * prod(factorial(r) for r in mults) / factorial(total)
    raise SchemaError(f"unknown polarization method {method!r}")


def _interpolated_coefficient(F, m: int, degree: int, target: tuple[int, ...]) -> Fraction:
    if m == 1:
        return F((1,))
    # dehomogenize at t_m = 1; monomials of total degree <= N in m-1 variables
    monos = [a for a in product(range(degree + 1), repeat=m - 1) if sum(a) <= degree]
    rows = []
    for a in monos:
        t = tuple(1 + x for x in a) + (1,)
        val = F(t)
        rows.append([Fraction(prod(ti ** e for ti, e in zip(t[:-1], mono))) for mono in monos]
                    + [val])
    red, pivots = rref(rows)
    if pivots != list(range(len(monos))):
        raise InternalError("interpolation grid is not unisolvent")
    idx = monos.index(target[:-1])
    return red[idx][-1]


# ---------------------------------------------------------------- degrees


def _bk_value(rs: RootSystemData, p: RationalPolytope, max_positive_roots: int) -> Fraction:
    f = bk_linear_forms(rs, max_positive_roots)
    return Fraction(factorial(rs.n), rs.weyl_order) * integrate_over_polytope(f, p)


def bk_degree(rs: RootSystemData, p: RationalPolytope,
              max_positive_roots: int = MAX_POSITIVE_ROOTS) -> IntersectionNumber:
    """Self-intersection index ``H^n`` of a hyperplane section with weight polytope ``p``.

    Integrates over the whole polytope and divides by ``|W|`` instead of
    restricting to the dominant chamber; both the polytope and the integrand
    are Weyl-invariant.
    """
    _check_inputs(rs, [p])
    return IntersectionNumber(_bk_value(rs, p, max_positive_roots), _is_lattice(p))


def mixed_degree(rs: RootSystemData, polys: Sequence[PolyArg], method: str = "differences",
                 max_positive_roots: int = MAX_POSITIVE_ROOTS) -> IntersectionNumber:
    """Intersection index ``H_1^{r_1} ... H_m^{r_m}`` with ``sum r_i = n``."""
    ps, ms = _normalize(polys)
    if sum(ms) != rs.n:
        raise PreconditionError(f"multiplicities sum to {sum(ms)}, need n = {rs.n}")
    _check_inputs(rs, ps)
    val = polarize(lambda q: _bk_value(rs, q, max_positive_roots), ps, ms, method)
    return IntersectionNumber(val, all(map(_is_lattice, ps)))


def _torus_value(rs: RootSystemData, p: RationalPolytope) -> Fraction:
    return factorial(rs.k) * lattice_volume(p)


def torus_degree(rs: RootSystemData, p: RationalPolytope) -> IntersectionNumber:
    """Degree of the image of a maximal torus: ``k!`` times the lattice volume."""
    if p.dim_ambient != rs.k:
        raise SchemaError(f"polytope lives in dimension {p.dim_ambient}, group rank is {rs.k}")
    if not p.is_full_dimensional:
        raise PreconditionError(
            f"weight polytope not full-dimensional (affine dimension {p.affine_dim})")
    return IntersectionNumber(_torus_value(rs, p), _is_lattice(p))


def torus_mixed_degree(rs: RootSystemData, polys: Sequence[PolyArg],
                       method: str = "differences") -> IntersectionNumber:
    ps, ms = _normalize(polys)
    if sum(ms) != rs.k:
        raise PreconditionError(f"multiplicities sum to {sum(ms)}, need k = {rs.k}")
    for p in ps:
        if p.dim_ambient != rs.k:
            raise SchemaError(f"polytope lives in dimension {p.dim_ambient}, group rank is {rs.k}")
    if not linear_combination(ps, [1] * len(ps)).is_full_dimensional:
        raise PreconditionError("Minkowski sum of the polytopes is not full-dimensional")
    val = polarize(lambda q: _torus_value(rs, q), ps, ms, method)
    return IntersectionNumber(val, all(map(_is_lattice, ps)))


def chern1_polytope(rs: RootSystemData) -> RationalPolytope:
    """Weight polytope of the irreducible representation with highest weight ``2 rho``."""
    if rs.is_torus:
        raise PreconditionError("S_1 vanishes for tori: all Chern classes are zero")
    return orbit_polytope(rs, rs.two_rho)


def chern_top_degree(rs: RootSystemData, polys: Sequence[PolyArg],
                     method: str = "differences") -> IntersectionNumber:
    """``S_{n-k} . H_1^{r_1} ... H_m^{r_m}`` via ``[S_{n-k}] = |W| [T]``."""
    if rs.is_torus:
        raise PreconditionError("no top Chern class for a torus (n - k = 0)")
    t = torus_mixed_degree(rs, polys, method)
    return IntersectionNumber(rs.weyl_order * t.value, t.expected_integer)


def _boundary_value(rs: RootSystemData, p: RationalPolytope, max_positive_roots: int) -> Fraction:
    f = bk_linear_forms(rs, max_positive_roots)
    return (Fraction(factorial(rs.n - 1), rs.weyl_order) * integrate_over_boundary(f, p))


def boundary_count(rs: RootSystemData, polys: Sequence[PolyArg], method: str = "differences",
                   max_positive_roots: int = MAX_POSITIVE_ROOTS) -> IntersectionNumber:
    """Number of points added when compactifying the curve ``H_1^{r_1} ... H_m^{r_m}``.

    Uses the Weyl-averaged sum over all facets with lattice-normalised facet
    measure; mixed multiplicities go through :func:`polarize`.
    """
    ps, ms = _normalize(polys)
    if sum(ms) != rs.n - 1:
        raise PreconditionError(f"multiplicities sum to {sum(ms)}, need n - 1 = {rs.n - 1}")
    _check_inputs(rs, ps)
    val = polarize(lambda q: _boundary_value(rs, q, max_positive_roots), ps, ms, method)
    return IntersectionNumber(val, all(map(_is_lattice, ps)))
