"""Euler characteristics of generic complete intersections in reductive groups.

chi(H_1 cap ... cap H_m) is the degree-n part of

    (1 + S_1 + ... + S_{n-k}) * prod_i H_i (1 + H_i)^{-1}

so every term is ``+-S_j * prod H_i^{e_i}`` with ``e_i >= 1`` and
``j + sum e_i = n``.  Only ``S_0 = G``, ``S_1`` (a hyperplane section for the
highest weight ``2 rho``) and ``S_{n-k} = |W| [T]`` can be evaluated; other
terms are returned symbolically.  The collection of sections is assumed to
be generic; the numbers are the generic values.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence, Union

from .degrees import (IntersectionNumber, bk_degree, boundary_count, chern1_polytope,
                      chern_top_degree, mixed_degree)
from .errors import InternalError, PreconditionError, SchemaError
from .integrate import MultivariatePolynomial
from .polytope import RationalPolytope, RepresentationSpec, weight_polytope
from .rootsys import RootSystemData

IDENTITY_CAP = 10


@dataclass(frozen=True)
class AdjunctionTerm:
    chern_index: int
    exponents: tuple[int, ...]
    evaluable: bool

    @property
    def sign(self) -> int:
        return -1 if sum(e - 1 for e in self.exponents) % 2 else 1

    @property
    def degree(self) -> int:
        return self.chern_index + sum(self.exponents)

    def label(self) -> str:
        parts = [f"S_{self.chern_index}"] if self.chern_index else []
        for i, e in enumerate(self.exponents, 1):
            parts.append(f"H_{i}" if e == 1 else f"H_{i}^{e}")
        return " · ".join(parts)

    def __str__(self):
        return f"{'+' if self.sign > 0 else '-'} deg({self.label()})"


def _compositions(total: int, parts: int):
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(total - parts + 1, 0, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def adjunction_series(m: int, n: int, k: int) -> list[AdjunctionTerm]:
    if m <= 0:
        raise SchemaError("need at least one hyperplane section")
    if not 0 <= k <= n:
        raise SchemaError(f"rank {k} must lie between 0 and the dimension {n}")
    top = n - k
    out = []
    for j in range(top + 1):
        for e in _compositions(n - j, m):
            out.append(AdjunctionTerm(j, e, j in (0, 1, top)))
    return out


@dataclass
class ChiResult:
    value: int | Fraction | None
    evaluated: list[tuple[AdjunctionTerm, Fraction]] = field(default_factory=list)
    symbolic_residual: list[AdjunctionTerm] = field(default_factory=list)

    @property
    def is_numeric(self) -> bool:
        return not self.symbolic_residual

    @property
    def partial_value(self) -> Fraction:
        return sum((t.sign * v for t, v in self.evaluated), Fraction(0))

    def __str__(self):
        if self.is_numeric:
            return str(self.value)
        return " ".join([str(self.partial_value)] + [str(t) for t in self.symbolic_residual])


Section = Union[RationalPolytope, RepresentationSpec]


def as_polytope(rs: RootSystemData, x: Section) -> RationalPolytope:
    if isinstance(x, RationalPolytope):
        return x
    if isinstance(x, RepresentationSpec):
        return weight_polytope(rs, x)
    raise SchemaError(f"expected a representation or a polytope, got {type(x).__name__}")


def _polytopes(rs, sections: Sequence[Section]) -> list[RationalPolytope]:
    ps = [as_polytope(rs, s) for s in sections]
    for i, p in enumerate(ps, 1):
        if not p.is_full_dimensional:
            raise PreconditionError(
                f"representation not faithful enough: weight polytope of section {i} "
                f"has affine dimension {p.affine_dim} < rank {rs.k}")
    return ps


def _collect(pairs: Sequence[tuple[RationalPolytope, int]]) -> list[tuple[RationalPolytope, int]]:
    out: list[list] = []
    for p, e in pairs:
        for item in out:
            if item[0] == p:
                item[1] += e
                break
        else:
            out.append([p, e])
    return [(p, e) for p, e in out if e]


def evaluate_term(rs: RootSystemData, term: AdjunctionTerm, ps: Sequence[RationalPolytope]
                  ) -> IntersectionNumber:
    """Unsigned intersection number ``S_j . prod H_i^{e_i}``."""
    if not term.evaluable:
        raise PreconditionError(f"no formula for S_{term.chern_index}")
    pairs = list(zip(ps, term.exponents))
    j = term.chern_index
    if j == 0:
        return mixed_degree(rs, _collect(pairs))
    if j == rs.n - rs.k:
        return chern_top_degree(rs, _collect(pairs))
    if j == 1:
        return mixed_degree(rs, _collect([(chern1_polytope(rs), 1)] + pairs))
    raise InternalError(f"term {term} marked evaluable but has no rule")


def chi_complete_intersection(rs: RootSystemData, sections: Sequence[Section]) -> ChiResult:
    ps = _polytopes(rs, sections)
    terms = adjunction_series(len(ps), rs.n, rs.k)
    evaluated, residual = [], []
    for t in terms:
        if t.evaluable:
            evaluated.append((t, evaluate_term(rs, t, ps).value))
        else:
            residual.append(t)
    res = ChiResult(None, evaluated, residual)
    if not residual:
        res.value = _as_int(res.partial_value)
    return res


def hypersurface_chi(rs: RootSystemData, section: Section) -> ChiResult:
    """``chi = sum_i (-1)^{n-i-1} deg S_i`` for a single section, term by term."""
    (p,) = _polytopes(rs, [section])
    n, k = rs.n, rs.k
    evaluated, residual = [], []
    for i in range(n - k + 1):
        t = AdjunctionTerm(i, (n - i,), i in (0, 1, n - k))
        if not t.evaluable:
            residual.append(t)
            continue
        if i == 0:
            deg = bk_degree(rs, p)
        elif i == n - k:
            deg = chern_top_degree(rs, [(p, k)])
        else:
            deg = mixed_degree(rs, [(chern1_polytope(rs), 1), (p, n - 1)])
        if (-1) ** (n - i - 1) != t.sign:
            raise InternalError("sign bookkeeping mismatch")
        evaluated.append((t, deg.value))
    res = ChiResult(None, evaluated, residual)
    if not residual:
        res.value = _as_int(res.partial_value)
    return res


def _as_int(x: Fraction):
    return int(x) if x.denominator == 1 else x


def _curve_polytopes(rs, sections):
    ps = _polytopes(rs, sections)
    if len(ps) != rs.n - 1:
        raise PreconditionError(f"a curve needs n - 1 = {rs.n - 1} sections, got {len(ps)}")
    if rs.is_torus and rs.n == 1:
        raise PreconditionError("a rank-one torus has no curves cut out by sections")
    return ps


def curve_chi(rs: RootSystemData, sections: Sequence[Section]) -> int | Fraction:
    """``chi(C) = (S_1 - H_1 - ... - H_{n-1}) . H_1 ... H_{n-1}``."""
    ps = _curve_polytopes(rs, sections)
    base = [(p, 1) for p in ps]
    if rs.is_torus:
        total = Fraction(0)
    else:
        total = mixed_degree(rs, _collect([(chern1_polytope(rs), 1)] + base)).value
    for p in ps:
        total -= mixed_degree(rs, _collect([(p, 1)] + base)).value
    return _as_int(total)


@dataclass(frozen=True)
class CurveInvariants:
    chi: int
    boundary_points: int
    genus: int

    @property
    def chi_compact(self) -> int:
        return self.chi + self.boundary_points


def curve_invariants(rs: RootSystemData, sections: Sequence[Section]) -> CurveInvariants:
    ps = _curve_polytopes(rs, sections)
    chi = curve_chi(rs, ps)
    b = boundary_count(rs, _collect([(p, 1) for p in ps])).value
    total = chi + b
    if Fraction(total).denominator != 1 or total % 2:
        raise InternalError(f"chi of the compactified curve is {total}, which is not even")
    genus = 1 - total // 2
    if genus < 0:
        raise InternalError(f"negative genus {genus}")
    return CurveInvariants(int(chi), int(b), int(genus))


def curve_genus(rs: RootSystemData, sections: Sequence[Section]) -> int:
    return curve_invariants(rs, sections).genus


def inclusion_exclusion_identity_check(l: int, cap: int = IDENTITY_CAP) -> bool:
    """Expand ``sum_{I + J = [l]} (-1)^|I| prod_I x_i prod_J (1 + x_j)`` and compare with 1."""
    if not 1 <= l <= cap:
        raise PreconditionError(f"l = {l} outside 1..{cap}")
    one = MultivariatePolynomial.constant(l, 1)
    xs = [MultivariatePolynomial.variable(l, i) for i in range(l)]
    total = MultivariatePolynomial(l)
    for size in range(l + 1):
        for subset in combinations(range(l), size):
            term = one * (-1) ** size
            for i in range(l):
                term = term * (xs[i] if i in subset else one + xs[i])
            total = total + term
    return total == one
