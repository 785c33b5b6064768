"""Exact polynomial integration over simplices, polytopes and lattice facets.

A simplex integral is computed by writing ``x = sum_i lambda_i v_i`` in
barycentric coordinates, expanding the integrand into a homogeneous
polynomial in ``lambda`` and using

    int_S prod lambda_i^{b_i} dx = |det(v_i - v_0)| * prod b_i! / (d + |b|)!

Integrands that are products of affine forms (the Brion-Kazarnovskii
integrand is one) take a shorter route: each factor becomes a linear form in
``lambda`` and the product is expanded directly.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Mapping, Sequence, Union

from .errors import InternalError, PreconditionError, ResourceCapError, SchemaError
from .linalg import inverse, mat_vec, unimodular_completion
from .polytope import Facet, RationalPolytope, Simplex, convex_hull, triangulate
from .rootsys import RootSystemData

MAX_POSITIVE_ROOTS = 12

Exponent = tuple[int, ...]


class MultivariatePolynomial:
    """Sparse polynomial with ``Fraction`` coefficients in ``nvars`` variables."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, object] | None = None):
        self.nvars = nvars
        clean: dict[Exponent, Fraction] = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != nvars:
                raise SchemaError(f"exponent {e} does not have {nvars} entries")
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, Fraction(0)) + c
                if not clean[e]:
                    del clean[e]
        self.terms = clean

    @classmethod
    def constant(cls, nvars, c) -> "MultivariatePolynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars, i) -> "MultivariatePolynomial":
        return cls(nvars, {tuple(int(j == i) for j in range(nvars)): 1})

    @classmethod
    def linear(cls, coeffs: Sequence, const=0) -> "MultivariatePolynomial":
        n = len(coeffs)
        t = {tuple(int(j == i) for j in range(n)): c for i, c in enumerate(coeffs)}
        t[(0,) * n] = const
        return cls(n, t)

    def _coerce(self, other) -> "MultivariatePolynomial":
        if isinstance(other, MultivariatePolynomial):
            if other.nvars != self.nvars:
                raise SchemaError("polynomials in different numbers of variables")
            return other
        return MultivariatePolynomial.constant(self.nvars, other)

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = t.get(e, Fraction(0)) + c
        return MultivariatePolynomial(self.nvars, t)

    __radd__ = __add__

    def __neg__(self):
        return MultivariatePolynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return MultivariatePolynomial(self.nvars, _mul_terms(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise SchemaError("negative powers are not polynomials")
        result = MultivariatePolynomial.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, MultivariatePolynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        return self == self._coerce(other)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            mono = "*".join(f"x{i}^{a}" if a > 1 else f"x{i}" for i, a in enumerate(e) if a)
            parts.append(f"({self.terms[e]})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def __call__(self, x: Sequence) -> Fraction:
        if len(x) != self.nvars:
            raise SchemaError(f"expected {self.nvars} coordinates, got {len(x)}")
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for xi, a in zip(x, e):
                if a:
                    term *= Fraction(xi) ** a
            total += term
        return total

    def compose_affine(self, matrix: Sequence[Sequence], shift: Sequence) -> "MultivariatePolynomial":
        """``f(A y + b)`` as a polynomial in ``y`` (``A`` is nvars x m)."""
        m = len(matrix[0]) if matrix else 0
        forms = [MultivariatePolynomial.linear(row, b) if m else
                 MultivariatePolynomial.constant(0, b) for row, b in zip(matrix, shift)]
        return _substitute(self, forms, m)


def _mul_terms(a: Mapping[Exponent, Fraction], b: Mapping[Exponent, Fraction]):
    out: dict[Exponent, Fraction] = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def _substitute(f: MultivariatePolynomial, forms: Sequence[MultivariatePolynomial], m: int):
    powers: dict[tuple[int, int], MultivariatePolynomial] = {}

    def pw(j, a):
        if (j, a) not in powers:
            powers[(j, a)] = MultivariatePolynomial.constant(m, 1) if a == 0 else pw(j, a - 1) * forms[j]
        return powers[(j, a)]

    total = MultivariatePolynomial(m)
    for e, c in f.terms.items():
        term = MultivariatePolynomial.constant(m, c)
        for j, a in enumerate(e):
            if a:
                term = term * pw(j, a)
        total = total + term
    return total


@dataclass(frozen=True)
class LinearFormProduct:
    """``scale * prod_j (<coeffs_j, x> + const_j)``."""

    nvars: int
    factors: tuple[tuple[tuple[Fraction, ...], Fraction], ...]
    scale: Fraction = Fraction(1)

    @property
    def degree(self) -> int:
        return len(self.factors)

    def __call__(self, x: Sequence) -> Fraction:
        v = self.scale
        for c, c0 in self.factors:
            v *= sum((a * Fraction(b) for a, b in zip(c, x)), Fraction(0)) + c0
        return v

    def expand(self) -> MultivariatePolynomial:
        p = MultivariatePolynomial.constant(self.nvars, self.scale)
        for c, c0 in self.factors:
            p = p * MultivariatePolynomial.linear(c, c0)
        return p

    def compose_affine(self, matrix: Sequence[Sequence], shift: Sequence) -> "LinearFormProduct":
        m = len(matrix[0]) if matrix else 0
        cols = list(zip(*matrix)) if m else []
        new = []
        for c, c0 in self.factors:
            nc = tuple(sum((a * b for a, b in zip(c, col)), Fraction(0)) for col in cols)
            new.append((nc, c0 + sum((a * Fraction(b) for a, b in zip(c, shift)), Fraction(0))))
        return LinearFormProduct(m, tuple(new), self.scale)


Integrand = Union[MultivariatePolynomial, LinearFormProduct]


def bk_linear_forms(rs: RootSystemData, max_positive_roots: int = MAX_POSITIVE_ROOTS
                    ) -> LinearFormProduct:
    """The Brion-Kazarnovskii integrand ``prod_{alpha>0} (x,alpha)^2 / (rho,alpha)^2``."""
    if len(rs.positive_roots) > max_positive_roots:
        raise ResourceCapError(
            f"{len(rs.positive_roots)} positive roots exceeds the degree cap {max_positive_roots}")
    factors = []
    scale = Fraction(1)
    for alpha in rs.positive_roots:
        cov = tuple(Fraction(c) for c in rs.covector(alpha))
        scale /= rs.form(rs.rho, alpha) ** 2
        factors += [(cov, Fraction(0)), (cov, Fraction(0))]
    return LinearFormProduct(rs.k, tuple(factors), scale)


def bk_integrand(rs: RootSystemData, max_positive_roots: int = MAX_POSITIVE_ROOTS
                 ) -> MultivariatePolynomial:
    """Expanded form of :func:`bk_linear_forms`; homogeneous of degree ``2|R+|``."""
    return bk_linear_forms(rs, max_positive_roots).expand()


# ---------------------------------------------------------------- simplices


def _lambda_poly(f: Integrand, verts: Sequence[Sequence[Fraction]]) -> dict[Exponent, Fraction]:
    m = len(verts)
    if isinstance(f, LinearFormProduct):
        poly: dict[Exponent, Fraction] = {(0,) * m: f.scale}
        for c, c0 in f.factors:
            lin = {}
            for i, v in enumerate(verts):
                val = sum((a * b for a, b in zip(c, v)), Fraction(0)) + c0
                if val:
                    lin[tuple(int(j == i) for j in range(m))] = val
            poly = _mul_terms(poly, lin)
            if not poly:
                break
        return poly
    forms = [MultivariatePolynomial(m, {tuple(int(j == i) for j in range(m)): v[jx]
                                        for i, v in enumerate(verts)})
             for jx in range(f.nvars)]
    return _substitute(f, forms, m).terms


def _dirichlet(poly: Mapping[Exponent, Fraction], d: int) -> Fraction:
    total = Fraction(0)
    for b, c in poly.items():
        num = 1
        for x in b:
            num *= factorial(x)
        total += c * Fraction(num, factorial(d + sum(b)))
    return total


def integrate_over_simplex(f: Integrand, s: Simplex) -> Fraction:
    if f.nvars != s.dim:
        raise SchemaError(f"integrand has {f.nvars} variables, simplex has dimension {s.dim}")
    jac = abs(s.signed_volume_times_factorial())
    if jac == 0:
        raise PreconditionError("degenerate simplex")
    return jac * _dirichlet(_lambda_poly(f, s.vertices), s.dim)


def integrate_over_polytope(f: Integrand, p: RationalPolytope, method: str = "centroid") -> Fraction:
    if not p.is_full_dimensional:
        raise PreconditionError(
            f"integration needs a full-dimensional polytope (affine dimension {p.affine_dim})")
    return sum((integrate_over_simplex(f, s) for s in triangulate(p, method)), Fraction(0))


# ------------------------------------------------------------------- facets


def facet_chart(facet: Facet, base: Sequence[Fraction]):
    """Lattice chart of the facet hyperplane.

    Returns ``(B, to_local)`` where ``x = base + B y`` parametrises the
    hyperplane, the columns of ``B`` form a Z-basis of the direction lattice
    ``{x in Z^d : <normal, x> = 0}``, and ``to_local`` maps points of the
    hyperplane to ``y``.
    """
    u = facet.normal
    d = len(u)
    try:
        big_u = unimodular_completion(u)
    except InternalError as exc:
        raise InternalError(f"facet normal {u} is not primitive") from exc
    uinv = inverse(big_u)
    b = [row[1:] for row in big_u]

    def to_local(x):
        coords = mat_vec(uinv, [Fraction(a) - Fraction(c) for a, c in zip(x, base)])
        if coords[0] != 0:
            raise InternalError("point does not lie on the facet hyperplane")
        return tuple(coords[1:])

    return b, to_local


def integrate_over_facet(f: Integrand, p: RationalPolytope, facet: Facet) -> Fraction:
    """Integral over a facet, measured so its direction lattice has covolume 1."""
    if not p.is_full_dimensional:
        raise PreconditionError("facet integrals need a full-dimensional polytope")
    verts = p.facet_vertices(facet)
    if not verts:
        raise SchemaError("facet does not belong to this polytope")
    base = verts[0]
    b, to_local = facet_chart(facet, base)
    g = f.compose_affine(b, base)
    local = convex_hull([to_local(v) for v in verts])
    if not local.is_full_dimensional:
        raise InternalError("facet is not (d-1)-dimensional")
    return integrate_over_polytope(g, local)


def integrate_over_boundary(f: Integrand, p: RationalPolytope) -> Fraction:
    return sum((integrate_over_facet(f, p, F) for F in p.facets), Fraction(0))
