"""Root data, Weyl groups and the invariant form of a reductive group.

A group is described by its simple factors (Cartan type and rank) plus a
central torus of rank ``torus_rank``.  All vectors live in a fixed basis of
the character lattice: fundamental weights (``lattice="weight"``) or simple
roots (``lattice="root"``) for each simple factor, followed by the standard
basis of the central torus.  Lebesgue measure in these coordinates gives the
lattice covolume 1.

The invariant form is normalised per simple factor so that short roots have
squared length 2.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, prod
from typing import Iterable, Sequence

from .errors import ResourceCapError, SchemaError
from .linalg import inverse, mat_mul, mat_vec, transpose

DEFAULT_WEYL_CAP = 10**6

_VALID_RANKS = {
    "A": lambda r: r >= 1,
    "B": lambda r: r >= 2,
    "C": lambda r: r >= 2,
    "D": lambda r: r >= 3,
    "E": lambda r: r in (6, 7, 8),
    "F": lambda r: r == 4,
    "G": lambda r: r == 2,
}


def weyl_group_order(cartan_type: str, r: int) -> int:
    if cartan_type == "A":
        return factorial(r + 1)
    if cartan_type in ("B", "C"):
        return 2**r * factorial(r)
    if cartan_type == "D":
        return 2 ** (r - 1) * factorial(r)
    if cartan_type == "E":
        return {6: 51840, 7: 2903040, 8: 696729600}[r]
    if cartan_type == "F":
        return 1152
    if cartan_type == "G":
        return 12
    raise SchemaError(f"unknown Cartan type {cartan_type!r}")


def cartan_matrix(cartan_type: str, r: int) -> tuple[list[list[int]], list[int]]:
    """Cartan matrix ``C[i][j] = <alpha_i, alpha_j^vee>`` (Bourbaki numbering).

    Also returns ``d[i] = (alpha_i, alpha_i) / 2`` with short roots of squared
    length 2, so that ``(alpha_i, alpha_j) = C[i][j] * d[j]``.
    """
    c = [[2 if i == j else 0 for j in range(r)] for i in range(r)]
    d = [1] * r

    def link(i, j, cij=-1, cji=-1):
        c[i][j] = cij
        c[j][i] = cji

    t = cartan_type
    if t in ("A", "B", "C"):
        for i in range(r - 1):
            link(i, i + 1)
        if t == "B":
            # alpha_r short
            link(r - 2, r - 1, -2, -1)
            d = [2] * (r - 1) + [1]
        elif t == "C":
            # alpha_r long
            link(r - 2, r - 1, -1, -2)
            d = [1] * (r - 1) + [2]
    elif t == "D":
        for i in range(r - 2):
            link(i, i + 1)
        link(r - 3, r - 1)
    elif t == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, r - 1):
            link(i, i + 1)
    elif t == "F":
        link(0, 1)
        link(1, 2, -2, -1)
        link(2, 3)
        d = [2, 2, 1, 1]
    elif t == "G":
        link(0, 1, -1, -3)
        d = [1, 3]
    return c, d


@dataclass(frozen=True)
class GroupSpec:
    """Simple factors ``[(type, rank), ...]``, a central torus, and a lattice choice."""

    factors: tuple[tuple[str, int], ...] = ()
    torus_rank: int = 0
    lattice: tuple[str, ...] | str = "weight"

    def __post_init__(self):
        factors = tuple((str(t).upper(), int(r)) for t, r in self.factors)
        object.__setattr__(self, "factors", factors)
        lat = self.lattice
        if isinstance(lat, str):
            lat = (lat,) * len(factors)
        lat = tuple(lat)
        object.__setattr__(self, "lattice", lat)
        for t, r in factors:
            if t not in _VALID_RANKS:
                raise SchemaError(f"unknown Cartan type {t!r}")
            if not _VALID_RANKS[t](r):
                raise SchemaError(f"rank {r} is not valid for Cartan type {t}")
        if len(lat) != len(factors):
            raise SchemaError("need one lattice choice per simple factor")
        for x in lat:
            if x not in ("weight", "root"):
                raise SchemaError(f"lattice must be 'weight' or 'root', got {x!r}")
        if int(self.torus_rank) < 0:
            raise SchemaError("torus_rank must be nonnegative")
        object.__setattr__(self, "torus_rank", int(self.torus_rank))
        if not factors and self.torus_rank == 0:
            raise SchemaError("the trivial group has no interesting geometry")

    @property
    def semisimple_rank(self) -> int:
        return sum(r for _, r in self.factors)

    @property
    def rank(self) -> int:
        return self.semisimple_rank + self.torus_rank

    def label(self) -> str:
        parts = [f"{t}{r}" for t, r in self.factors]
        if self.torus_rank:
            parts.append(f"T{self.torus_rank}")
        return "x".join(parts)


@dataclass(frozen=True)
class RootSystemData:
    spec: GroupSpec
    k: int
    factor_blocks: tuple[tuple[int, int], ...]
    cartan_matrix: tuple[tuple[int, ...], ...]
    simple_roots: tuple[tuple[int, ...], ...]
    coroot_pairing: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]
    fundamental_weights: tuple[tuple[Fraction, ...], ...]
    gram: tuple[tuple[Fraction, ...], ...]
    rho: tuple[Fraction, ...]
    two_rho: tuple[int, ...]
    weyl_elements: tuple[tuple[tuple[int, ...], ...], ...] = field(repr=False)

    @property
    def n(self) -> int:
        """Dimension of the group."""
        return self.k + 2 * len(self.positive_roots)

    @property
    def weyl_order(self) -> int:
        return len(self.weyl_elements)

    @property
    def is_torus(self) -> bool:
        return not self.positive_roots

    def form(self, x: Sequence, y: Sequence) -> Fraction:
        return sum((xi * g * yj for xi, row in zip(x, self.gram) for g, yj in zip(row, y)),
                   Fraction(0))

    def covector(self, alpha: Sequence) -> tuple[Fraction, ...]:
        """Coefficients of the linear function ``x -> (x, alpha)``."""
        return mat_vec(self.gram, alpha)

    def coroot_values(self, x: Sequence) -> tuple:
        """``<x, alpha_i^vee>`` for every simple root."""
        return tuple(sum((a * b for a, b in zip(kap, x)), 0) for kap in self.coroot_pairing)

    def to_lattice(self, fundamental: Sequence[Sequence[int]], central: Sequence[int] = ()
                   ) -> tuple[Fraction, ...]:
        """Lattice coordinates of a weight given by fundamental coordinates per factor."""
        if len(fundamental) != len(self.spec.factors):
            raise SchemaError(f"expected {len(self.spec.factors)} weight blocks, "
                              f"got {len(fundamental)}")
        if len(central) != self.spec.torus_rank:
            raise SchemaError(f"expected central character of length {self.spec.torus_rank}, "
                              f"got {len(central)}")
        out: list[Fraction] = []
        for (t, r), lat, w, (a, b) in zip(self.spec.factors, self.spec.lattice,
                                          fundamental, self.factor_blocks):
            if len(w) != r:
                raise SchemaError(f"weight block for {t}{r} must have length {r}, got {len(w)}")
            w = [Fraction(x) for x in w]
            if lat == "weight":
                out.extend(w)
            else:
                cinv = inverse([list(row[a:b]) for row in self.cartan_matrix[a:b]])
                out.extend(sum((w[i] * cinv[i][j] for i in range(r)), Fraction(0))
                           for j in range(r))
        out.extend(Fraction(x) for x in central)
        return tuple(out)


def _positive_roots_root_coords(c: list[list[int]]) -> list[tuple[int, ...]]:
    """Positive roots in simple-root coordinates via root strings."""
    r = len(c)
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    roots = set(simple)
    by_height = [list(simple)]
    while by_height[-1]:
        nxt = []
        for beta in by_height[-1]:
            for i in range(r):
                # <beta, alpha_i^vee> = sum_j beta_j C[j][i]
                pairing = sum(beta[j] * c[j][i] for j in range(r))
                p = 0
                lower = list(beta)
                while True:
                    lower[i] -= 1
                    if tuple(lower) in roots:
                        p += 1
                    else:
                        break
                q = p - pairing
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        by_height.append(nxt)
    return sorted(roots, key=lambda v: (sum(v), v))


def _closure(gens: list[tuple[tuple[int, ...], ...]], dim: int, cap: int):
    ident = tuple(tuple(int(i == j) for j in range(dim)) for i in range(dim))
    seen = {ident}
    order = [ident]
    queue = deque([ident])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = tuple(tuple(sum(s[i][t] * g[t][j] for t in range(dim)) for j in range(dim))
                      for i in range(dim))
            if h not in seen:
                seen.add(h)
                order.append(h)
                queue.append(h)
                if len(seen) > cap:
                    raise ResourceCapError(f"Weyl group exceeds cap {cap}")
    return order


def build_root_system(spec: GroupSpec, weyl_cap: int = DEFAULT_WEYL_CAP) -> RootSystemData:
    expected = prod(weyl_group_order(t, r) for t, r in spec.factors)
    if expected > weyl_cap:
        raise ResourceCapError(
            f"|W| = {expected} for {spec.label()} exceeds the cap {weyl_cap}")
    k = spec.rank
    ss = spec.semisimple_rank
    big_c = [[0] * ss for _ in range(ss)]
    simple_roots: list[list[int]] = []
    coroot_pairing: list[list[int]] = []
    positive: list[tuple[int, ...]] = []
    fundamental: list[tuple[Fraction, ...]] = []
    gram = [[Fraction(0)] * k for _ in range(k)]
    blocks = []
    factor_groups = []
    offset = 0
    for (t, r), lat in zip(spec.factors, spec.lattice):
        a, b = offset, offset + r
        blocks.append((a, b))
        c, d = cartan_matrix(t, r)
        for i in range(r):
            for j in range(r):
                big_c[a + i][a + j] = c[i][j]
        g_root = [[Fraction(c[i][j] * d[j]) for j in range(r)] for i in range(r)]
        cinv = inverse(c)

        def embed(v, fill=0):
            out = [fill] * k
            out[a:b] = list(v)
            return out

        if lat == "weight":
            # alpha_i = sum_j C[i][j] omega_j
            loc_simple = [list(c[i]) for i in range(r)]
            loc_kappa = [[int(i == j) for j in range(r)] for i in range(r)]
            loc_fund = [[Fraction(int(i == j)) for j in range(r)] for i in range(r)]
            loc_gram = mat_mul(mat_mul(cinv, g_root), transpose(cinv))
            to_local = lambda beta: [sum(beta[i] * c[i][j] for i in range(r)) for j in range(r)]
        else:
            loc_simple = [[int(i == j) for j in range(r)] for i in range(r)]
            loc_kappa = [[c[j][i] for j in range(r)] for i in range(r)]
            loc_fund = [list(cinv[i]) for i in range(r)]
            loc_gram = g_root
            to_local = list
        simple_roots.extend(embed(v) for v in loc_simple)
        coroot_pairing.extend(embed(v) for v in loc_kappa)
        fundamental.extend(tuple(embed(v, Fraction(0))) for v in loc_fund)
        for beta in _positive_roots_root_coords(c):
            positive.append(tuple(embed(to_local(beta))))
        for i in range(r):
            for j in range(r):
                gram[a + i][a + j] = Fraction(loc_gram[i][j])
        gens = []
        for alpha, kappa in zip(loc_simple, loc_kappa):
            gens.append(tuple(tuple(int(i == j) - alpha[i] * kappa[j] for j in range(r))
                              for i in range(r)))
        elems = _closure(gens, r, weyl_cap)
        if len(elems) != weyl_group_order(t, r):
            raise ResourceCapError(f"Weyl group of {t}{r} has wrong order {len(elems)}")
        factor_groups.append((a, elems))
        offset = b

    weyl = [tuple(tuple(int(i == j) for j in range(k)) for i in range(k))]
    for a, elems in factor_groups:
        new = []
        for w in weyl:
            for e in elems:
                m = [list(row) for row in w]
                r = len(e)
                for i in range(r):
                    for j in range(r):
                        m[a + i][a + j] = e[i][j]
                new.append(tuple(tuple(row) for row in m))
        weyl = new

    two_rho = tuple(sum(p[i] for p in positive) for i in range(k))
    rho = tuple(Fraction(x, 2) for x in two_rho)
    return RootSystemData(
        spec=spec,
        k=k,
        factor_blocks=tuple(blocks),
        cartan_matrix=tuple(tuple(row) for row in big_c),
        simple_roots=tuple(tuple(v) for v in simple_roots),
        coroot_pairing=tuple(tuple(v) for v in coroot_pairing),
        positive_roots=tuple(positive),
        fundamental_weights=tuple(fundamental),
        gram=tuple(tuple(row) for row in gram),
        rho=rho,
        two_rho=two_rho,
        weyl_elements=tuple(weyl),
    )


def group(*factors, torus_rank: int = 0, lattice="weight", **kw) -> RootSystemData:
    """Shorthand: ``group("A1")``, ``group("A1", "A1")``, ``group(torus_rank=2)``."""
    parsed = []
    for f in factors:
        if isinstance(f, str):
            parsed.append((f[0], int(f[1:])))
        else:
            parsed.append(tuple(f))
    return build_root_system(GroupSpec(tuple(parsed), torus_rank, lattice), **kw)


def _check_dim(rs: RootSystemData, weight: Sequence):
    if len(weight) != rs.k:
        raise SchemaError(f"weight has dimension {len(weight)}, expected {rs.k}")


def apply(w: Sequence[Sequence[int]], x: Sequence) -> tuple:
    return tuple(sum((a * b for a, b in zip(row, x)), 0) for row in w)


def weyl_orbit(rs: RootSystemData, weight: Sequence) -> set[tuple[Fraction, ...]]:
    _check_dim(rs, weight)
    x = tuple(Fraction(v) for v in weight)
    return {apply(w, x) for w in rs.weyl_elements}


def is_dominant(rs: RootSystemData, weight: Sequence) -> bool:
    _check_dim(rs, weight)
    return all(v >= 0 for v in rs.coroot_values(weight))


def stabilizer_size(rs: RootSystemData, weight: Sequence) -> int:
    x = tuple(Fraction(v) for v in weight)
    return sum(1 for w in rs.weyl_elements if apply(w, x) == x)


def reflect(rs: RootSystemData, i: int, x: Iterable) -> tuple:
    x = tuple(x)
    c = sum((a * b for a, b in zip(rs.coroot_pairing[i], x)), 0)
    return tuple(xi - c * ai for xi, ai in zip(x, rs.simple_roots[i]))
