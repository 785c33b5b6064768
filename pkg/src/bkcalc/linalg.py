"""Small exact linear algebra over Q and Z.

Matrices are lists of rows.  Everything here is sized for ranks below ten,
so plain Gaussian elimination on ``Fraction`` entries is fine.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .errors import InternalError

Vector = tuple
Matrix = list


def as_fraction_vector(v) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in v)


def dot(u: Sequence, v: Sequence):
    return sum((a * b for a, b in zip(u, v)), 0)


def mat_vec(m: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(sum((a * b for a, b in zip(row, v)), 0) for row in m)


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), 0) for col in bt] for row in a]


def transpose(m: Sequence[Sequence]) -> list[list]:
    return [list(r) for r in zip(*m)]


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def rref(m: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    a = [[Fraction(x) for x in row] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def rank(m: Sequence[Sequence]) -> int:
    if not m:
        return 0
    return len(rref(m)[1])


def nullspace(m: Sequence[Sequence], ncols: int | None = None) -> list[tuple[Fraction, ...]]:
    """Basis of the right nullspace {x : m x = 0}."""
    if not m:
        n = ncols or 0
        return [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    a, pivots = rref(m)
    n = len(a[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for row, p in zip(a, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def inverse(m: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(m)
    aug = [list(row) + identity(n)[i] for i, row in enumerate(m)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise InternalError("matrix is singular")
    return [row[n:] for row in red]


def determinant(m: Sequence[Sequence]) -> Fraction:
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for i in range(c + 1, n):
            if a[i][c] != 0:
                f = a[i][c] / a[c][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return det


def primitive(v: Sequence) -> tuple[int, ...]:
    """Scale a nonzero rational vector to a primitive integer vector (same direction)."""
    fr = [Fraction(x) for x in v]
    den = lcm(*(x.denominator for x in fr)) if fr else 1
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        raise InternalError("zero vector has no primitive multiple")
    return tuple(x // g for x in ints)


def unimodular_completion(u: Sequence[int]) -> list[list[int]]:
    """Unimodular U with u @ U = (1, 0, ..., 0) for a primitive integer row u.

    Columns 2..d of U are then a Z-basis of {x in Z^d : u . x = 0}.
    """
    d = len(u)
    row = list(u)
    cols = identity(d)  # cols[j] is column j of U

    def colop(j, i, q):  # column j -= q * column i
        row[j] -= q * row[i]
        cols[j] = [a - q * b for a, b in zip(cols[j], cols[i])]

    while True:
        nz = [j for j in range(d) if row[j] != 0]
        if not nz:
            raise InternalError("zero normal")
        piv = min(nz, key=lambda j: abs(row[j]))
        if len(nz) == 1:
            break
        for j in nz:
            if j != piv:
                colop(j, piv, row[j] // row[piv])
    if abs(row[piv]) != 1:
        raise InternalError(f"normal {tuple(u)} is not primitive")
    if piv != 0:
        row[0], row[piv] = row[piv], row[0]
        cols[0], cols[piv] = cols[piv], cols[0]
    if row[0] == -1:
        row[0] = 1
        cols[0] = [-a for a in cols[0]]
    return transpose(cols)
