"""Small exact linear algebra helpers over the rationals.

Everything here works on lists of lists of Fractions and is used for
certificates (LDL^T pivots), kernel bases, and the two-dimensional lattice
reduction behind the closest-vector search.  Matrices never exceed a few
dozen entries, so clarity beats asymptotics.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

Vec = list[Fraction]
Mat = list[list[Fraction]]


def _as_mat(a: Sequence[Sequence]) -> Mat:
    return [[Fraction(x) for x in row] for row in a]


def ldlt_psd(a: Sequence[Sequence]) -> tuple[Mat, Vec]:
    """Pivotless LDL^T factorization of a symmetric PSD matrix.

    Returns (L, d) with L unit lower triangular and a = L diag(d) L^T,
    all pivots d[j] >= 0.  For a PSD matrix a zero pivot forces the whole
    remaining column to vanish; a negative pivot or a nonzero column under a
    zero pivot raises ValueError, which makes this a semidefiniteness
    certificate.
    """
    m = _as_mat(a)
    n = len(m)
    for row in m:
        if len(row) != n:
            raise ValueError("matrix must be square")
    lmat = [[Fraction(0)] * n for _ in range(n)]
    d: Vec = [Fraction(0)] * n
    for j in range(n):
        lmat[j][j] = Fraction(1)
        s = m[j][j] - sum(lmat[j][k] * lmat[j][k] * d[k] for k in range(j))
        if s < 0:
            raise ValueError(f"negative pivot {s} at index {j}: not PSD")
        d[j] = s
        for i in range(j + 1, n):
            t = m[i][j] - sum(lmat[i][k] * lmat[j][k] * d[k] for k in range(j))
            if s == 0:
                if t != 0:
                    raise ValueError(f"zero pivot with nonzero column at {j}: not PSD")
                lmat[i][j] = Fraction(0)
            else:
                lmat[i][j] = t / s
    return lmat, d


def psd_pivots(a: Sequence[Sequence]) -> Vec:
    """Pivots of the LDL^T factorization; raises ValueError if not PSD."""
    return ldlt_psd(a)[1]


def is_negative_definite(a: Sequence[Sequence]) -> bool:
    """True iff -a is positive definite (all LDL^T pivots > 0)."""
    try:
        d = psd_pivots([[-x for x in row] for row in a])
    except ValueError:
        return False
    return all(p > 0 for p in d)


def solve2(
    a11: Fraction, a12: Fraction, a21: Fraction, a22: Fraction, b1: Fraction, b2: Fraction
) -> tuple[Fraction, Fraction]:
    """Solve a 2x2 rational system by Cramer's rule; det must be nonzero."""
    det = a11 * a22 - a12 * a21
    if det == 0:
        raise ZeroDivisionError("singular 2x2 system")
    return (b1 * a22 - b2 * a12) / det, (a11 * b2 - a21 * b1) / det


def nullspace(a: Sequence[Sequence]) -> list[Vec]:
    """Basis of the right kernel of a rational matrix (RREF back-substitution)."""
    m = _as_mat(a)
    if not m:
        return []
    rows, cols = len(m), len(m[0])
    pivot_cols: list[int] = []
    r = 0
    for c in range(cols):
        pivot_row = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivot_cols.append(c)
        r += 1
        if r == rows:
            break
    free_cols = [c for c in range(cols) if c not in pivot_cols]
    basis: list[Vec] = []
    for fc in free_cols:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivot_cols):
            v[pc] = -m[i][fc]
        basis.append(v)
    return basis


def _dot(u: Vec, v: Vec) -> Fraction:
    return sum(a * b for a, b in zip(u, v))


def lagrange_reduce(
    b1: Vec, b2: Vec
) -> tuple[Vec, Vec, list[list[int]]]:
    """Gauss-Lagrange reduction of a rank-2 lattice basis in the plane.

    Returns (c1, c2, U) with (c1, c2) = U (b1, b2) as rows, U unimodular,
    |c1| <= |c2| and |<c1,c2>| <= |c1|^2 / 2.
    """
    u, v = list(b1), list(b2)
    umat = [[1, 0], [0, 1]]
    while True:
        if _dot(u, u) > _dot(v, v):
            u, v = v, u
            umat[0], umat[1] = umat[1], umat[0]
        nu = _dot(u, u)
        if nu == 0:
            raise ZeroDivisionError("basis vector is zero: lattice not rank 2")
        mu = math.floor(_dot(u, v) / nu + Fraction(1, 2))
        if mu == 0:
            break
        v = [x - mu * y for x, y in zip(v, u)]
        umat[1] = [x - mu * y for x, y in zip(umat[1], umat[0])]
    return u, v, umat


def closest_lattice_point(
    b1: Vec, b2: Vec, target: Vec
) -> tuple[Fraction, tuple[int, int]]:
    """Exact closest-vector search in the lattice Z b1 + Z b2.

    Returns (min squared distance, (x, y)) with x b1 + y b2 the minimizer in
    the original basis coordinates.  Reduces the basis first; with a reduced
    basis the minimizer's coefficients differ from the real least-squares
    solution by less than 2 in each coordinate, so scanning a window of
    integer offsets around it is exhaustive.
    """
    u, v, umat = lagrange_reduce(b1, b2)
    guu, guv, gvv = _dot(u, u), _dot(u, v), _dot(v, v)
    tu, tv = _dot(target, u), _dot(target, v)
    x0, y0 = solve2(guu, guv, guv, gvv, tu, tv)
    fx, fy = math.floor(x0), math.floor(y0)
    best: Fraction | None = None
    arg_reduced = (0, 0)
    for dx in range(-2, 4):
        for dy in range(-2, 4):
            x, y = fx + dx, fy + dy
            diff = [x * a + y * b - t for a, b, t in zip(u, v, target)]
            dist = _dot(diff, diff)
            if best is None or dist < best or (dist == best and (x, y) < arg_reduced):
                best = dist
                arg_reduced = (x, y)
    assert best is not None
    x, y = arg_reduced
    # back to the original basis: reduced rows are umat times original rows
    arg = (x * umat[0][0] + y * umat[1][0], x * umat[0][1] + y * umat[1][1])
    return best, arg
