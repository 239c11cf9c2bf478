"""Root classes of the curve lattice.

The roots are the classes of self-pairing -2.  Every root splits uniquely as

    delta = c * skyscraper + w0 + m * cycle

with w0 a fundamental root: a chi = 0 root whose coordinate at the curve's
affine node vanishes.  The fundamental roots form the finite root system of
the Dynkin diagram obtained by deleting the affine node, and are computed
here by reflection closure from the unit classes of the non-affine nodes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .catalog import KodairaCurve
from .errors import NotARoot
from .kgroup import KClass, check_dimension, pair, radical_basis
from .ratlinalg import ldlt_psd


@dataclass(frozen=True)
class RootDecomposition:
    """delta = point_coeff * skyscraper + fundamental + cycle_coeff * cycle."""

    point_coeff: int
    fundamental: KClass
    cycle_coeff: int


@lru_cache(maxsize=None)
def fundamental_roots(curve: KodairaCurve) -> tuple[KClass, ...]:
    """All fundamental roots, lexicographically sorted by rank vector.

    Closure of the simple roots (unit classes away from the affine node)
    under the simple reflections v -> v + <v, e_j> e_j.  Reflections in
    non-affine nodes never touch the affine coordinate, so the closure stays
    inside the affine-coordinate-zero slice.
    """
    n = curve.n
    affine = curve.affine_node
    simple = [j for j in range(n) if j != affine]
    seen: set[tuple[int, ...]] = set()
    frontier: list[tuple[int, ...]] = []
    for j in simple:
        for sign in (1, -1):
            v = tuple(sign if t == j else 0 for t in range(n))
            seen.add(v)
            frontier.append(v)
    while frontier:
        v = frontier.pop()
        for j in simple:
            coeff = sum(curve.gram[j][t] * v[t] for t in range(n))
            if coeff == 0:
                continue
            w = list(v)
            w[j] += coeff
            wt = tuple(w)
            if wt not in seen:
                seen.add(wt)
                frontier.append(wt)
    return tuple(KClass(0, v) for v in sorted(seen))


def decompose_root(curve: KodairaCurve, delta: KClass) -> RootDecomposition:
    """Split a root along the radical; raises NotARoot when <delta,delta> != -2."""
    check_dimension(curve, delta)
    if pair(curve, delta, delta) != -2:
        raise NotARoot(f"<v,v> = {pair(curve, delta, delta)}, expected -2")
    rad = radical_basis(curve)
    m = delta.ranks[curve.affine_node]  # cycle has mark 1 at the affine node
    w0 = KClass(0, tuple(r - m * c for r, c in zip(delta.ranks, rad.cycle.ranks)))
    return RootDecomposition(point_coeff=delta.chi, fundamental=w0, cycle_coeff=m)


def compose_root(curve: KodairaCurve, dec: RootDecomposition) -> KClass:
    rad = radical_basis(curve)
    return (
        rad.skyscraper.scale(dec.point_coeff)
        + dec.fundamental
        + rad.cycle.scale(dec.cycle_coeff)
    )


@lru_cache(maxsize=None)
def _box_pruning_data(curve: KodairaCurve):
    # LDL^T of the negated Gram matrix: -gram = L diag(d) L^T with d >= 0.
    # For a rank vector w set y = L^T w; then -<w,w> = sum d_j y_j^2, so a
    # partial sum over the already assigned coordinates exceeding 2 prunes.
    neg = [[Fraction(-x) for x in row] for row in curve.gram]
    lmat, d = ldlt_psd(neg)
    return lmat, d


def enumerate_roots_in_box(curve: KodairaCurve, bound: int) -> tuple[KClass, ...]:
    """All chi = 0 roots with every |rank| <= bound, lexicographically sorted.

    Exhaustive depth-first scan of the box; the LDL^T of the negated Gram
    matrix gives nonnegative pivot terms whose partial sums bound the final
    value, so branches that already exceed 2 are cut without loss.
    """
    if bound < 0:
        return ()
    n = curve.n
    lmat, d = _box_pruning_data(curve)
    two = Fraction(2)
    out: list[tuple[int, ...]] = []
    w = [0] * n

    def descend(k: int, partial: Fraction) -> None:
        # coordinates w[k+1:] are assigned; assign w[k] next
        if k < 0:
            if partial == two and any(w):
                out.append(tuple(w))
            return
        tail = sum((lmat[j][k] * w[j] for j in range(k + 1, n)), Fraction(0))
        dk = d[k]
        for wk in range(-bound, bound + 1):
            yk = wk + tail
            acc = partial + dk * yk * yk
            if acc <= two:
                w[k] = wk
                descend(k - 1, acc)
        w[k] = 0

    descend(n - 1, Fraction(0))
    return tuple(KClass(0, v) for v in sorted(out))
