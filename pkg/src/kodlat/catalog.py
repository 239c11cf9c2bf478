"""Catalog of reducible Kodaira curve types.

Eight families of reducible degenerate fibers, each a configuration of
projective lines whose dual graph is an affine Dynkin diagram:

    I_N   (N >= 2)  cycle of N lines                      A~_{N-1}
    mI_N  (m,N >= 2) multiple fiber, reduced curve I_N    A~_{N-1}
    III              two lines tangent at one point       A~_1 (double edge)
    IV               three concurrent lines               A~_2
    IStar_N (N >= 0) chain with forks at both ends        D~_{N+4}
    IIStar           nine lines                           E~_8
    IIIStar          eight lines                          E~_7
    IVStar           seven lines                          E~_6

Irreducible fibers (I_0, I_1, II and their multiple versions) are out of
scope.  Node orderings are fixed once and for all below; every adjacency,
mark vector and Gram matrix in the library refers to them.  ``marks`` are
the multiplicities of the components in the (reduced) fiber cycle, i.e. the
unique primitive vector spanning the kernel of the Gram matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Optional

from .errors import InvalidParams


class Family(str, Enum):
    I = "I"
    III = "III"
    IV = "IV"
    ISTAR = "IStar"
    IISTAR = "IIStar"
    IIISTAR = "IIIStar"
    IVSTAR = "IVStar"
    MI = "mI"


_PARAMETRIC_N = {Family.I, Family.MI, Family.ISTAR}


@dataclass(frozen=True)
class CurveId:
    """A curve family together with its parameters.

    N is the cycle length (I_N, mI_N) or the chain surplus (IStar_N); m is
    the fiber multiplicity and is present exactly for mI_N.
    """

    family: Family
    N: Optional[int] = None
    m: Optional[int] = None

    def __post_init__(self):
        fam = self.family
        if fam in (Family.I, Family.MI):
            if self.N is None or self.N < 2:
                raise InvalidParams(f"{fam.value} requires N >= 2, got N={self.N}")
        elif fam is Family.ISTAR:
            if self.N is None or self.N < 0:
                raise InvalidParams(f"IStar requires N >= 0, got N={self.N}")
        elif self.N is not None:
            raise InvalidParams(f"{fam.value} takes no N parameter")
        if fam is Family.MI:
            if self.m is None or self.m < 2:
                raise InvalidParams(f"mI requires multiplicity m >= 2, got m={self.m}")
        elif self.m is not None:
            raise InvalidParams(f"{fam.value} takes no multiplicity parameter")

    @property
    def label(self) -> str:
        if self.family is Family.MI:
            return f"mI_{self.N}_{self.m}"
        if self.N is not None:
            return f"{self.family.value}_{self.N}"
        return self.family.value


def parse_curve_id(text: str) -> CurveId:
    """Parse labels like "I_2", "I:2", "IV", "IStar_0", "mI:2:3", "mI_2_3"."""
    raw = text.strip()
    parts = raw.split(":") if ":" in raw else raw.split("_")
    name = parts[0]
    try:
        fam = Family(name)
    except ValueError:
        raise InvalidParams(f"unknown curve family: {name!r}") from None
    params = []
    for p in parts[1:]:
        try:
            params.append(int(p))
        except ValueError:
            raise InvalidParams(f"bad curve parameter {p!r} in {text!r}") from None
    n_param = params[0] if params else None
    m_param = params[1] if len(params) > 1 else None
    if len(params) > 2 or (m_param is not None and fam is not Family.MI):
        raise InvalidParams(f"too many parameters in {text!r}")
    return CurveId(fam, n_param, m_param)


@dataclass(frozen=True)
class KodairaCurve:
    """A built curve type: component count, dual graph and pairing data.

    ``adjacency[i][j]`` counts intersection points of components i and j with
    multiplicity; ``gram`` is adjacency off the diagonal and -2 on it (the
    negated affine Cartan matrix of the family).  ``affine_node`` is the
    0-based index of the distinguished mark-1 node whose deletion leaves the
    finite Dynkin diagram; it is the last node for the cycle families and is
    fixed per star family below.
    """

    id: CurveId
    n: int
    marks: tuple[int, ...]
    adjacency: tuple[tuple[int, ...], ...]
    gram: tuple[tuple[int, ...], ...]
    affine_node: int

    def to_dict(self) -> dict:
        out: dict = {"family": self.id.family.value}
        if self.id.N is not None:
            out["N"] = self.id.N
        if self.id.m is not None:
            out["m"] = self.id.m
        out["n"] = self.n
        out["marks"] = list(self.marks)
        out["adjacency"] = [list(row) for row in self.adjacency]
        out["gram"] = [list(row) for row in self.gram]
        return out


def _cycle_adjacency(n: int) -> list[list[int]]:
    # cycle of n lines; for n = 2 the two components meet in two points
    adj = [[0] * n for _ in range(n)]
    if n == 2:
        adj[0][1] = adj[1][0] = 2
    else:
        for i in range(n):
            j = (i + 1) % n
            adj[i][j] += 1
            adj[j][i] += 1
    return adj


def _edges_to_adjacency(n: int, edges: list[tuple[int, int]]) -> list[list[int]]:
    adj = [[0] * n for _ in range(n)]
    for i, j in edges:
        adj[i][j] += 1
        adj[j][i] += 1
    return adj


def _dstar_data(big_n: int) -> tuple[int, list[int], list[list[int]], int]:
    # D~_{big_n+4}: four mark-1 leaves, a mark-2 chain of big_n+1 nodes.
    #
    #   0           2
    #    \         /
    #     4 - ... - (n-1)
    #    /         \
    #   1           3
    #
    # Nodes 0,1 attach to chain head 4; nodes 2,3 to the chain tail n-1.
    # For big_n = 0 the chain is the single node 4.  Affine node: 0.
    n = big_n + 5
    head, tail = 4, n - 1
    edges = [(0, head), (1, head), (2, tail), (3, tail)]
    edges += [(c, c + 1) for c in range(head, tail)]
    marks = [1, 1, 1, 1] + [2] * (big_n + 1)
    return n, marks, _edges_to_adjacency(n, edges), 0


def _estar_data(family: Family) -> tuple[int, list[int], list[list[int]], int]:
    if family is Family.IISTAR:
        # E~_8: chain 0..7 with a branch node 8 on node 5.
        #
        #                       8 (3)
        #                       |
        #   0 - 1 - 2 - 3 - 4 - 5 - 6 - 7
        #  (1) (2) (3) (4) (5) (6) (4) (2)
        #
        # Affine node: 0.
        marks = [1, 2, 3, 4, 5, 6, 4, 2, 3]
        edges = [(i, i + 1) for i in range(7)] + [(5, 8)]
        return 9, marks, _edges_to_adjacency(9, edges), 0
    if family is Family.IIISTAR:
        # E~_7: chain 0..6 with a branch node 7 on the middle node 3.
        #
        #               7 (2)
        #               |
        #   0 - 1 - 2 - 3 - 4 - 5 - 6
        #  (1) (2) (3) (4) (3) (2) (1)
        #
        # Affine node: 0.
        marks = [1, 2, 3, 4, 3, 2, 1, 2]
        edges = [(i, i + 1) for i in range(6)] + [(3, 7)]
        return 8, marks, _edges_to_adjacency(8, edges), 0
    if family is Family.IVSTAR:
        # E~_6: chain 0..4, branch node 5 on the middle node 2, tip 6 on 5.
        #
        #   0 - 1 - 2 - 3 - 4
        #  (1) (2) (3) (2) (1)
        #           |
        #           5 (2)
        #           |
        #           6 (1)
        #
        # Affine node: 6 (the tip of the short central arm).
        marks = [1, 2, 3, 2, 1, 2, 1]
        edges = [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)]
        return 7, marks, _edges_to_adjacency(7, edges), 6
    raise InvalidParams(f"not a star family: {family}")


@lru_cache(maxsize=None)
def build_curve(curve_id: CurveId) -> KodairaCurve:
    """Construct the curve data for a validated CurveId."""
    fam = curve_id.family
    if fam in (Family.I, Family.MI):
        n = curve_id.N
        marks = [1] * n
        adj = _cycle_adjacency(n)
        affine = n - 1
    elif fam is Family.III:
        n, marks, affine = 2, [1, 1], 1
        adj = [[0, 2], [2, 0]]
    elif fam is Family.IV:
        n, marks, affine = 3, [1, 1, 1], 2
        adj = _edges_to_adjacency(3, [(0, 1), (0, 2), (1, 2)])
    elif fam is Family.ISTAR:
        n, marks, adj, affine = _dstar_data(curve_id.N)
    else:
        n, marks, adj, affine = _estar_data(fam)
    gram = tuple(
        tuple(-2 if i == j else adj[i][j] for j in range(n)) for i in range(n)
    )
    curve = KodairaCurve(
        id=curve_id,
        n=n,
        marks=tuple(marks),
        adjacency=tuple(tuple(row) for row in adj),
        gram=gram,
        affine_node=affine,
    )
    # the marks must span the kernel: gram . marks = 0, affine mark = 1
    assert all(
        sum(g * a for g, a in zip(row, curve.marks)) == 0 for row in curve.gram
    )
    assert curve.marks[curve.affine_node] == 1
    return curve


def curve_from_label(text: str) -> KodairaCurve:
    return build_curve(parse_curve_id(text))


def gram_matrix(curve: KodairaCurve) -> tuple[tuple[int, ...], ...]:
    """The stored Gram matrix (negated affine Cartan matrix)."""
    return curve.gram


@dataclass(frozen=True)
class FamilyInfo:
    """Parameter arity of one family, for the catalog listing."""

    family: Family
    parameters: tuple[str, ...]
    constraints: str

    def to_dict(self) -> dict:
        return {
            "family": self.family.value,
            "parameters": list(self.parameters),
            "constraints": self.constraints,
        }


def list_types() -> tuple[FamilyInfo, ...]:
    """The eight reducible families with their parameter arity."""
    return (
        FamilyInfo(Family.I, ("N",), "N >= 2"),
        FamilyInfo(Family.MI, ("N", "m"), "N >= 2, m >= 2"),
        FamilyInfo(Family.III, (), ""),
        FamilyInfo(Family.IV, (), ""),
        FamilyInfo(Family.ISTAR, ("N",), "N >= 0"),
        FamilyInfo(Family.IISTAR, (), ""),
        FamilyInfo(Family.IIISTAR, (), ""),
        FamilyInfo(Family.IVSTAR, (), ""),
    )
