"""Curve catalog: construction, conventions, and Cartan-matrix facts."""

from fractions import Fraction

import pytest

from kodlat import (
    CurveId,
    Family,
    InvalidParams,
    build_curve,
    curve_from_label,
    gram_matrix,
    list_types,
    parse_curve_id,
)
from kodlat.ratlinalg import psd_pivots

ALL_LABELS = [
    "I_2", "I_3", "I_4", "I_5", "I_6", "I_7", "I_8",
    "mI_2_2", "mI_2_3", "mI_3_2",
    "III", "IV",
    "IStar_0", "IStar_1", "IStar_2", "IStar_3", "IStar_4",
    "IIStar", "IIIStar", "IVStar",
]


def test_list_types_has_eight_families():
    infos = list_types()
    assert len(infos) == 8
    assert {i.family for i in infos} == set(Family)


def test_parse_labels():
    assert parse_curve_id("I_2") == CurveId(Family.I, 2)
    assert parse_curve_id("I:2") == CurveId(Family.I, 2)
    assert parse_curve_id("mI:2:3") == CurveId(Family.MI, 2, 3)
    assert parse_curve_id("mI_2_3") == CurveId(Family.MI, 2, 3)
    assert parse_curve_id("IStar_0") == CurveId(Family.ISTAR, 0)
    assert parse_curve_id("IV") == CurveId(Family.IV)


@pytest.mark.parametrize(
    "bad", ["I_1", "I_0", "I", "II", "mI_2", "mI_2_1", "IStar", "IV_3", "X_2", "I_2_2"]
)
def test_invalid_parameters_rejected(bad):
    with pytest.raises(InvalidParams):
        curve_from_label(bad)


def test_pinned_small_matrices():
    i2 = curve_from_label("I_2")
    assert i2.gram == ((-2, 2), (2, -2))
    assert i2.affine_node == 1

    iii = curve_from_label("III")
    assert iii.gram == i2.gram
    assert iii.adjacency[0][1] == 2
    assert iii.id != i2.id  # same matrix, different family metadata

    iv = curve_from_label("IV")
    assert iv.gram == ((-2, 1, 1), (1, -2, 1), (1, 1, -2))

    istar0 = curve_from_label("IStar_0")
    assert istar0.n == 5
    assert istar0.marks == (1, 1, 1, 1, 2)
    assert istar0.gram[4] == (1, 1, 1, 1, -2)


def test_component_counts():
    assert curve_from_label("I_5").n == 5
    assert curve_from_label("mI_2_3").n == 2
    assert curve_from_label("IStar_3").n == 8
    assert curve_from_label("IIStar").n == 9
    assert curve_from_label("IIIStar").n == 8
    assert curve_from_label("IVStar").n == 7


@pytest.mark.parametrize("label", ALL_LABELS)
def test_cartan_facts(label):
    """Symmetry, -2 diagonal, kernel spanned by the marks, affine balance."""
    curve = curve_from_label(label)
    g = gram_matrix(curve)
    n = curve.n
    assert len(g) == n and all(len(row) == n for row in g)
    for i in range(n):
        assert g[i][i] == -2
        for j in range(n):
            assert g[i][j] == g[j][i]
            if i != j:
                assert g[i][j] == curve.adjacency[i][j] >= 0
    for i in range(n):
        assert sum(g[i][j] * curve.marks[j] for j in range(n)) == 0
        assert (
            sum(curve.adjacency[i][j] * curve.marks[j] for j in range(n))
            == 2 * curve.marks[i]
        )
    assert curve.marks[curve.affine_node] == 1


@pytest.mark.parametrize("label", ALL_LABELS)
def test_negative_semidefinite_rank(label):
    """-gram is PSD with exactly one zero pivot (kernel of rank one)."""
    curve = curve_from_label(label)
    pivots = psd_pivots([[Fraction(-x) for x in row] for row in curve.gram])
    assert all(p >= 0 for p in pivots)
    assert sum(1 for p in pivots if p == 0) == 1


def test_serialization_round_trip():
    curve = curve_from_label("mI_2_3")
    data = curve.to_dict()
    assert data["family"] == "mI" and data["N"] == 2 and data["m"] == 3
    rebuilt = build_curve(CurveId(Family(data["family"]), data.get("N"), data.get("m")))
    assert rebuilt == curve
    assert "m" not in curve_from_label("I_2").to_dict()


def test_build_is_cached():
    assert build_curve(CurveId(Family.IV)) is build_curve(CurveId(Family.IV))
