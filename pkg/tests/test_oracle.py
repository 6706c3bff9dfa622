
import pytest

from lattice_angles.angles import RIGHT, STRAIGHT, ZERO, AngleClass, angle_between, is_primitive
from lattice_angles.oracle import (
    angle_inventory,
    brute_force_witness,
    consistency_report,
    realized_integer_tan2,
    squarefree_upto,
)


@pytest.mark.parametrize(
    "a, tan2, bound, expected",
    [((1, 1, 0), 3, 5, (0, 1, 1)), ((1, 0, 0), 3, 50, None), ((1, 2, 0), 1, 5, (3, 1, 0))],
)
def test_brute_force_examples(a, tan2, bound, expected):
    assert brute_force_witness(a, AngleClass.oblique(tan2), bound) == expected


def test_brute_force_rejects_bad_input():
    with pytest.raises(ValueError):
        brute_force_witness((0, 0, 0), RIGHT, 3)
    with pytest.raises(ValueError):
        brute_force_witness((1, 0, 0), RIGHT, 0)


def test_brute_force_degenerate_kinds():
    assert brute_force_witness((2, 4), ZERO, 3) == (1, 2)
    assert brute_force_witness((2, 4), STRAIGHT, 3) == (-1, -2)
    assert angle_between((2, 4), brute_force_witness((2, 4), RIGHT, 3)) == RIGHT


def test_inventory_of_unit_vector_in_smallest_box():
    inv = angle_inventory((1, 0), 1)
    assert inv.classes() == [ZERO, AngleClass.oblique(1), RIGHT, AngleClass.oblique(1, True), STRAIGHT]
    assert sum(len(v) for v in inv.entries.values()) == 8


@pytest.mark.parametrize("a, box", [((1, 1, 1), 3), ((1, 2, 0), 3), ((2, -1), 6), ((1, 0, 1, 1), 2)])
def test_inventory_is_exact_and_closed_under_supplement(a, box):
    inv = angle_inventory(a, box)
    for key in (ZERO, RIGHT, STRAIGHT):
        assert key in inv.entries
    for ang, vs in inv.entries.items():
        assert ang.supplement() in inv.entries
        for v in vs:
            assert is_primitive(v) and max(abs(x) for x in v) <= box
            assert angle_between(a, v) == ang


def test_inventory_of_111_lacks_forty_five_degrees():
    inv = angle_inventory((1, 1, 1), 3)
    assert not any(c.is_oblique and c.tan2 == 1 for c in inv.entries)


def test_realized_integer_tan2_agrees_with_inventory():
    for a in [(1, 2, 0), (1, 1, 1), (2, 1, -1)]:
        inv = angle_inventory(a, 4)
        expected = {
            (int(c.tan2), c.obtuse)
            for c in inv.entries
            if c.is_oblique and c.tan2.denominator == 1 and c.tan2 <= 30
        }
        assert realized_integer_tan2(a, 4, set(range(1, 31))) == expected


def test_squarefree_upto():
    assert squarefree_upto(12) == [1, 2, 3, 5, 6, 7, 10, 11]


@pytest.mark.parametrize("dim, vec_bound, height, box", [(3, 2, 10, 50), (2, 3, 10, 10), (4, 2, 10, 5), (5, 1, 10, 5)])
def test_consistency_report_is_clean(dim, vec_bound, height, box):
    rep = consistency_report(dim, vec_bound, height, box)
    assert rep["ok"] and not rep["violations"] and not rep["budget_exhausted"]
    assert rep["counts"]["witnessed"] == rep["counts"]["members"]
    assert rep["counts"]["brute_found"] <= rep["counts"]["members"]


def test_consistency_report_validates_bounds():
    with pytest.raises(ValueError):
        consistency_report(7, 1, 1, 1)
    with pytest.raises(ValueError):
        consistency_report(3, 0, 1, 1)


def test_dim2_members_are_exactly_the_square_tangents():
    rep = consistency_report(2, 2, 10, 10)
    # only tan^2 = 1 is a square among square-free 1..10, acute and obtuse
    assert rep["counts"]["members"] == 2 * rep["counts"]["vectors"]
