from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from lattice_angles.angles import (
    RIGHT,
    STRAIGHT,
    ZERO,
    AngleClass,
    angle_between,
    dot,
    norm2,
    primitive,
    shell,
    shell_key,
)

vec3 = st.tuples(*[st.integers(-50, 50)] * 3).filter(any)


def test_figure_example_is_three_quarter_turn():
    assert angle_between((4, 2), (-1, -3)) == AngleClass.oblique(1, obtuse=True)


def test_sixty_degrees_example():
    assert angle_between((1, 1, 0), (0, 1, 1)) == AngleClass.oblique(3)


def test_degenerate_kinds():
    assert angle_between((2, 3), (4, 6)) == ZERO
    assert angle_between((2, 3), (-2, -3)) == STRAIGHT
    assert angle_between((1, 0, 0), (0, 5, 0)) == RIGHT


def test_angle_class_validation():
    with pytest.raises(ValueError):
        AngleClass.oblique(0)
    with pytest.raises(ValueError):
        AngleClass("right", Fraction(1))
    with pytest.raises(ValueError):
        AngleClass("acute")
    with pytest.raises(TypeError):
        AngleClass.oblique(0.5)


def test_rejects_zero_and_mismatched_vectors():
    with pytest.raises(ValueError):
        angle_between((0, 0), (1, 2))
    with pytest.raises(ValueError):
        angle_between((1, 2), (1, 2, 3))


def test_json_form_is_exact():
    assert AngleClass.oblique("2/6", True).to_json() == {"kind": "oblique", "tan2": "1/3", "obtuse": True}
    assert RIGHT.to_json() == {"kind": "right"}


@given(vec3)
def test_self_angle_is_zero_and_negation_straight(a):
    assert angle_between(a, a) == ZERO
    assert angle_between(a, tuple(-x for x in a)) == STRAIGHT


@given(vec3, vec3)
def test_angle_is_symmetric_and_negation_supplements(a, b):
    ab = angle_between(a, b)
    assert ab == angle_between(b, a)
    assert angle_between(a, tuple(-x for x in b)) == ab.supplement()
    assert ab.supplement().supplement() == ab


@given(vec3, vec3, st.integers(1, 20))
def test_angle_ignores_positive_scaling(a, b, k):
    assert angle_between(a, b) == angle_between(a, tuple(k * x for x in b))


@given(vec3, vec3)
def test_tan2_identity(a, b):
    ang = angle_between(a, b)
    if ang.is_oblique:
        d = dot(a, b)
        assert ang.tan2 * d * d == norm2(a) * norm2(b) - d * d
        assert ang.obtuse == (d < 0)


@pytest.mark.parametrize("dim, r", [(1, 3), (2, 1), (2, 4), (3, 2), (4, 1)])
def test_shell_is_exactly_the_max_norm_sphere_in_order(dim, r):
    pts = shell(dim, r)
    rows = [tuple(int(x) for x in row) for row in pts]
    assert len(rows) == (2 * r + 1) ** dim - (2 * r - 1) ** dim
    assert len(set(rows)) == len(rows)
    assert all(max(abs(x) for x in row) == r for row in rows)
    assert rows == sorted(rows, key=shell_key)


def test_shell_order_runs_nonnegative_first():
    assert [tuple(row) for row in shell(1, 2)] == [(2,), (-2,)]
    assert [tuple(int(x) for x in row) for row in shell(2, 1)][:4] == [(0, 1), (0, -1), (1, 0), (1, 1)]


def test_primitive():
    assert primitive((4, -6, 8)) == (2, -3, 4)
    with pytest.raises(ValueError):
        primitive((0, 0))
    assert np.asarray(shell(3, 1)).dtype == np.int64
