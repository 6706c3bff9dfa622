"""Explicit integer vectors realizing a prescribed angle against a fixed vector."""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, lcm
from typing import Iterator, Optional, Sequence

import numpy as np

from .angles import (
    AngleClass,
    IntVec,
    RIGHT_KIND,
    STRAIGHT_KIND,
    ZERO_KIND,
    check_nonzero,
    cross,
    dot,
    int_dtype_for,
    norm2,
    primitive,
    shell,
)
from .exactnum import (
    is_rational_three_square,
    rational_sqrt,
    squarefree_part,
    three_square_decomp,
)


def _env_bound(name: str, default: int) -> int:
    raw = os.environ.get(name)
    return int(raw) if raw else default


DEFAULT_BOX_DIM3 = _env_bound("LATTICE_ANGLES_BOX_DIM3", 100)
DEFAULT_BOX_HIGH = _env_bound("LATTICE_ANGLES_BOX_HIGH", 20)


@dataclass(frozen=True)
class SearchBudget:
    """Max-norm bound for witness searches; shells are scanned r = 1, 2, ..."""

    box_bound: int = DEFAULT_BOX_DIM3

    def __post_init__(self):
        if self.box_bound < 1:
            raise ValueError("box_bound must be >= 1")

    @classmethod
    def default_for(cls, dim: int) -> "SearchBudget":
        return cls(DEFAULT_BOX_DIM3 if dim <= 3 else DEFAULT_BOX_HIGH)


def perpendicular(a: Sequence[int]) -> IntVec:
    """A nonzero integer vector orthogonal to ``a`` (dim >= 2)."""
    a = check_nonzero(a)
    if len(a) < 2:
        raise ValueError("no perpendicular exists in dimension 1")
    out = [0] * len(a)
    if a[0] == 0:
        out[0] = 1
    else:
        out[0], out[1] = -a[1], a[0]
    return tuple(out)


def witness_dim2(a: Sequence[int], u: int, v: int) -> IntVec:
    """Rotate ``a`` by the angle with tangent u/v: (a1 v - a2 u, a2 v + a1 u).

    ``a . b = v |a|^2``, so the angle is obtuse exactly when v < 0.
    """
    a = check_nonzero(a)
    if len(a) != 2:
        raise ValueError("witness_dim2 needs a 2-dimensional vector")
    if v == 0:
        raise ValueError("v must be nonzero")
    a1, a2 = a
    return (a1 * v - a2 * u, a2 * v + a1 * u)


def witness_dim4(a: Sequence[int], r: int, s: int, t: int, u: int) -> IntVec:
    """u a + r(a2,-a1,a4,-a3) + s(a3,-a4,-a1,a2) + t(a4,a3,-a2,-a1).

    The three added vectors are orthogonal to ``a`` and to each other, each
    of squared norm |a|^2, so tan^2 = (r^2+s^2+t^2)/u^2 and a.b = u |a|^2.
    """
    a = check_nonzero(a)
    if len(a) != 4:
        raise ValueError("witness_dim4 needs a 4-dimensional vector")
    if u == 0:
        raise ValueError("u must be nonzero")
    a1, a2, a3, a4 = a
    return (
        u * a1 + r * a2 + s * a3 + t * a4,
        u * a2 - r * a1 - s * a4 + t * a3,
        u * a3 + r * a4 - s * a1 - t * a2,
        u * a4 - r * a3 + s * a2 - t * a1,
    )


def dim4_params(tan2, obtuse: bool) -> tuple[int, int, int, int]:
    """Deterministic (r, s, t, u) with (r^2+s^2+t^2)/u^2 = tan2."""
    tan2 = Fraction(tan2)
    tn, td = tan2.numerator, tan2.denominator
    n = squarefree_part(tan2)
    c = isqrt(tn * td // n)
    if c * c * n != tn * td:
        raise AssertionError("square-free split is not exact")
    rst = three_square_decomp(n)
    if rst is None:
        raise ValueError(f"tan^2 = {tan2} is not a sum of three rational squares")
    r, s, t = (c * x for x in rst)
    return r, s, t, (-td if obtuse else td)


def _check_in_theta(dim: int, angle: AngleClass) -> None:
    from .angleset import theta_n_contains

    if not theta_n_contains(dim, angle):
        raise ValueError(f"angle {angle} is not a lattice angle in dimension {dim}")


def _dim3_hits(a: IntVec, tan2: Fraction, box_bound: int) -> Iterator[IntVec]:
    """Acute solutions of tn (a.v)^2 = td (|a|^2 |v|^2 - (a.v)^2), in shell order."""
    tn, td = tan2.numerator, tan2.denominator
    big_a = norm2(a)
    amax = max(abs(x) for x in a)
    dtype = int_dtype_for(max(tn, td * big_a) * (3 * box_bound * amax) ** 2 * 4)
    av = np.array(a, dtype=dtype)
    for r in range(1, box_bound + 1):
        pts = shell(3, r)
        if dtype is object:
            pts = pts.astype(object)
        d = pts @ av
        n = (pts * pts).sum(axis=1)
        mask = (d > 0) & (tn * d * d == td * (big_a * n - d * d))
        for idx in np.flatnonzero(mask):
            yield tuple(int(x) for x in pts[idx])


def orthogonal_basis(a: Sequence[int]) -> list[IntVec]:
    """Integer vectors c2..cn, pairwise orthogonal and orthogonal to ``a``.

    Gram-Schmidt of the coordinate vectors against ``a`` in exact rationals,
    each result scaled to a primitive integer vector.
    """
    a = check_nonzero(a)
    n = len(a)
    basis: list[list[Fraction]] = [[Fraction(x) for x in a]]
    for j in range(n):
        w = [Fraction(int(i == j)) for i in range(n)]
        for b in basis:
            coef = sum(x * y for x, y in zip(w, b)) / sum(y * y for y in b)
            w = [x - coef * y for x, y in zip(w, b)]
        if any(w):
            basis.append(w)
        if len(basis) == n:
            break
    out = []
    for w in basis[1:]:
        den = lcm(*(x.denominator for x in w))
        out.append(primitive([int(x * den) for x in w]))
    return out


def complement_basis(a: Sequence[int]) -> list[IntVec]:
    """Pairwise orthogonal integer vectors spanning the complement of ``a`` (dim >= 5).

    A 4-coordinate block a' of ``a`` (first four coordinates, or the first three
    plus the first later nonzero one) contributes the three rotation vectors of
    the 4-dimensional construction, each of squared norm |a'|^2. The remaining
    coordinates a'' contribute (|a''|^2 a', -|a'|^2 a'') and a complement of
    a'' inside their own coordinates.
    """
    a = check_nonzero(a)
    n = len(a)
    if n < 5:
        raise ValueError("complement_basis is for dimension >= 5")
    block = [0, 1, 2, 3]
    if not any(a[i] for i in block):
        block = [0, 1, 2, next(i for i in range(4, n) if a[i])]
    rest = [i for i in range(n) if i not in block]
    a1, a2, a3, a4 = (a[i] for i in block)
    tail = [a[i] for i in rest]

    def place(head: Sequence[int], other: Sequence[int]) -> IntVec:
        out = [0] * n
        for i, x in zip(block, head):
            out[i] = x
        for i, x in zip(rest, other):
            out[i] = x
        return tuple(out)

    zeros = [0] * len(rest)
    out = [
        place((a2, -a1, a4, -a3), zeros),
        place((a3, -a4, -a1, a2), zeros),
        place((a4, a3, -a2, -a1), zeros),
    ]
    if any(tail):
        head_n2, tail_n2 = a1 * a1 + a2 * a2 + a3 * a3 + a4 * a4, norm2(tail)
        out.append(primitive(place([tail_n2 * x for x in (a1, a2, a3, a4)], [-head_n2 * x for x in tail])))
        if len(rest) > 1:
            out.extend(place((0, 0, 0, 0), c) for c in orthogonal_basis(tail))
    else:
        for k in range(len(rest)):
            out.append(place((0, 0, 0, 0), [int(j == k) for j in range(len(rest))]))
    return out


def _witness_high(a: IntVec, tan2: Fraction, box_bound: int) -> Optional[IntVec]:
    """Acute witness v = x1 a + r R1 + s R2 + t R3 + sum y_k c_k.

    R1..R3 are the rotation vectors (squared norm L) and c_k the remaining
    complement vectors. The angle condition reads

        L (r^2 + s^2 + t^2) = tan2 |a|^2 x1^2 - sum |c_k|^2 y_k^2,

    so integers (x1, y) are scanned in max-norm shells until the right side
    over L is positive and a sum of three rational squares.
    """
    basis = complement_basis(a)
    rot, extra = basis[:3], basis[3:]
    big_l = norm2(rot[0])
    weights = [norm2(c) for c in extra]
    big_a = norm2(a)
    for r in range(1, box_bound + 1):
        # x1 ranges over 1..r, each y_k over 0..r, with max exactly r
        for x1 in range(1, r + 1):
            for ys in itertools.product(range(r + 1), repeat=len(extra)):
                if x1 != r and max(ys, default=0) != r:
                    continue
                rhs = tan2 * big_a * x1 * x1 - sum(w * y * y for w, y in zip(weights, ys))
                if rhs <= 0 or not is_rational_three_square(rhs / big_l):
                    continue
                coeffs = _rational_three_squares(rhs / big_l)
                v = [Fraction(x1 * ai) for ai in a]
                for c, vec in zip((*coeffs, *ys), (*rot, *extra)):
                    v = [vi + c * x for vi, x in zip(v, vec)]
                den = lcm(*(x.denominator for x in v))
                return primitive([int(x * den) for x in v])
    return None


def _rational_three_squares(x: Fraction) -> tuple[Fraction, Fraction, Fraction]:
    """Rationals (r, s, t) with r^2 + s^2 + t^2 = x, for x a rational three-square."""
    num, den = x.numerator, x.denominator
    core = squarefree_part(x)
    c = isqrt(num * den // core)
    r, s, t = three_square_decomp(core)
    return tuple(Fraction(c * y, den) for y in (r, s, t))


def witness_for_angle(
    a: Sequence[int], angle: AngleClass, budget: Optional[SearchBudget] = None
) -> Optional[IntVec]:
    """A primitive integer vector b with angle_between(a, b) == angle.

    Returns None when a bounded search (dims 3 and >= 5) exhausts its budget;
    that never means the angle is unattainable.
    """
    a = check_nonzero(a)
    dim = len(a)
    if dim < 2:
        raise ValueError("dimension must be at least 2")
    if angle.kind == ZERO_KIND:
        return primitive(a)
    if angle.kind == STRAIGHT_KIND:
        return tuple(-x for x in primitive(a))
    if angle.kind == RIGHT_KIND:
        return primitive(perpendicular(a))
    _check_in_theta(dim, angle)
    budget = budget or SearchBudget.default_for(dim)
    tan2 = angle.tan2
    sign = -1 if angle.obtuse else 1

    if dim == 2:
        root = rational_sqrt(tan2)
        return primitive(witness_dim2(a, root.numerator, sign * root.denominator))
    if dim == 4:
        r, s, t, u = dim4_params(tan2, angle.obtuse)
        return primitive(witness_dim4(a, r, s, t, u))
    if dim == 3:
        from .angleset import hilbert_criterion

        if not hilbert_criterion(norm2(a), tan2).member:
            raise ValueError(f"{angle} is not attained against {a}; see the criterion verdict")
        hit = next(_dim3_hits(a, tan2, budget.box_bound), None)
    else:
        hit = _witness_high(a, tan2, budget.box_bound)
    if hit is None:
        return None
    return tuple(sign * x for x in hit)


def enumerate_witness_directions(
    a: Sequence[int], angle: AngleClass, k: int, budget: Optional[SearchBudget] = None
) -> list[IntVec]:
    """Up to k primitive, pairwise non-parallel witnesses for a 3-dimensional ``a``."""
    a = check_nonzero(a)
    if len(a) != 3:
        raise ValueError("direction enumeration is for 3-dimensional vectors")
    if k < 1:
        raise ValueError("k must be >= 1")
    if not angle.is_oblique:
        return [witness_for_angle(a, angle, budget)]
    first = witness_for_angle(a, angle, budget)  # validates membership
    if first is None:
        return []
    budget = budget or SearchBudget.default_for(3)
    sign = -1 if angle.obtuse else 1
    found: list[IntVec] = []
    for v in _dim3_hits(a, angle.tan2, budget.box_bound):
        if primitive(v) != v:
            continue
        if any(not any(cross(v, w)) for w in found):
            continue
        found.append(v)
        if len(found) == k:
            break
    return [tuple(sign * x for x in v) for v in found]


def ellipse_point(a: Sequence[int], a_perp: Sequence[int], v: Sequence[int]) -> tuple[Fraction, Fraction]:
    """Rational point (x, y) attached to a witness v: coordinates along a_perp and a x a_perp over a.v."""
    d = dot(a, v)
    if d == 0:
        raise ValueError("v is perpendicular to a")
    return Fraction(dot(a_perp, v), d), Fraction(dot(cross(a, a_perp), v), d)


def on_ellipse(a: Sequence[int], a_perp: Sequence[int], tan2, x: Fraction, y: Fraction) -> bool:
    """|a|^2 x^2 + y^2 == |a_perp|^2 tan2, the conic whose rational points give witnesses."""
    return norm2(a) * x * x + y * y == norm2(a_perp) * Fraction(tan2)
