"""Exact lattice angles and integer-vector helpers.

Vectors are plain tuples of Python ints. Angles never pass through floating
point: an oblique angle is stored as its exact squared tangent plus a flag
saying whether it lies in (pi/2, pi).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd
from typing import Optional, Sequence

import numpy as np

from .exactnum import as_rational

IntVec = tuple[int, ...]

ZERO_KIND, RIGHT_KIND, STRAIGHT_KIND, OBLIQUE_KIND = "zero", "right", "straight", "oblique"


@dataclass(frozen=True, order=True)
class AngleClass:
    """One angle in [0, pi].

    ``kind`` is one of ``zero``, ``right``, ``straight`` or ``oblique``; only
    oblique angles carry ``tan2`` (> 0) and ``obtuse``.
    """

    kind: str
    tan2: Optional[Fraction] = None
    obtuse: bool = False

    def __post_init__(self):
        if self.kind == OBLIQUE_KIND:
            t = as_rational(self.tan2)
            if t <= 0:
                raise ValueError(f"oblique angle needs tan^2 > 0, got {t}")
            object.__setattr__(self, "tan2", t)
        elif self.kind in (ZERO_KIND, RIGHT_KIND, STRAIGHT_KIND):
            if self.tan2 is not None or self.obtuse:
                raise ValueError(f"{self.kind} angle carries no payload")
        else:
            raise ValueError(f"unknown angle kind {self.kind!r}")

    @classmethod
    def oblique(cls, tan2, obtuse: bool = False) -> "AngleClass":
        return cls(OBLIQUE_KIND, as_rational(tan2), bool(obtuse))

    @property
    def is_oblique(self) -> bool:
        return self.kind == OBLIQUE_KIND

    def supplement(self) -> "AngleClass":
        """The angle pi - theta."""
        if self.kind == ZERO_KIND:
            return STRAIGHT
        if self.kind == STRAIGHT_KIND:
            return ZERO
        if self.kind == RIGHT_KIND:
            return RIGHT
        return AngleClass.oblique(self.tan2, not self.obtuse)

    def to_json(self) -> dict:
        if self.kind != OBLIQUE_KIND:
            return {"kind": self.kind}
        return {"kind": self.kind, "tan2": str(self.tan2), "obtuse": self.obtuse}

    def __str__(self) -> str:
        if self.kind != OBLIQUE_KIND:
            return self.kind
        return f"tan^2={self.tan2}{' obtuse' if self.obtuse else ''}"


ZERO = AngleClass(ZERO_KIND)
RIGHT = AngleClass(RIGHT_KIND)
STRAIGHT = AngleClass(STRAIGHT_KIND)


def dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def norm2(a: Sequence[int]) -> int:
    return sum(x * x for x in a)


def cross(a: Sequence[int], b: Sequence[int]) -> IntVec:
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def as_vector(v: Sequence[int]) -> IntVec:
    out = tuple(int(x) for x in v)
    if not out:
        raise ValueError("empty vector")
    return out


def check_nonzero(a: Sequence[int]) -> IntVec:
    a = as_vector(a)
    if not any(a):
        raise ValueError("the zero vector has no angles")
    return a


def primitive(v: Sequence[int]) -> IntVec:
    g = reduce(gcd, v, 0)
    if g == 0:
        raise ValueError("the zero vector has no primitive form")
    return tuple(x // g for x in v)


def is_primitive(v: Sequence[int]) -> bool:
    return reduce(gcd, v, 0) == 1


def angle_between(a: Sequence[int], b: Sequence[int]) -> AngleClass:
    """Exact angle between two nonzero integer vectors of equal dimension.

    >>> angle_between((4, 2), (-1, -3))
    AngleClass(kind='oblique', tan2=Fraction(1, 1), obtuse=True)
    """
    a, b = check_nonzero(a), check_nonzero(b)
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")
    d = dot(a, b)
    if d == 0:
        return RIGHT
    num = norm2(a) * norm2(b) - d * d
    if num == 0:
        return ZERO if d > 0 else STRAIGHT
    return AngleClass.oblique(Fraction(num, d * d), d < 0)


def component_rank(x: np.ndarray, r: int) -> np.ndarray:
    # 0, 1, ..., r, -1, ..., -r
    return np.where(x >= 0, x, r - x)


@lru_cache(maxsize=None)
def _shell_cached(dim: int, r: int) -> np.ndarray:
    return _build_shell(dim, r)


def _build_shell(dim: int, r: int) -> np.ndarray:
    if r == 0:
        return np.zeros((1, dim), dtype=np.int64)
    faces = []
    inner = np.arange(-(r - 1), r, dtype=np.int64)
    full = np.arange(-r, r + 1, dtype=np.int64)
    for i in range(dim):
        # i is the first coordinate with |x_i| = r
        axes = [inner] * i + [np.array([r, -r], dtype=np.int64)] + [full] * (dim - i - 1)
        if any(ax.size == 0 for ax in axes):
            continue
        grid = np.meshgrid(*axes, indexing="ij")
        faces.append(np.stack([g.ravel() for g in grid], axis=1))
    pts = np.concatenate(faces, axis=0)
    ranks = component_rank(pts, r)
    order = np.lexsort(ranks.T[::-1])
    return pts[order]


def shell(dim: int, r: int) -> np.ndarray:
    """All integer vectors with max-norm exactly r, in canonical search order.

    Within a shell vectors are ordered lexicographically, each coordinate
    running through 0, 1, ..., r, -1, ..., -r.
    """
    if dim < 1 or r < 0:
        raise ValueError("need dim >= 1 and r >= 0")
    if (2 * r + 1) ** dim <= 400_000:
        return _shell_cached(dim, r)
    return _build_shell(dim, r)


def shell_key(v: Sequence[int]) -> tuple:
    """Sort key reproducing the global shell search order."""
    r = max(abs(x) for x in v)
    return (r, tuple(x if x >= 0 else r - x for x in v))


def int_dtype_for(bound: int):
    """int64 when every intermediate stays below 2**62, else exact Python ints."""
    return np.int64 if bound < 2**62 else object
