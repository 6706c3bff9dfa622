"""Brute-force ground truth by exhaustive enumeration of integer vectors in a box.

Nothing here consults Hilbert symbols: a vector realizes an angle iff the
exact integer comparison behind ``angle_between`` says so.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

import numpy as np

from .angles import (
    AngleClass,
    IntVec,
    RIGHT_KIND,
    STRAIGHT_KIND,
    ZERO_KIND,
    angle_between,
    check_nonzero,
    int_dtype_for,
    is_primitive,
    norm2,
    shell,
)
from .angleset import theta_n_of_a_contains
from .exactnum import squarefree_int
from .witness import SearchBudget, witness_for_angle

log = logging.getLogger(__name__)

SCHEMA_VERSION = "1.0"


def _match_mask(pts: np.ndarray, a: IntVec, angle: AngleClass) -> np.ndarray:
    av = np.array(a, dtype=pts.dtype)
    d = pts @ av
    big_a = norm2(a)
    if angle.kind == RIGHT_KIND:
        return d == 0
    n = (pts * pts).sum(axis=1)
    if angle.kind == ZERO_KIND:
        return (d > 0) & (big_a * n == d * d)
    if angle.kind == STRAIGHT_KIND:
        return (d < 0) & (big_a * n == d * d)
    tn, td = angle.tan2.numerator, angle.tan2.denominator
    side = (d < 0) if angle.obtuse else (d > 0)
    return side & (td * (big_a * n - d * d) == tn * d * d)


def brute_force_witness(a: Sequence[int], angle: AngleClass, box_bound: int) -> Optional[IntVec]:
    """First primitive v (max-norm shell order) with angle_between(a, v) == angle."""
    a = check_nonzero(a)
    if box_bound < 1:
        raise ValueError("box_bound must be >= 1")
    dim = len(a)
    amax = max(abs(x) for x in a)
    scale = max(1, angle.tan2.numerator, angle.tan2.denominator) if angle.is_oblique else 1
    dtype = int_dtype_for(scale * norm2(a) * dim * dim * (box_bound * amax + box_bound) ** 2 * 4)
    for r in range(1, box_bound + 1):
        pts = shell(dim, r)
        if dtype is object:
            pts = pts.astype(object)
        for idx in np.flatnonzero(_match_mask(pts, a, angle)):
            v = tuple(int(x) for x in pts[idx])
            if not is_primitive(v):
                continue
            if angle_between(a, v) != angle:
                raise AssertionError(f"vectorized match disagrees with angle_between at {v}")
            return v
    return None


@dataclass
class AngleInventory:
    """Every angle class realized against ``base`` by primitive vectors in the box."""

    base: IntVec
    box_bound: int
    entries: dict[AngleClass, list[IntVec]] = field(default_factory=dict)

    def classes(self) -> list[AngleClass]:
        return sorted(self.entries, key=_angle_sort_key)

    def to_json(self) -> dict:
        return {
            "base": list(self.base),
            "box_bound": self.box_bound,
            "classes": [
                {"angle": c.to_json(), "vectors": [list(v) for v in self.entries[c]]}
                for c in self.classes()
            ],
        }


def _angle_sort_key(c: AngleClass):
    # increasing angle in [0, pi]
    if c.kind == ZERO_KIND:
        return (0, 0)
    if c.kind == RIGHT_KIND:
        return (2, 0)
    if c.kind == STRAIGHT_KIND:
        return (4, 0)
    return (3, -c.tan2) if c.obtuse else (1, c.tan2)


def _box_vectors(dim: int, box_bound: int) -> Iterator[IntVec]:
    for r in range(1, box_bound + 1):
        for row in shell(dim, r):
            yield tuple(int(x) for x in row)


def angle_inventory(a: Sequence[int], box_bound: int) -> AngleInventory:
    a = check_nonzero(a)
    inv = AngleInventory(a, box_bound)
    for v in _box_vectors(len(a), box_bound):
        if is_primitive(v):
            inv.entries.setdefault(angle_between(a, v), []).append(v)
    return inv


def realized_integer_tan2(a: Sequence[int], box_bound: int, targets: set[int]) -> set[tuple[int, bool]]:
    """(t, obtuse) pairs with integer t in ``targets`` realized by some v in the box."""
    a = check_nonzero(a)
    dim = len(a)
    amax = max(abs(x) for x in a)
    dtype = int_dtype_for(norm2(a) * dim * box_bound**2 * (dim * amax + 1) ** 2)
    av = np.array(a, dtype=dtype)
    big_a = norm2(a)
    span = np.arange(-box_bound, box_bound + 1, dtype=np.int64)
    grid = np.meshgrid(*([span] * (dim - 1)), indexing="ij")
    tail = np.stack([g.ravel() for g in grid], axis=1)
    if dtype is object:
        tail = tail.astype(object)
    tail_dot = tail @ av[1:]
    tail_n = (tail * tail).sum(axis=1)
    target_arr = np.array(sorted(targets), dtype=np.int64)
    found: set[tuple[int, bool]] = set()
    for x1 in range(-box_bound, box_bound + 1):
        d = tail_dot + x1 * av[0]
        num = big_a * (tail_n + x1 * x1) - d * d
        keep = (d != 0) & (num != 0)
        d, num = d[keep], num[keep]
        dd = d * d
        whole = num % dd == 0
        t = num[whole] // dd[whole]
        obtuse = d[whole] < 0
        hit = np.isin(t.astype(np.int64), target_arr)
        for tv, ob in set(zip(t[hit].tolist(), obtuse[hit].tolist())):
            found.add((int(tv), bool(ob)))
    return found


def squarefree_upto(height: int) -> list[int]:
    return [s for s in range(1, height + 1) if squarefree_int(s) == s]


def consistency_report(dim: int, vec_bound: int, tan2_height: int, box_bound: int) -> dict:
    """Cross-check the decision procedures and constructions against brute force.

    For every nonzero a with max-norm <= vec_bound and every oblique angle whose
    squared tangent is a square-free integer <= tan2_height (both acute and
    obtuse):

    (i)   brute force finds a witness  =>  the decision says member;
    (ii)  the decision says non-member =>  brute force finds nothing;
    (iii) the decision says member     =>  witness_for_angle returns a
          verified witness within box_bound (budget exhaustion is a warning).
    """
    if not 2 <= dim <= 6:
        raise ValueError("dim must be in 2..6")
    if min(vec_bound, tan2_height, box_bound) < 1:
        raise ValueError("all bounds must be >= 1")
    targets = squarefree_upto(tan2_height)
    budget = SearchBudget(box_bound)
    violations: list[dict] = []
    exhausted: list[dict] = []
    counts = {"vectors": 0, "instances": 0, "members": 0, "brute_found": 0, "witnessed": 0}
    span = range(-vec_bound, vec_bound + 1)
    for a in itertools.product(span, repeat=dim):
        if not any(a):
            continue
        counts["vectors"] += 1
        realized = realized_integer_tan2(a, box_bound, set(targets))
        for t in targets:
            for obtuse in (False, True):
                angle = AngleClass.oblique(t, obtuse)
                counts["instances"] += 1
                verdict = theta_n_of_a_contains(a, angle, budget)
                brute = (t, obtuse) in realized
                counts["brute_found"] += brute
                tag = {"a": list(a), "angle": angle.to_json()}
                # (i) and (ii) are contrapositives; one record covers both
                if brute and not verdict.member:
                    violations.append({**tag, "kind": "soundness"})
                if not verdict.member:
                    continue
                counts["members"] += 1
                if verdict.certificate is not None:
                    w = verdict.certificate.vector
                else:
                    w = witness_for_angle(a, angle, budget)
                if w is None:
                    exhausted.append(tag)
                    continue
                if angle_between(a, w) != angle:
                    violations.append({**tag, "kind": "iii", "witness": list(w)})
                else:
                    counts["witnessed"] += 1
        log.debug("a=%s done", a)
    return {
        "dim": dim,
        "vec_bound": vec_bound,
        "tan2_height": tan2_height,
        "box_bound": box_bound,
        "counts": counts,
        "violations": violations,
        "budget_exhausted": exhausted,
        "ok": not violations,
    }
