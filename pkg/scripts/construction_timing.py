"""Time witness construction over all small vectors in a given dimension.

Reports how many (vector, angle) pairs were witnessed, how many hit the
search budget, and the slowest single call.
"""

from __future__ import annotations

import argparse
import itertools
import time
from dataclasses import dataclass
from fractions import Fraction

from lattice_angles.angles import AngleClass, angle_between
from lattice_angles.angleset import hilbert_criterion, theta_n_contains
from lattice_angles.exactnum import squarefree_int
from lattice_angles.witness import SearchBudget, witness_for_angle


@dataclass
class TimingConfig:
    dim: int = 5
    vec_bound: int = 2
    classes: int = 20
    box: int = 0  # 0 means the default budget for the dimension


def tangent_classes(dim: int, count: int) -> list[Fraction]:
    cores = [s for s in range(1, 400) if squarefree_int(s) == s and theta_n_contains(dim, AngleClass.oblique(s))]
    return [Fraction(s) for s in cores[:count]]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    for name, default in vars(TimingConfig()).items():
        ap.add_argument("--" + name.replace("_", "-"), type=int, default=default)
    cfg = TimingConfig(**vars(ap.parse_args()))
    budget = SearchBudget(cfg.box) if cfg.box else SearchBudget.default_for(cfg.dim)
    tangents = tangent_classes(cfg.dim, cfg.classes) if cfg.dim != 2 else [Fraction(k * k) for k in range(1, cfg.classes + 1)]

    built = missing = 0
    worst = (0.0, None)
    start = time.perf_counter()
    for a in itertools.product(range(-cfg.vec_bound, cfg.vec_bound + 1), repeat=cfg.dim):
        if not any(a):
            continue
        for t in tangents:
            ang = AngleClass.oblique(t)
            if cfg.dim == 3 and not hilbert_criterion(sum(x * x for x in a), t).member:
                continue
            t0 = time.perf_counter()
            w = witness_for_angle(a, ang, budget)
            dt = time.perf_counter() - t0
            if dt > worst[0]:
                worst = (dt, (a, str(t)))
            if w is None:
                missing += 1
                continue
            assert angle_between(a, w) == ang, (a, t, w)
            built += 1
    total = time.perf_counter() - start
    print(f"dim={cfg.dim} box={budget.box_bound} built={built} not_found={missing} "
          f"total={total:.1f}s slowest={worst[0] * 1000:.1f}ms at {worst[1]}")


if __name__ == "__main__":
    main()
