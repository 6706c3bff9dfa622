"""Compare the two closed-form membership rules with the Hilbert-symbol criterion.

Prints discrepancy counts for both rules, plus the instances where the literal
reading of the tangent rule's odd branch disagrees.
"""

from __future__ import annotations

import argparse
from collections import Counter
from dataclasses import dataclass

from lattice_angles.angleset import (
    classify_by_norm,
    classify_by_tangent,
    hilbert_criterion,
    norm_rule_applies,
)
from lattice_angles.exactnum import is_three_square, odd_primes, squarefree_int


@dataclass
class SweepConfig:
    max_norm: int = 500
    max_tangent_core: int = 100
    show: int = 10


def norm_rule_sweep(cfg: SweepConfig) -> tuple[int, list]:
    norms = [n for n in range(1, cfg.max_norm + 1) if is_three_square(n) and norm_rule_applies(n)]
    cores = [s for s in range(1, cfg.max_tangent_core + 1) if squarefree_int(s) == s and s % 8 != 7]
    bad = [(n, s) for n in norms for s in cores if classify_by_norm(n, s) != hilbert_criterion(n, s).member]
    return len(norms) * len(cores), bad


def tangent_rule_sweep(cfg: SweepConfig) -> tuple[int, list, list]:
    cores = [1, 2] + [p for p in odd_primes(cfg.max_tangent_core) if p % 8 != 7]
    norms = [n for n in range(1, cfg.max_norm + 1) if is_three_square(n)]
    bad, literal = [], []
    for n in norms:
        for p in cores:
            truth = hilbert_criterion(n, p).member
            if classify_by_tangent(n, p) != truth:
                bad.append((n, p))
            if classify_by_tangent(n, p, literal=True) != truth:
                literal.append((n, p))
    return len(norms) * len(cores), bad, literal


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-norm", type=int, default=SweepConfig.max_norm)
    ap.add_argument("--max-tangent-core", type=int, default=SweepConfig.max_tangent_core)
    ap.add_argument("--show", type=int, default=SweepConfig.show)
    cfg = SweepConfig(**vars(ap.parse_args()))

    total, bad = norm_rule_sweep(cfg)
    print(f"norm rule:    {total} instances, {len(bad)} discrepancies {bad[:cfg.show]}")
    total, bad, literal = tangent_rule_sweep(cfg)
    print(f"tangent rule: {total} instances, {len(bad)} discrepancies {bad[:cfg.show]}")
    by_core = Counter(p for _, p in literal)
    print(f"literal odd-branch reading: {len(literal)} divergences, by tangent class {dict(sorted(by_core.items()))}")
    print(f"  first few (|a|^2, tan^2): {literal[:cfg.show]}")


if __name__ == "__main__":
    main()
