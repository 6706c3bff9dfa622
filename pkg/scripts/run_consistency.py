"""Cross-check decisions and witnesses against brute force over a grid of vectors.

    python scripts/run_consistency.py --dim 3 --vec-bound 3 --tan2-height 30 --box 100
"""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from lattice_angles.oracle import consistency_report


@dataclass
class ConsistencyConfig:
    dim: int = 3
    vec_bound: int = 3
    tan2_height: int = 30
    box: int = 100
    out: str = ""


def parse_args() -> ConsistencyConfig:
    cfg = ConsistencyConfig()
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    for name, value in asdict(cfg).items():
        ap.add_argument("--" + name.replace("_", "-"), type=type(value), default=value)
    return ConsistencyConfig(**vars(ap.parse_args()))


def main() -> None:
    cfg = parse_args()
    start = time.perf_counter()
    report = consistency_report(cfg.dim, cfg.vec_bound, cfg.tan2_height, cfg.box)
    report["seconds"] = round(time.perf_counter() - start, 2)
    text = json.dumps(report, indent=2)
    if cfg.out:
        Path(cfg.out).write_text(text + "\n")
    c = report["counts"]
    print(f"dim={cfg.dim} vectors={c['vectors']} instances={c['instances']} members={c['members']} "
          f"brute_found={c['brute_found']} witnessed={c['witnessed']} "
          f"violations={len(report['violations'])} exhausted={len(report['budget_exhausted'])} "
          f"time={report['seconds']}s")
    raise SystemExit(0 if report["ok"] else 1)


if __name__ == "__main__":
    main()
