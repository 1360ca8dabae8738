"""Sweep seeds of the randomized Koszul oracle and report how many shapes were hit.

Useful for pushing the closed-form vs brute-force comparison well past the
100 complexes the test suite runs.
"""
from __future__ import annotations

import argparse
import random
import time
from collections import Counter
from dataclasses import dataclass

from liecohom import checks


@dataclass
class SweepConfig:
    seeds: int = 20
    trials: int = 100
    first_seed: int = 0


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seeds", type=int, default=SweepConfig.seeds)
    ap.add_argument("--trials", type=int, default=SweepConfig.trials)
    ap.add_argument("--first-seed", type=int, default=SweepConfig.first_seed)
    cfg = SweepConfig(**vars(ap.parse_args(argv)))

    shapes: Counter = Counter()
    failures = 0
    start = time.perf_counter()
    for seed in range(cfg.first_seed, cfg.first_seed + cfg.seeds):
        rng = random.Random(seed)
        for _ in range(cfg.trials):
            c = checks.random_complex(rng, structured=True)
            shapes[(c.characteristic, c.r)] += 1
        bad = checks.koszul_oracle(cfg.trials, seed)
        failures += len(bad)
        for f in bad:
            print(f"seed {seed}: {f}")
    elapsed = time.perf_counter() - start
    print(f"{cfg.seeds * cfg.trials} complexes, {failures} failures, {elapsed:.1f}s")
    for (p, r), n in sorted(shapes.items()):
        print(f"  p={p} r={r}: {n}")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
