"""Time model construction and Bockstein ranks for every exceptional (G, p).

    python scripts/model_timings.py --primes 2 3 5 7 --out timings.csv
"""
from __future__ import annotations

import argparse
import csv
import sys
import time
from dataclasses import dataclass, field

from liecohom import liedata, modp


@dataclass
class TimingConfig:
    groups: list[str] = field(default_factory=lambda: list(liedata.EXCEPTIONAL))
    primes: list[int] = field(default_factory=lambda: [2, 3, 5, 7])
    out: str | None = None


def time_one(name: str, p: int) -> dict:
    modp._build_model.cache_clear()
    modp.image_complex.cache_clear()
    t0 = time.perf_counter()
    m = modp.build_model(name, p)
    m.algebra.poincare()  # the basis is built lazily
    t1 = time.perf_counter()
    hb = modp.bockstein_cohomology_dims(m)
    im = modp.im_delta_dims(m)
    t2 = time.perf_counter()
    return {
        "group": name,
        "p": p,
        "basis": m.algebra.dimension,
        "h_beta": hb.total,
        "image": im.total,
        "build_s": round(t1 - t0, 3),
        "ranks_s": round(t2 - t1, 3),
    }


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--groups", nargs="+", default=TimingConfig().groups)
    ap.add_argument("--primes", nargs="+", type=int, default=TimingConfig().primes)
    ap.add_argument("--out")
    cfg = TimingConfig(**vars(ap.parse_args(argv)))

    rows = [time_one(g, p) for g in cfg.groups for p in cfg.primes]
    fh = open(cfg.out, "w", newline="") if cfg.out else sys.stdout
    w = csv.DictWriter(fh, fieldnames=list(rows[0]))
    w.writeheader()
    w.writerows(rows)
    if cfg.out:
        fh.close()


if __name__ == "__main__":
    main()
