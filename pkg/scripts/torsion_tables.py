"""Write the integral cohomology table and torsion presentations of each group.

One JSON file per group lands in ``--outdir``; each carries the per-degree
table, the Chow ring, and the tau_p presentations with their action
relations.
"""
from __future__ import annotations

import argparse
import json
from dataclasses import dataclass
from pathlib import Path

from liecohom import integral, liedata


@dataclass
class DumpConfig:
    outdir: Path = Path("tables")
    primes: tuple[int, ...] = integral.TORSION_PRIMES


def group_record(name: str, cfg: DumpConfig) -> dict:
    table = integral.assemble(name)
    rec = {
        "table": table.to_dict(),
        "chow": integral.chow_ring(name).to_dict(),
        "free_squares": integral.free_part_squares(name),
        "torsion": {},
    }
    for p in cfg.primes:
        if not liedata.d1(liedata.group_data(name), p):
            continue
        rec["torsion"][str(p)] = {
            "presentation": integral.torsion_presentation(name, p).to_dict(),
            "action_relations": [str(r) for r in integral.action_relations(name, p)],
        }
    return rec


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--outdir", type=Path, default=DumpConfig.outdir)
    ap.add_argument("groups", nargs="*", default=list(liedata.EXCEPTIONAL))
    a = ap.parse_args(argv)
    cfg = DumpConfig(outdir=a.outdir)
    cfg.outdir.mkdir(parents=True, exist_ok=True)
    for name in a.groups:
        path = cfg.outdir / f"{name}.json"
        path.write_text(json.dumps(group_record(name, cfg), sort_keys=True, indent=1) + "\n")
        print(path)


if __name__ == "__main__":
    main()
