"""Command-line interface.

Exit codes: 0 success, 1 an invariant failed, 2 usage error.
``LIECOHOM_THREADS`` sets how many verify suites run at once (default 1);
the report order does not depend on it.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import checks, integral, liedata, modp, weyl
from .gradedalg import FreeRing, GradedDims, render
from .presentation import RingPresentation


class UsageError(Exception):
    pass


def _emit(obj, fmt: str, text: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(obj, sort_keys=True) + "\n")
    else:
        out.write(text if text.endswith("\n") else text + "\n")


def _dims_text(title: str, dims: GradedDims) -> str:
    body = " ".join(f"{d}:{c}" for d, c in sorted(dims.items()) if c)
    return f"{title}\n  {body or '0'}  (total {dims.total})\n"


def _group(name: str) -> liedata.LieGroupData:
    try:
        return liedata.group_data(name)
    except liedata.UnknownGroup as e:
        raise UsageError(str(e)) from None


def model_presentation(m: modp.ModPModel) -> RingPresentation:
    alg = m.algebra
    ring = FreeRing(m.p, list(zip(alg.names, alg.gen_degrees)))
    rels = []
    for gen in alg.generators:
        x = ring.generator(gen.name)
        if gen.is_odd:
            sq = ring.parse(gen.square) if gen.square else ring.zero()
            rels.append(render(x * x - sq))
        else:
            rels.append(render(x ** gen.truncation))
    gens = [(n, d, m.p) for n, d in zip(alg.names, alg.gen_degrees)]
    return RingPresentation(m.p, gens, rels, modp.total_dims(m), group=m.group.name)


def free_presentation(g: liedata.LieGroupData) -> RingPresentation:
    alg = integral.free_part(g)
    squares = integral.free_part_squares(g)
    xs = sorted({t for s in squares.values() for t in _x_degrees(s)})
    gens = [(n, d, 0) for n, d in zip(alg.names, alg.gen_degrees)]
    gens += [(modp.x_name(t), t, g.special(t).torsion_index) for t in xs]
    ring = FreeRing(0, [(n, d) for n, d, _ in gens])
    rels = []
    for name in alg.names:
        rho = ring.generator(name)
        sq = ring.parse(squares[name]) if name in squares else ring.zero()
        rels.append(render(rho * rho - sq))
    return RingPresentation(0, gens, rels, alg.poincare(), group=g.name)


def _x_degrees(text: str) -> list[int]:
    return [int(f.split("^")[0][1:]) for f in text.split("*")]


def cmd_present(a, out) -> int:
    g = _group(a.group)
    modes = [k for k in ("chow", "free", "torsion") if getattr(a, k)]
    if len(modes) > 1:
        raise UsageError("choose at most one of --chow, --free, --torsion")
    mode = modes[0] if modes else ("model" if a.prime else "chow")
    if mode == "torsion" and not a.prime:
        raise UsageError("--torsion needs --prime")
    if mode in ("chow", "free") and a.prime:
        raise UsageError(f"--{mode} is integral; drop --prime")
    if mode == "chow":
        pres = integral.chow_ring(g)
    elif mode == "free":
        pres = free_presentation(g)
    elif mode == "torsion":
        pres = integral.torsion_presentation(g, a.prime)
    else:
        pres = model_presentation(_model(g, a.prime))
    _emit(pres.to_dict(), a.format, pres.to_text(), out)
    return 0


def _model(g, p) -> modp.ModPModel:
    try:
        return modp.build_model(g, p)
    except liedata.UnknownGroup as e:
        raise UsageError(str(e)) from None


def cmd_table(a, out) -> int:
    g = _group(a.group)
    try:
        table = integral.assemble(g)
    except liedata.UnknownGroup as e:
        raise UsageError(str(e)) from None
    _emit(table.to_dict(), a.format, table.to_text(), out)
    return 0


def cmd_dims(a, out) -> int:
    if a.bockstein and a.image:
        raise UsageError("choose at most one of --bockstein, --image")
    m = _model(_group(a.group), a.prime)
    if a.bockstein:
        what, dims = "H_beta", modp.bockstein_cohomology_dims(m)
    elif a.image:
        what, dims = "Im delta", modp.im_delta_dims(m)
    else:
        what, dims = "H", modp.total_dims(m)
    obj = {"group": m.group.name, "prime": a.prime, "kind": what,
           "graded_dims": {str(d): c for d, c in sorted(dims.items()) if c}}
    _emit(obj, a.format, _dims_text(f"{what}({m.group.name}; F_{a.prime})", dims), out)
    return 0


def cmd_weyl(a, out) -> int:
    try:
        r = weyl.root_system(a.system)
    except ValueError as e:
        raise UsageError(str(e)) from None
    try:
        hist = weyl.enumerate_weyl(r, cap=a.cap, allow_large=a.allow_large)
    except weyl.CapExceeded as e:
        raise UsageError(str(e)) from None
    match = weyl.compare(r, hist)
    obj = {"system": r.name, "group": r.group, "order": hist.order,
           "max_length": hist.max_length, "counts": hist.counts, "matches_flag_poincare": match}
    text = (f"W({r.name}) [{r.group}]: |W| = {hist.order}, max length {hist.max_length}\n"
            f"  counts {hist.counts}\n  flag Poincare match: {'yes' if match else 'NO'}\n")
    _emit(obj, a.format, text, out)
    return 0 if match else 1


def cmd_verify(a, out) -> int:
    available = checks.suites(seed=a.seed, trials=a.trials, allow_large=a.allow_large)
    names = list(available) if a.suite == "all" else [a.suite]
    if any(n not in available for n in names):
        raise UsageError(f"unknown suite {a.suite!r}; choose from all, {', '.join(available)}")
    with ThreadPoolExecutor(max_workers=_threads()) as pool:
        results = list(pool.map(lambda n: available[n](), names))
    report = {n: [f.to_dict() for f in fs] for n, fs in zip(names, results)}
    failed = any(results)
    lines = []
    for name in names:
        status = "ok" if not report[name] else f"FAILED ({len(report[name])})"
        lines.append(f"{name:10s} {status}")
        lines += [f"    {checks.Failure(**f)}" for f in report[name]]
    _emit({"seed": a.seed, "trials": a.trials, "failures": report}, a.format, "\n".join(lines), out)
    return 1 if failed else 0


def _threads() -> int:
    raw = os.environ.get("LIECOHOM_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"LIECOHOM_THREADS must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise UsageError(f"LIECOHOM_THREADS must be a positive integer, got {raw!r}")
    return n


def cmd_dump(a, out) -> int:
    out.write(json.dumps(liedata.all_tables(), sort_keys=True) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="liecohom", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=("json", "text"), default="text")

    p = sub.add_parser("present", help="print a ring presentation")
    p.add_argument("group")
    p.add_argument("--prime", type=int)
    p.add_argument("--chow", action="store_true")
    p.add_argument("--free", action="store_true")
    p.add_argument("--torsion", action="store_true")
    fmt(p)
    p.set_defaults(func=cmd_present)

    p = sub.add_parser("table", help="integral cohomology groups per degree")
    p.add_argument("group")
    fmt(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("dims", help="graded dimensions of the mod-p model")
    p.add_argument("group")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--bockstein", action="store_true")
    p.add_argument("--image", action="store_true")
    fmt(p)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("weyl", help="enumerate a Weyl group and compare with the flag Poincare series")
    p.add_argument("system")
    p.add_argument("--cap", type=int, default=weyl.DEFAULT_CAP)
    p.add_argument("--allow-large", action="store_true", help="permit E6/E7")
    fmt(p)
    p.set_defaults(func=cmd_weyl)

    p = sub.add_parser("verify", help="run invariant suites")
    p.add_argument("suite", nargs="?", default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--allow-large", action="store_true")
    fmt(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dump-tables", help="embedded group data as JSON")
    p.set_defaults(func=cmd_dump)
    return ap


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % k for k in range(2, int(n**0.5) + 1))


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    ap = build_parser()
    try:
        a = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        if getattr(a, "prime", None) is not None and not _is_prime(a.prime):
            raise UsageError(f"--prime must be prime, got {a.prime}")
        return a.func(a, out)
    except UsageError as e:
        err.write(f"liecohom: error: {e}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
