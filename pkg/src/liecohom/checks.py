"""Invariant suites shared by the CLI ``verify`` command, tests and scripts.

Every suite returns a list of :class:`Failure`; an empty list means the
invariant held in every case examined.
"""
from __future__ import annotations

import random
from dataclasses import asdict, dataclass

from . import integral, koszul, liedata, modp, weyl
from .gradedalg import exterior_dims

EXCEPTIONAL = liedata.EXCEPTIONAL
WEYL_SYSTEMS = ("A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "D4", "G2", "F4")


@dataclass
class Failure:
    module: str
    operation: str
    invariant: str
    detail: str
    degree: int | None = None

    def to_dict(self) -> dict:
        return asdict(self)

    def __str__(self) -> str:
        where = f" degree {self.degree}" if self.degree is not None else ""
        return f"[{self.module}.{self.operation}{where}] {self.invariant}: {self.detail}"


# -- random Koszul complexes -----------------------------------------------------


def random_shape(rng: random.Random, max_r: int = 4, max_k: int = 4):
    p = rng.choice((2, 3, 5))
    r = rng.randint(1, max_r)
    degrees = [rng.choice((2, 4, 6, 8)) for _ in range(r)]
    truncs = [rng.randint(2, max_k) for _ in range(r)]
    return p, degrees, truncs


def random_squares(rng: random.Random, p: int, degrees: list[int], truncs: list[int]):
    """Random monomial squares for the odd generators (characteristic 2 only)."""
    if p != 2:
        return None
    base = koszul.truncated_base(p, degrees, truncs)
    out = []
    for d in degrees:
        target = 2 * (d - 1)
        choices = [m for m in base.basis_in_degree(target)] if target else []
        if choices and rng.random() < 0.7:
            mono = rng.choice(choices)
            out.append("*".join(f"{n}^{e}" for n, e in zip(base.names, mono) if e))
        else:
            out.append(None)
    return out


def random_complex(rng: random.Random, structured: bool = False, **kw) -> koszul.KoszulComplex:
    p, degrees, truncs = random_shape(rng, **kw)
    squares = random_squares(rng, p, degrees, truncs) if structured else None
    return koszul.polynomial_koszul(p, degrees, truncs, squares=squares)


def koszul_oracle(trials: int = 100, seed: int = 0) -> list[Failure]:
    rng = random.Random(seed)
    out = []
    for _ in range(trials):
        c = random_complex(rng, structured=True)
        shape = f"p={c.characteristic} deg={list(c.base.gen_degrees)} k={[g.truncation for g in c.base.generators]}"
        brute = koszul.cohomology_dims_bruteforce(c)
        closed = koszul.closed_form_cohomology(c).poincare()
        if brute != closed:
            out.append(Failure("koszul", "closed_form_cohomology", "H(K(A)) = Delta(g_i)",
                               f"{shape}: {closed.as_dict()} vs {brute.as_dict()}"))
        im = koszul.image_dims_bruteforce(c)
        pres = koszul.image_dims_from_presentation(c)
        if im != pres:
            out.append(Failure("koszul", "image_presentation", "Im delta = A{C_I}/<R_J, D_K>",
                               f"{shape}: {pres.as_dict()} vs {im.as_dict()}"))
    return out


def product_expansion(trials: int = 30, seed: int = 0) -> list[Failure]:
    """C_H C_L equals its S-expansion, and every R, D, S relation vanishes in C."""
    rng = random.Random(seed)
    out = []
    for _ in range(trials):
        c = random_complex(rng, structured=True, max_r=4, max_k=3)
        r = c.r
        for H in koszul.subsets(r, 2):
            for L in koszul.subsets(r, 2):
                lhs = koszul.C_element(c, H) * koszul.C_element(c, L)
                if lhs != koszul.s_expansion(c, H, L):
                    out.append(Failure("koszul", "s_hl", "C_H C_L = S-expansion",
                                       f"p={c.characteristic} H={H} L={L}"))
        images = koszul.ring_images(c)
        for fam, rels in koszul.presentation_relations(c).items():
            for rel in rels:
                if koszul.substitute(rel, images, c.algebra):
                    out.append(Failure("koszul", "presentation_relations",
                                       f"{fam} relation vanishes in C", str(rel)))
    return out


# -- groups ---------------------------------------------------------------------------


def tables() -> list[Failure]:
    out = []
    if liedata.table_checksum() != liedata.TABLE_CHECKSUM:
        out.append(Failure("liedata", "table_checksum", "embedded table unchanged",
                           liedata.table_checksum()))
    names = list(EXCEPTIONAL) + [f"SU({n})" for n in range(2, 9)] + [f"Sp({n})" for n in range(1, 9)]
    for name in names:
        g = liedata.group_data(name)
        if sum(2 * l - 1 for l in g.degrees_q) != g.dim:
            out.append(Failure("liedata", "group_data", "sum(2l-1) = dim G", name))
        for p in (2, 3, 5, 7):
            part = liedata.degree_partition(g, p)
            if len(part.full) != g.rank:
                out.append(Failure("liedata", "degree_partition", "|D(G,p)| = rank", f"{name} p={p}"))
    return out


def bockstein(groups=EXCEPTIONAL, primes=(2, 3, 5, 7)) -> list[Failure]:
    out = []
    for name in groups:
        for p in primes:
            m = modp.build_model(name, p)
            total = modp.bockstein_cohomology_dims(m).total
            if total != 2 ** m.group.rank:
                out.append(Failure("modp", "bockstein_cohomology_dims", "dim H_beta = 2^rank",
                                   f"{name} p={p}: {total}"))
            for d in modp.borel_hirzebruch_failures(m):
                out.append(Failure("modp", "bockstein_cohomology_dims",
                                   "P(H) = P(H_beta) + (1 + 1/t) P(Im delta)", f"{name} p={p}", d))
            pres = modp.im_delta_presentation(m)
            if pres.graded_dims != modp.im_delta_dims(m):
                out.append(Failure("modp", "im_delta_presentation",
                                   "presentation dims = Im delta dims", f"{name} p={p}"))
    return out


def uct(groups=EXCEPTIONAL, primes=(2, 3, 5)) -> list[Failure]:
    out = []
    for name in groups:
        table = integral.assemble(name)
        for p in primes:
            for d in integral.uct_check(name, p, table):
                out.append(Failure("integral", "uct_check",
                                   "dim H^d(G;F_p) = f(d) + m_p(d) + m_p(d+1)", f"{name} p={p}", d))
    return out


def embedding(groups=EXCEPTIONAL, primes=(2, 3, 5)) -> list[Failure]:
    out = []
    for name in groups:
        for p in primes:
            rep = integral.verify_presentation_embedding(name, p)
            for f in rep.failures:
                out.append(Failure("integral", "verify_presentation_embedding",
                                   "relation vanishes in the mod-p model", f"{name} p={p}: {f}"))
            if not rep.dims_match:
                out.append(Failure("integral", "verify_presentation_embedding",
                                   "presentation dims = Im delta dims", f"{name} p={p}"))
    return out


def classical(max_n: int = 5) -> list[Failure]:
    out = []
    for fam, lo in (("SU", 2), ("Sp", 1)):
        for n in range(lo, max_n + 1):
            g = liedata.group_data(f"{fam}({n})")
            table = integral.assemble(g)
            expected = exterior_dims(2 * l - 1 for l in g.degrees_q)
            if table.torsion or table.free != expected:
                out.append(Failure("integral", "assemble", "torsion-free exterior cohomology", g.name))
    return out


def weyl_concordance(systems=WEYL_SYSTEMS, cap: int = weyl.DEFAULT_CAP,
                     allow_large: bool = False) -> list[Failure]:
    out = []
    for name in systems:
        r = weyl.root_system(name)
        hist = weyl.enumerate_weyl(r, cap=cap, allow_large=allow_large)
        g = liedata.group_data(r.group)
        if not weyl.compare(r, hist):
            out.append(Failure("weyl", "enumerate_weyl", "length histogram = flag Poincare coefficients", name))
        if hist.max_length != (g.dim - g.rank) // 2:
            out.append(Failure("weyl", "enumerate_weyl", "max length = (dim - rank)/2", name))
        if not hist.is_palindromic():
            out.append(Failure("weyl", "enumerate_weyl", "histogram palindromic", name))
    return out


def suites(seed: int = 0, trials: int = 100, allow_large: bool = False) -> dict:
    systems = WEYL_SYSTEMS + (("E6",) if allow_large else ())
    return {
        "tables": lambda: tables(),
        "koszul": lambda: koszul_oracle(trials, seed),
        "products": lambda: product_expansion(max(1, trials // 4), seed),
        "bockstein": lambda: bockstein(),
        "uct": lambda: uct(),
        "embedding": lambda: embedding(),
        "classical": lambda: classical(),
        "weyl": lambda: weyl_concordance(systems, allow_large=allow_large),
    }
