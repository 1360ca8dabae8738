"""Integral cohomology: Chow subring, free part, torsion ideals, and the
per-degree group structure ``H^d(G) = Z^f + sum_p (Z/p)^{m_p}``.

Torsion ranks always come from the mod-p model through the isomorphism
``tau_p(G) -> Im(delta_p)`` given by reduction mod p.  The emitted
presentations are checked by substituting them into that model.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import koszul, liedata, modp
from .gradedalg import FreeRing, GradedAlgebra, GradedDims, Polynomial, exterior_dims, odd, render
from .liedata import LieGroupData, UnknownGroup
from .presentation import RingPresentation

TORSION_PRIMES = (2, 3, 5)


def _group(g: LieGroupData | str) -> LieGroupData:
    return liedata.group_data(g) if isinstance(g, str) else g


def rho_name(degree: int) -> str:
    return f"rho{degree}"


# -- Chow ring ---------------------------------------------------------------


def chow_ring(g: LieGroupData | str) -> RingPresentation:
    """``Z[x_t]/<p_t x_t, x_t^{r_t}>`` over all special degrees t."""
    g = _group(g)
    gens = [(modp.x_name(s.degree), s.degree, s.torsion_index) for s in g.special_classes]
    ring = FreeRing(0, [(n, d) for n, d, _ in gens])
    rels = []
    for s in g.special_classes:
        x = ring.generator(modp.x_name(s.degree))
        rels += [render(x.scale(s.torsion_index)), render(x ** s.cup_length)]
    # additive basis: 1 and the nonconstant monomials in the generators of one prime
    dims = GradedDims({0: 1})
    for p in sorted({s.torsion_index for s in g.special_classes}):
        block = GradedDims({0: 1})
        for s in g.special_classes:
            if s.torsion_index == p:
                block = block * GradedDims({k * s.degree: 1 for k in range(s.cup_length)})
        block[0] -= 1
        dims.update(block)
    return RingPresentation(0, gens, rels, dims.clean(), group=g.name)


# -- free part ------------------------------------------------------------------


def rho_degrees(g: LieGroupData) -> list[int]:
    return [2 * l - 1 for l in g.degrees_q]


def _rho_names(g: LieGroupData) -> list[str]:
    names, seen = [], {}
    for d in rho_degrees(g):
        seen[d] = seen.get(d, 0) + 1
        names.append(rho_name(d) if seen[d] == 1 else f"{rho_name(d)}_{seen[d]}")
    return names


def free_part(g: LieGroupData | str) -> GradedAlgebra:
    """``Delta(rho_{2l-1})``, l in q(G), as a square-free algebra over Z.

    The squares of the rho's are torsion and do not affect ranks; see
    :func:`free_part_squares`.
    """
    g = _group(g)
    return GradedAlgebra(0, [odd(n, d) for n, d in zip(_rho_names(g), rho_degrees(g))])


def reduction_of_rho(model: modp.ModPModel, degree: int) -> Polynomial:
    """Image of ``rho_degree`` in the mod-p model, up to a unit.

    ``2l`` in D_2 gives ``z_{2l-1}``; ``2l = t r_t`` with t in D_1 gives
    ``-x_t^{r_t-1} z_{t-1}``.
    """
    m = degree + 1
    part = model.partition
    if m in part.d2:
        return model.z(m)
    g = model.group
    for t in part.d1:
        if t * g.cup_length(t) == m:
            return -(model.x(t) ** (g.cup_length(t) - 1) * model.z(t))
    raise KeyError(f"no primary class of degree {degree} for {g.name} at p={model.p}")


def free_part_squares(g: LieGroupData | str) -> dict[str, str]:
    """Nonzero squares ``rho^2`` (elements of the 2-torsion Chow ideal).

    Computed in the mod-2 model and lifted through the isomorphism between
    the positive Chow ideal and its reduction.
    """
    g = _group(g)
    if not g.is_exceptional:
        return {}
    model = modp.build_model(g, 2)
    out = {}
    for name, d in zip(_rho_names(g), rho_degrees(g)):
        r = reduction_of_rho(model, d)
        sq = r * r
        if sq:
            out[name] = render(sq)
    return out


# -- torsion ---------------------------------------------------------------------


def torsion_presentation(g: LieGroupData | str, p: int) -> RingPresentation:
    g = _group(g)
    part = liedata.degree_partition(g, p)
    if not part.d1:
        return RingPresentation(p, [], [], GradedDims(), group=g.name, augmented=True)
    pres = koszul.image_presentation(modp.image_complex(g, p))
    factor = modp.d2_factor(g, p, name=lambda m: rho_name(m - 1))
    pres.group = g.name
    pres.tensor_factor = factor
    pres.graded_dims = pres.graded_dims * exterior_dims(d for _, d, _ in factor)
    return pres


def torsion_dims(g: LieGroupData | str, p: int) -> GradedDims:
    """Graded F_p-ranks of tau_p(G), read off as Im(delta_p) in the mod-p model."""
    g = _group(g)
    if not liedata.d1(g, p):
        return GradedDims()  # delta_p vanishes identically
    return modp.im_delta_dims(modp.build_model(g, p))


# -- action of the free part -------------------------------------------------------


@dataclass
class ActionRelation:
    """``rho * C_K = rhs`` with rhs in the torsion presentation ring."""

    p: int
    t: int
    K: tuple[int, ...]
    rho: str
    rho_degree: int
    rhs: Polynomial
    branch: str

    @property
    def lhs_text(self) -> str:
        return f"{self.rho}*{c_label(self.K)}"

    def __str__(self) -> str:
        return f"{self.lhs_text} = {render(self.rhs)}"


def c_label(K) -> str:
    K = sorted(K)
    if len(K) == 1:
        return modp.x_name(K[0])
    return "C" + "_".join(str(t) for t in K)


def presentation_ring(g: LieGroupData, p: int) -> FreeRing:
    return koszul.presentation_ring(modp.image_complex(g, p))


def _c_in_ring(ring: FreeRing, K) -> Polynomial:
    if not K:
        return ring.zero()
    return ring.generator(c_label(K))


def action_relation(g: LieGroupData | str, p: int, t: int, K) -> ActionRelation:
    g = _group(g)
    part = liedata.degree_partition(g, p)
    K = tuple(sorted(set(K)))
    if t not in part.d1:
        raise ValueError(f"{t} is not a {p}-special degree of {g.name}")
    if not K or any(k not in part.d1 for k in K):
        raise ValueError(f"K={K} must be a nonempty subset of {part.d1}")
    r = g.cup_length(t)
    ring = presentation_ring(g, p)
    x = ring.generator(modp.x_name(t))
    if t not in K:
        rhs, branch = x ** (r - 1) * _c_in_ring(ring, K + (t,)), "disjoint"
    elif p != 2:
        rhs, branch = ring.zero(), "odd"
    else:
        sq = liedata.zeta_square_table(g, 2).get(t - 1, "0")
        rest = tuple(k for k in K if k != t)
        rhs = x ** (r - 1) * ring.parse(sq) * _c_in_ring(ring, rest)
        branch = "square"
    return ActionRelation(p, t, K, rho_name(t * r - 1), t * r - 1, rhs, branch)


def action_relations(g: LieGroupData | str, p: int) -> list[ActionRelation]:
    g = _group(g)
    d1 = liedata.d1(g, p)
    out = []
    for t in d1:
        for size in range(1, len(d1) + 1):
            for K in itertools.combinations(d1, size):
                out.append(action_relation(g, p, t, K))
    return out


# -- assembly -------------------------------------------------------------------------


@dataclass
class CohomologyGroupTable:
    group: str
    top: int
    free: GradedDims
    torsion: dict[int, GradedDims] = field(default_factory=dict)

    def entry(self, d: int) -> dict[str, int]:
        out = {}
        if self.free.get(d, 0):
            out["free"] = self.free[d]
        for p in sorted(self.torsion):
            if self.torsion[p].get(d, 0):
                out[f"Z/{p}"] = self.torsion[p][d]
        return out

    def to_dict(self) -> dict:
        return {
            "group": self.group,
            "degrees": {str(d): self.entry(d) for d in range(self.top + 1)},
        }

    def to_text(self) -> str:
        lines = [f"H^*({self.group}; Z)"]
        for d in range(self.top + 1):
            parts = []
            for key, n in self.entry(d).items():
                base = "Z" if key == "free" else key
                parts.append(base if n == 1 else f"({base})^{n}")
            if parts:
                lines.append(f"  {d:4d}: " + " + ".join(parts))
        return "\n".join(lines) + "\n"


def _check_assemble(g: LieGroupData) -> None:
    if not (g.is_exceptional or g.family in ("SU", "Sp")):
        raise UnknownGroup(f"integral assembly not available for {g.name}")


def assemble(g: LieGroupData | str) -> CohomologyGroupTable:
    g = _group(g)
    _check_assemble(g)
    free = free_part(g).poincare()
    torsion = {p: torsion_dims(g, p) for p in TORSION_PRIMES}
    table = CohomologyGroupTable(g.name, g.dim, free, {p: t for p, t in torsion.items() if t})
    if table.entry(0) != {"free": 1} or table.entry(g.dim) != {"free": 1}:
        raise ArithmeticError(f"{g.name}: degree 0 or top degree is not Z")
    return table


def uct_check(g: LieGroupData | str, p: int, table: CohomologyGroupTable | None = None) -> list[int]:
    """Degrees d where dim H^d(G;F_p) != f(d) + m_p(d) + m_p(d+1)."""
    g = _group(g)
    table = table or assemble(g)
    lhs = modp.total_dims(modp.build_model(g, p))
    m = table.torsion.get(p, GradedDims())
    return [
        d for d in range(g.dim + 1)
        if lhs.get(d, 0) != table.free.get(d, 0) + m.get(d, 0) + m.get(d + 1, 0)
    ]


# -- embedding into the mod-p model -------------------------------------------------


@dataclass
class EmbeddingReport:
    group: str
    p: int
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    dims_match: bool = True

    @property
    def ok(self) -> bool:
        return not self.failures and self.dims_match


def model_images(model: modp.ModPModel, ring: FreeRing) -> dict[str, Polynomial]:
    """x_t -> reduced x_t, C_I -> delta_p(theta_I)."""
    images = {}
    for name in ring.names:
        if name.startswith("C"):
            images[name] = model.C([int(s) for s in name[1:].split("_")])
        else:
            images[name] = model.x(int(name[1:]))
    return images


def _same_up_to_unit(a: Polynomial, b: Polynomial, p: int) -> bool:
    return any(a == b.scale(u) for u in range(1, p)) if (a or b) else True


def verify_presentation_embedding(g: LieGroupData | str, p: int) -> EmbeddingReport:
    g = _group(g)
    report = EmbeddingReport(g.name, p)
    if not liedata.d1(g, p):
        return report
    model = modp.build_model(g, p)
    pres = torsion_presentation(g, p)
    ring = pres.ring
    images = model_images(model, ring)
    for text in pres.relations:
        value = koszul.substitute(ring.parse(text), images, model.algebra)
        report.checked += 1
        if value:
            report.failures.append(f"relation {text} -> {render(value)}")
    for rel in action_relations(g, p):
        lhs = reduction_of_rho(model, rel.rho_degree) * model.C(rel.K)
        rhs = koszul.substitute(rel.rhs, images, model.algebra)
        report.checked += 1
        if not _same_up_to_unit(lhs, rhs, p):
            report.failures.append(f"action {rel}: {render(lhs)} vs {render(rhs)}")
    for name, _, sq in pres.tensor_factor:
        r = reduction_of_rho(model, int(name[3:]))
        report.checked += 1
        if r * r != model.algebra.parse(sq):
            report.failures.append(f"square of {name} is not {sq}")
    report.dims_match = pres.graded_dims == modp.im_delta_dims(model)
    return report

