"""Mod-p cohomology models with their Bockstein differential.

The model of ``H*(G; F_p)`` is ``F_p[x_t]/<x_t^{r_t}> (x) Delta(z_{m-1})``
with ``t`` over the p-special degrees D_1 and ``m`` over the full degree set
D = D_1 + D_2.  The Bockstein sends ``z_{t-1}`` to ``x_t`` for t in D_1 and
kills every other generator, so the model is a Koszul complex whose
D_2 generators are cycles.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass

from . import koszul, liedata
from .gradedalg import GradedAlgebra, GradedDims, Polynomial, even, exterior_dims
from .koszul import KoszulComplex
from .liedata import DegreePartition, LieGroupData, UnknownGroup
from .presentation import RingPresentation


def x_name(t: int) -> str:
    return f"x{t}"


def z_name(m: int) -> str:
    """Name of the odd generator attached to degree ``m`` (it has degree m-1)."""
    return f"z{m - 1}"


@dataclass
class ModPModel:
    group: LieGroupData
    p: int
    partition: DegreePartition
    complex: KoszulComplex

    @property
    def algebra(self) -> GradedAlgebra:
        return self.complex.algebra

    @property
    def degree_set(self) -> tuple[int, ...]:
        return self.partition.full

    def x(self, t: int) -> Polynomial:
        return self.algebra.generator(x_name(t))

    def z(self, m: int) -> Polynomial:
        return self.algebra.generator(z_name(m))

    def theta_product(self, degrees) -> Polynomial:
        """``theta_I``: product of the D_1 generators ``z_{t-1}``, t in I ascending."""
        out = self.algebra.one()
        for t in sorted(degrees):
            out = out * self.z(t)
        return out

    def C(self, degrees) -> Polynomial:
        """``C_I = delta(theta_I)``; ``C_{t}`` is ``x_t``."""
        return bockstein_apply(self, self.theta_product(degrees))


def _check_supported(g: LieGroupData) -> None:
    if not (g.is_exceptional or g.family in ("SU", "Sp")):
        raise UnknownGroup(f"mod-p model not available for {g.name}")


def build_model(g: LieGroupData | str, p: int, check: bool = False) -> ModPModel:
    """Model of ``H*(G; F_p)``; ``check`` also verifies delta^2 = 0 on the full basis.

    Models are cached per (group, p) and must be treated as immutable.
    """
    if isinstance(g, str):
        g = liedata.group_data(g)
    _check_supported(g)
    model = _build_model(g, p)
    if check:
        koszul.check_square_zero(model.complex)
    return model


@functools.lru_cache(maxsize=64)
def _build_model(g: LieGroupData, p: int) -> ModPModel:
    part = liedata.degree_partition(g, p)
    squares = liedata.zeta_square_table(g, p) if g.is_exceptional else {}
    base = GradedAlgebra(p, [even(x_name(t), t, g.cup_length(t)) for t in part.d1])
    full = sorted(part.full)
    z = [base.generator(x_name(m)) if m in part.d1 else base.zero() for m in full]
    cx = koszul.build_koszul(
        base,
        z,
        theta_degrees=[m - 1 for m in full],
        squares=[squares.get(m - 1) for m in full],
        theta_names=[z_name(m) for m in full],
        labels=[str(m) for m in full],
        check=False,
    )
    return ModPModel(g, p, part, cx)


def bockstein_apply(m: ModPModel, a: Polynomial) -> Polynomial:
    return koszul.delta(m.complex, a)


def bockstein_cohomology_dims(m: ModPModel) -> GradedDims:
    return koszul.cohomology_dims_bruteforce(m.complex)


def im_delta_dims(m: ModPModel) -> GradedDims:
    return koszul.image_dims_bruteforce(m.complex)


def total_dims(m: ModPModel) -> GradedDims:
    return m.algebra.poincare()


@functools.lru_cache(maxsize=64)
def image_complex(g: LieGroupData, p: int) -> KoszulComplex:
    """``K(Im pi_p^*)``: the Koszul complex on the D_1 generators alone."""
    part = liedata.degree_partition(g, p)
    squares = liedata.zeta_square_table(g, p) if g.is_exceptional else {}
    return koszul.polynomial_koszul(
        p,
        list(part.d1),
        [g.cup_length(t) for t in part.d1],
        squares=[squares.get(t - 1) for t in part.d1],
        names=[x_name(t) for t in part.d1],
        theta_names=[z_name(t) for t in part.d1],
        labels=[str(t) for t in part.d1],
    )


def d2_factor(g: LieGroupData, p: int, name=z_name) -> list[tuple[str, int, str]]:
    """The odd D_2 generators as (name, degree, square) triples."""
    squares = liedata.zeta_square_table(g, p) if g.is_exceptional else {}
    return [(name(m), m - 1, squares.get(m - 1, "0")) for m in liedata.degree_partition(g, p).d2]


def im_delta_presentation(m: ModPModel) -> RingPresentation:
    """Presentation of Im(delta_p); empty when there are no p-special classes."""
    factor = d2_factor(m.group, m.p)
    if not m.partition.d1:
        return RingPresentation(m.p, [], [], GradedDims(), group=m.group.name, augmented=True)
    pres = koszul.image_presentation(image_complex(m.group, m.p))
    pres.group = m.group.name
    pres.tensor_factor = factor
    pres.graded_dims = pres.graded_dims * exterior_dims(d for _, d, _ in factor)
    return pres


def borel_hirzebruch_failures(m: ModPModel) -> list[int]:
    """Degrees where dim H^d != dim H_beta^d + dim Im^d + dim Im^{d+1}."""
    total = total_dims(m)
    hb = bockstein_cohomology_dims(m)
    im = im_delta_dims(m)
    top = m.algebra.top_degree
    return [
        d for d in range(top + 1)
        if total.get(d, 0) != hb.get(d, 0) + im.get(d, 0) + im.get(d + 1, 0)
    ]
