"""Koszul complexes K(A; z_1..z_k) over truncated polynomial algebras.

The complex is the algebra ``C = A (x) Delta(theta_1..theta_k)`` with the
degree-one antiderivation ``delta(theta_t) = z_t``, ``delta(A) = 0``.  Odd
generators may carry prescribed squares (characteristic 2 only), which
makes ``C`` a differential graded algebra.

Two independent routes are provided for every dimension count: brute-force
rank computations of ``delta`` in the canonical monomial bases, and closed
forms built from the explicit elements ``g_I, C_I, R_I, D_I, S_{H,L}``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import fplinalg
from .fplinalg import MatrixFp
from .gradedalg import (
    AlgebraError,
    FreeRing,
    GeneratorSpec,
    GradedAlgebra,
    GradedDims,
    Polynomial,
    even,
    odd,
    render,
)
from .presentation import RingPresentation


class ShapeError(AlgebraError):
    pass


@dataclass
class KoszulComplex:
    base: GradedAlgebra
    z: list[Polynomial]  # in ``base``
    algebra: GradedAlgebra  # C = base (x) Delta(theta)
    theta_names: tuple[str, ...]
    labels: tuple[str, ...]
    _theta_index: tuple[int, ...] = field(repr=False, default=())
    _z_lifted: list[Polynomial] = field(repr=False, default_factory=list)

    @property
    def characteristic(self) -> int:
        return self.algebra.characteristic

    @property
    def r(self) -> int:
        return len(self.z)

    # -- lifting -----------------------------------------------------------

    def lift(self, a: Polynomial) -> Polynomial:
        """Embed an element of the base algebra into C."""
        pad = (0,) * (len(self.algebra.names) - len(self.base.names))
        return Polynomial(self.algebra, {m + pad: c for m, c in a.terms.items()})

    def theta(self, i: int) -> Polynomial:
        return self.algebra.generator(self.theta_names[i])

    def y(self, i: int) -> Polynomial:
        return self._z_lifted[i]


def build_koszul(
    base: GradedAlgebra,
    z: list[Polynomial],
    theta_degrees: list[int] | None = None,
    squares: list[str | None] | None = None,
    theta_names: list[str] | None = None,
    labels: list[str] | None = None,
    check: bool = True,
) -> KoszulComplex:
    """Build K(base; z).  ``squares`` are texts in the base generator names."""
    if any(g.is_odd for g in base.generators):
        raise ShapeError("base algebra must have only even generators")
    k = len(z)
    if theta_degrees is None:
        theta_degrees = []
        for t in z:
            if not t:
                raise ShapeError("theta degree must be given for z = 0")
            if not t.is_homogeneous():
                raise ShapeError("each z_t must be homogeneous")
            theta_degrees.append(t.degree - 1)
    for t, d in zip(z, theta_degrees):
        if t.ring is not base:
            raise ShapeError("z must lie in the base algebra")
        if t and (not t.is_homogeneous() or t.degree != d + 1):
            raise ShapeError("each z_t must be homogeneous of degree deg(theta_t)+1")
        if d % 2 == 0:
            raise ShapeError("z_t must have even degree")
    theta_names = list(theta_names or [f"t{i + 1}" for i in range(k)])
    labels = list(labels or [str(i + 1) for i in range(k)])
    squares = list(squares or [None] * k)
    gens = list(base.generators) + [
        odd(n, d, s) for n, d, s in zip(theta_names, theta_degrees, squares)
    ]
    alg = GradedAlgebra(base.characteristic, gens)
    cx = KoszulComplex(base, list(z), alg, tuple(theta_names), tuple(labels))
    cx._theta_index = tuple(alg.names.index(n) for n in theta_names)
    cx._z_lifted = [cx.lift(t) for t in z]
    if check:
        check_square_zero(cx)
    return cx


def check_square_zero(c: KoszulComplex) -> None:
    alg = c.algebra
    for d in range(alg.top_degree + 1):
        for mono in alg.basis_in_degree(d):
            if delta(c, delta(c, Polynomial(alg, {mono: 1}))):
                raise AlgebraError(f"delta^2 != 0 on {mono}")


def truncated_base(characteristic: int, degrees: list[int], truncations: list[int],
                   names: list[str] | None = None) -> GradedAlgebra:
    names = names or [f"y{i + 1}" for i in range(len(degrees))]
    return GradedAlgebra(
        characteristic, [even(n, d, k) for n, d, k in zip(names, degrees, truncations)]
    )


def polynomial_koszul(characteristic: int, degrees: list[int], truncations: list[int],
                      squares: list[str | None] | None = None, **kw) -> KoszulComplex:
    """K(A) for ``A = F_p[y_1..y_r]/<y_i^k_i>`` with ``z = (y_1..y_r)``."""
    base = truncated_base(characteristic, degrees, truncations, kw.pop("names", None))
    z = [base.generator(n) for n in base.names]
    return build_koszul(base, z, squares=squares, **kw)


# -- the differential ----------------------------------------------------------


def delta_monomial(c: KoszulComplex, mono: tuple) -> dict[tuple, int]:
    alg = c.algebra
    out: dict[tuple, int] = {}
    red = alg.reduce
    odd_seen = 0
    theta_pos = {idx: i for i, idx in enumerate(c._theta_index)}
    for j in alg.odd_index:
        if not mono[j]:
            continue
        i = theta_pos.get(j)
        if i is not None and c.z[i]:
            sign = -1 if odd_seen % 2 else 1
            rest = list(mono)
            rest[j] = 0
            rest = tuple(rest)
            for zm, zc in c._z_lifted[i].terms.items():
                m = tuple(a + b for a, b in zip(rest, zm))
                if not alg.admissible(m):
                    continue
                v = red(out.get(m, 0) + sign * zc)
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        odd_seen += 1
    return out


def delta(c: KoszulComplex, a: Polynomial) -> Polynomial:
    out: dict[tuple, int] = {}
    red = c.algebra.reduce
    for mono, coeff in a.terms.items():
        for m, v in delta_monomial(c, mono).items():
            w = red(out.get(m, 0) + coeff * v)
            if w:
                out[m] = w
            else:
                out.pop(m, None)
    return Polynomial._raw(c.algebra, out)


def delta_matrix(c: KoszulComplex, d: int) -> MatrixFp:
    """Matrix of delta: C^d -> C^{d+1}, one row per source basis monomial."""
    alg = c.algebra
    src = alg.basis_in_degree(d)
    dst = {m: i for i, m in enumerate(alg.basis_in_degree(d + 1))}
    rows = []
    for mono in src:
        row = [0] * len(dst)
        for m, v in delta_monomial(c, mono).items():
            row[dst[m]] = v
        rows.append(row)
    return MatrixFp.from_rows(alg.characteristic, rows, len(dst))


def delta_ranks(c: KoszulComplex) -> dict[int, int]:
    """rank of delta leaving each degree (computed once per complex)."""
    cache = getattr(c, "_rank_cache", None)
    if cache is None:
        if c.characteristic == 0:
            raise AlgebraError("brute force requires a prime characteristic")
        cache = {}
        for d in range(c.algebra.top_degree + 1):
            m = delta_matrix(c, d)
            cache[d] = fplinalg.rank(m) if m.rows and m.cols else 0
        c._rank_cache = cache
    return cache


def cohomology_dims_bruteforce(c: KoszulComplex, up_to: int | None = None) -> GradedDims:
    top = c.algebra.top_degree if up_to is None else min(up_to, c.algebra.top_degree)
    ranks = delta_ranks(c)
    dims = c.algebra.poincare()
    out = GradedDims()
    for d in range(top + 1):
        out[d] = dims.get(d, 0) - ranks.get(d, 0) - ranks.get(d - 1, 0)
    return out.clean()


def image_dims_bruteforce(c: KoszulComplex) -> GradedDims:
    ranks = delta_ranks(c)
    return GradedDims({d + 1: r for d, r in ranks.items() if r})


# -- closed forms -----------------------------------------------------------------


def _shape(c: KoszulComplex) -> tuple[list[int], list[int]]:
    """Degrees and truncations of y_1..y_r when z is exactly the base generators."""
    base = c.base
    if len(c.z) != len(base.names):
        raise ShapeError("complex is not of the K(A; y_1..y_r) shape")
    for i, name in enumerate(base.names):
        if c.z[i] != base.generator(name):
            raise ShapeError("z must be the generators y_1..y_r in order")
    return list(base.gen_degrees), [g.truncation for g in base.generators]


def closed_form_cohomology(c: KoszulComplex) -> GradedAlgebra:
    """Delta(g_1..g_r) with ``deg g_i = k_i deg y_i - 1``."""
    degrees, truncs = _shape(c)
    gens = [odd(f"g{c.labels[i]}", k * d - 1) for i, (d, k) in enumerate(zip(degrees, truncs))]
    return GradedAlgebra(c.characteristic, gens)


def _subset_theta(c: KoszulComplex, I) -> Polynomial:
    out = c.algebra.one()
    for i in sorted(I):
        out = out * c.theta(i)
    return out


def g_element(c: KoszulComplex, I) -> Polynomial:
    _, truncs = _shape(c)
    out = _subset_theta(c, I)
    for i in I:
        out = out * c.y(i) ** (truncs[i] - 1)
    return out


def C_element(c: KoszulComplex, I) -> Polynomial:
    """``C_I = sum_s (-1)^(s-1) y_{i_s} theta_{I_s}``; ``C_{t} = y_t``, ``C_{} = 0``."""
    I = sorted(I)
    out = c.algebra.zero()
    for s, i in enumerate(I):
        rest = I[:s] + I[s + 1:]
        term = c.y(i) * _subset_theta(c, rest)
        out = out + (term if s % 2 == 0 else -term)
    return out


def R_element(c: KoszulComplex, I) -> Polynomial:
    _, truncs = _shape(c)
    out = C_element(c, I)
    for i in I:
        out = c.y(i) ** (truncs[i] - 1) * out
    return out


def D_element(c: KoszulComplex, I) -> Polynomial:
    I = sorted(I)
    out = c.algebra.zero()
    for s, i in enumerate(I):
        term = c.y(i) * C_element(c, I[:s] + I[s + 1:])
        out = out + (term if s % 2 == 0 else -term)
    return out


def square(c: KoszulComplex, i: int) -> Polynomial:
    return c.algebra.square_of(c.theta_names[i])


def b_element(c: KoszulComplex, M) -> Polynomial:
    out = c.algebra.one()
    for i in M:
        out = out * square(c, i)
    return out


def _theta_product_sign(c: KoszulComplex, A, B) -> int:
    """Sign with theta_A theta_B = sign * b_{A&B} * theta_{A^B} (A, B sorted sets)."""
    if c.characteristic == 2:
        return 1
    current = sorted(A)
    sign = 1
    for j in sorted(B):
        if sum(1 for i in current if i > j) % 2:
            sign = -sign
        if j in current:
            current.remove(j)
        else:
            current.append(j)
            current.sort()
    return sign


def s_expansion_terms(c: KoszulComplex, H, L):
    """Terms ``(sign, h_s, H_s & L, <H_s, L>)`` of the expansion of C_H C_L.

    Derived from ``C_H C_L = (-1)^(|H|+1) delta(C_H theta_L)``; in
    characteristic 2 every sign is +1 and this is the unsigned expansion.
    """
    H, L = sorted(H), sorted(L)
    outer = -1 if (len(H) + 1) % 2 else 1
    for s, h in enumerate(H):
        Hs = H[:s] + H[s + 1:]
        inter = sorted(set(Hs) & set(L))
        sym = sorted(set(Hs) ^ set(L))
        sign = (1 if s % 2 == 0 else -1) * outer * _theta_product_sign(c, Hs, L)
        yield sign, h, inter, sym


def s_expansion(c: KoszulComplex, H, L) -> Polynomial:
    out = c.algebra.zero()
    for sign, h, inter, sym in s_expansion_terms(c, H, L):
        term = c.y(h) * b_element(c, inter) * C_element(c, sym)
        out = out + term.scale(sign)
    return out


def unsigned_s_expansion(c: KoszulComplex, H, L) -> Polynomial:
    """``sum_s (-1)^(s-1) y_{h_s} b_{H_s & L} C_{<H_s, L>}`` with no reordering signs."""
    H = sorted(H)
    out = c.algebra.zero()
    for s, h in enumerate(H):
        Hs = H[:s] + H[s + 1:]
        term = c.y(h) * b_element(c, set(Hs) & set(L)) * C_element(c, set(Hs) ^ set(L))
        out = out + (term if s % 2 == 0 else -term)
    return out


def S_element(c: KoszulComplex, H, L) -> Polynomial:
    return C_element(c, H) * C_element(c, L) - s_expansion(c, H, L)


def subsets(r: int, min_size: int):
    for size in range(min_size, r + 1):
        yield from itertools.combinations(range(r), size)


# -- presentation of Im(delta) ---------------------------------------------------


def c_symbol(c: KoszulComplex, I) -> str:
    return "C" + "_".join(c.labels[i] for i in sorted(I))


def _c_degree(c: KoszulComplex, I) -> int:
    return sum(c.algebra.gen_degrees[c._theta_index[i]] for i in I) + 1


def presentation_ring(c: KoszulComplex) -> FreeRing:
    gens = [(n, d) for n, d in zip(c.base.names, c.base.gen_degrees)]
    gens += [(c_symbol(c, I), _c_degree(c, I)) for I in subsets(c.r, 2)]
    return FreeRing(c.characteristic, gens)


def _to_ring(c: KoszulComplex, ring: FreeRing, a: Polynomial) -> Polynomial:
    """Rewrite an element of the base algebra in the presentation ring."""
    out = ring.zero()
    for mono, coeff in a.terms.items():
        exps = {n: e for n, e in zip(c.base.names, mono) if e}
        out = out + ring.monomial(exps, coeff)
    return out


def _C_in_ring(c: KoszulComplex, ring: FreeRing, I) -> Polynomial:
    I = sorted(I)
    if not I:
        return ring.zero()
    if len(I) == 1:
        return _to_ring(c, ring, c.z[I[0]])
    return ring.generator(c_symbol(c, I))


def _y_in_ring(c, ring, i) -> Polynomial:
    return _to_ring(c, ring, c.z[i])


def presentation_relations(c: KoszulComplex) -> dict[str, list[Polynomial]]:
    """Relation families y^k, R_J, D_K, S_{H,L} as polynomials in the presentation ring."""
    degrees, truncs = _shape(c)
    ring = presentation_ring(c)
    fam: dict[str, list[Polynomial]] = {"power": [], "R": [], "D": [], "S": []}
    for i in range(c.r):
        fam["power"].append(_y_in_ring(c, ring, i) ** truncs[i])
    for J in subsets(c.r, 2):
        rel = _C_in_ring(c, ring, J)
        for i in J:
            rel = _y_in_ring(c, ring, i) ** (truncs[i] - 1) * rel
        fam["R"].append(rel)
    for K in subsets(c.r, 3):
        rel = ring.zero()
        for s, k in enumerate(K):
            term = _y_in_ring(c, ring, k) * _C_in_ring(c, ring, K[:s] + K[s + 1:])
            rel = rel + (term if s % 2 == 0 else -term)
        fam["D"].append(rel)
    pairs = list(subsets(c.r, 2))
    for a, H in enumerate(pairs):
        for L in pairs[a:]:
            rel = _C_in_ring(c, ring, H) * _C_in_ring(c, ring, L)
            for sign, h, inter, sym in s_expansion_terms(c, H, L):
                term = (
                    _y_in_ring(c, ring, h)
                    * _to_ring(c, ring, _base_b(c, inter))
                    * _C_in_ring(c, ring, sym)
                )
                rel = rel - term.scale(sign)
            fam["S"].append(_drop_truncated(rel, truncs))
    return fam


def _drop_truncated(rel: Polynomial, truncs: list[int]) -> Polynomial:
    """Remove terms already in the ideal of the powers y_i^{k_i}."""
    keep = {
        m: v for m, v in rel.terms.items()
        if all(m[i] < k for i, k in enumerate(truncs))
    }
    return Polynomial._raw(rel.ring, keep)


def _base_b(c: KoszulComplex, M) -> Polynomial:
    out = c.base.one()
    for i in M:
        sq = square(c, i)
        # squares lie in the base generators; drop the theta padding
        out = out * Polynomial(c.base, {m[: len(c.base.names)]: v for m, v in sq.terms.items()})
    return out


def image_dims_from_presentation(c: KoszulComplex) -> GradedDims:
    """Graded dims of ``A^+ (+) A{C_I : |I|>=2} / A{R_J, D_K}``.

    Linear algebra over the free A-module on the symbols C_I with the
    relation multiples as rows; ``delta`` is never evaluated here.
    """
    degrees, truncs = _shape(c)
    base = c.base
    p = c.characteristic
    out = GradedDims()
    for d, n in base.poincare().items():
        if d > 0:
            out[d] += n
    pairs = list(subsets(c.r, 2))
    if not pairs:
        return out.clean()
    sym_deg = {I: _c_degree(c, I) for I in pairs}
    top = base.top_degree
    base_basis = [m for d in range(top + 1) for m in base.basis_in_degree(d)]
    # free-module basis grouped by degree
    free: dict[int, dict] = {}
    for I in pairs:
        for m in base_basis:
            deg = sym_deg[I] + base.monomial_degree(m)
            free.setdefault(deg, {})[(I, m)] = None
    index = {deg: {key: i for i, key in enumerate(keys)} for deg, keys in free.items()}
    rels: dict[int, list[dict]] = {}

    def add_relation(vec: dict, deg: int):
        if vec:
            rels.setdefault(deg, []).append(vec)

    def times(mono_a, terms):
        # terms: {(I, m): coeff}; multiply every coefficient monomial by mono_a
        res = {}
        for (I, m), v in terms.items():
            prod = tuple(x + y for x, y in zip(m, mono_a))
            if base.admissible(prod):
                res[(I, prod)] = (res.get((I, prod), 0) + v) % p
        return {k: v for k, v in res.items() if v}

    generators = []
    for J in pairs:
        mono = [0] * len(base.names)
        for i in J:
            mono[i] = truncs[i] - 1
        mono = tuple(mono)
        if base.admissible(mono):
            generators.append(({(J, mono): 1}, sym_deg[J] + base.monomial_degree(mono)))
    for K in subsets(c.r, 3):
        terms = {}
        for s, k in enumerate(K):
            mono = [0] * len(base.names)
            mono[k] = 1
            mono = tuple(mono)
            if base.admissible(mono):
                terms[(K[:s] + K[s + 1:], mono)] = 1 if s % 2 == 0 else p - 1
        generators.append((terms, sym_deg[K[1:]] + degrees[K[0]]))
    for terms, deg in generators:
        for m in base_basis:
            add_relation(times(m, terms), deg + base.monomial_degree(m))
    for deg, keys in free.items():
        rows = []
        idx = index[deg]
        for vec in rels.get(deg, []):
            row = [0] * len(keys)
            for key, v in vec.items():
                row[idx[key]] = v
            rows.append(row)
        rnk = fplinalg.rank(MatrixFp.from_rows(p, rows, len(keys))) if rows else 0
        out[deg] += len(keys) - rnk
    return out.clean()


def image_presentation(c: KoszulComplex) -> RingPresentation:
    _shape(c)
    ring = presentation_ring(c)
    fam = presentation_relations(c)
    rels = [render(r) for key in ("power", "R", "D", "S") for r in fam[key] if r]
    gens = [(n, d, c.characteristic) for n, d in zip(ring.names, ring.gen_degrees)]
    return RingPresentation(
        coefficient=c.characteristic,
        generators=gens,
        relations=rels,
        graded_dims=image_dims_from_presentation(c),
        augmented=True,
    )


def substitute(poly: Polynomial, images: dict[str, Polynomial], target) -> Polynomial:
    """Evaluate a presentation-ring polynomial; factors multiply in declaration order."""
    out = target.zero()
    for mono, coeff in poly.terms.items():
        term = target.constant(coeff)
        for name, e in zip(poly.ring.names, mono):
            for _ in range(e):
                term = term * images[name]
        out = out + term
    return out


def ring_images(c: KoszulComplex) -> dict[str, Polynomial]:
    """Images of the presentation symbols in C: y_i -> z_i, C_I -> delta(theta_I)."""
    images = {n: c.lift(c.base.generator(n)) for n in c.base.names}
    for I in subsets(c.r, 2):
        images[c_symbol(c, I)] = C_element(c, I)
    return images
