"""Finite-dimensional graded-commutative algebras over Z or F_p.

An algebra is given by an ordered list of generators.  Even generators are
truncated polynomial variables (``x^k = 0``); odd generators square-free
symbols whose square is a prescribed polynomial in the even generators
(zero unless the characteristic is 2).

Monomials are exponent tuples aligned with the generator list.  Polynomials
are sparse ``{monomial: coefficient}`` maps with no zero coefficients.  The
odd part of a monomial is always read in declaration order, which fixes the
sign convention of every product.
"""
from __future__ import annotations

import itertools
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping


class AlgebraError(ValueError):
    pass


@dataclass(frozen=True)
class GeneratorSpec:
    """One generator.  ``truncation`` is None for odd generators."""

    name: str
    degree: int
    truncation: int | None = None
    square: str | None = None

    @property
    def is_odd(self) -> bool:
        return self.truncation is None


def even(name: str, degree: int, truncation: int) -> GeneratorSpec:
    return GeneratorSpec(name, degree, truncation=truncation)


def odd(name: str, degree: int, square: str | None = None) -> GeneratorSpec:
    return GeneratorSpec(name, degree, truncation=None, square=square)


class GradedDims(Counter):
    """Finitely supported map degree -> dimension."""

    @property
    def total(self) -> int:
        return sum(self.values())

    def clean(self) -> "GradedDims":
        return GradedDims({d: c for d, c in self.items() if c})

    def as_dict(self) -> dict[int, int]:
        return {d: self[d] for d in sorted(self) if self[d]}

    def __mul__(self, other: "GradedDims") -> "GradedDims":
        out = GradedDims()
        for a, ca in self.items():
            for b, cb in other.items():
                out[a + b] += ca * cb
        return out.clean()

    def evaluate(self, t: int) -> int:
        return sum(c * t**d for d, c in self.items())


class Polynomial:
    """Sparse element of a ring (a ``GradedAlgebra`` or a ``FreeRing``)."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms: Mapping[tuple, int] | None = None):
        self.ring = ring
        self.terms: dict[tuple, int] = {}
        if terms:
            for mono, c in terms.items():
                c = ring.reduce(c)
                if c:
                    self.terms[mono] = c

    @classmethod
    def _raw(cls, ring, terms: dict) -> "Polynomial":
        p = cls.__new__(cls)
        p.ring = ring
        p.terms = terms
        return p

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring is other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other) -> "Polynomial":
        if isinstance(other, int):
            other = self.ring.constant(other)
        out = dict(self.terms)
        red = self.ring.reduce
        for m, c in other.terms.items():
            v = red(out.get(m, 0) + c)
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return self.scale(-1)

    def __sub__(self, other) -> "Polynomial":
        if isinstance(other, int):
            other = self.ring.constant(other)
        return self + other.scale(-1)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, int):
            return self.scale(other)
        return self.ring.multiply(self, other)

    def __rmul__(self, other) -> "Polynomial":
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> "Polynomial":
        out = self.ring.one()
        for _ in range(n):
            out = out * self
        return out

    def scale(self, c: int) -> "Polynomial":
        red = self.ring.reduce
        out = {}
        for m, v in self.terms.items():
            v = red(v * c)
            if v:
                out[m] = v
        return Polynomial._raw(self.ring, out)

    def degrees(self) -> set[int]:
        return {self.ring.monomial_degree(m) for m in self.terms}

    @property
    def degree(self) -> int:
        degs = self.degrees()
        if len(degs) != 1:
            raise AlgebraError(f"not homogeneous (degrees {sorted(degs)})")
        return degs.pop()

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def __repr__(self) -> str:
        return render(self)


# -- rendering -------------------------------------------------------------

def _render_monomial(names, mono) -> str:
    parts = []
    for name, e in zip(names, mono):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def render(poly: Polynomial) -> str:
    """Canonical text form, e.g. ``x6^2*x18 + x10^3``.

    Terms are listed in descending lex order (generators of an algebra ranked
    by (degree, declaration index), of a free ring as declared); coefficients
    are least nonnegative residues in characteristic p.
    """
    ring = poly.ring
    if not poly.terms:
        return "0"
    out = []
    for mono in sorted(poly.terms, key=ring.sort_key, reverse=True):
        c = poly.terms[mono]
        body = _render_monomial(ring.names, mono)
        if not body:
            out.append(str(abs(c)) if ring.characteristic == 0 else str(c))
        elif c == 1 or (c == -1 and ring.characteristic == 0):
            out.append(body)
        else:
            out.append(f"{abs(c) if ring.characteristic == 0 else c}*{body}")
        if ring.characteristic == 0 and c < 0:
            out[-1] = "-" + out[-1]
    text = out[0]
    for term in out[1:]:
        text += " - " + term[1:] if term.startswith("-") else " + " + term
    return text


_TOKEN = re.compile(r"\s*([+-])?\s*([^+-]+)")


def parse(text: str, ring) -> Polynomial:
    """Inverse of :func:`render` (also accepts any sum of signed products)."""
    text = text.strip()
    if text == "0":
        return ring.zero()
    index = {n: i for i, n in enumerate(ring.names)}
    result = ring.zero()
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise AlgebraError(f"cannot parse {text!r} at {pos}")
        pos = m.end()
        sign = -1 if m.group(1) == "-" else 1
        term = ring.constant(sign)
        for factor in m.group(2).strip().split("*"):
            factor = factor.strip()
            if factor.isdigit():
                term = term.scale(int(factor))
                continue
            name, _, exp = factor.partition("^")
            if name not in index:
                raise AlgebraError(f"unknown generator {name!r}")
            term = term * ring.generator(name) ** (int(exp) if exp else 1)
        result = result + term
    return result


# -- rings -----------------------------------------------------------------

class _RingBase:
    characteristic: int
    names: tuple[str, ...]
    gen_degrees: tuple[int, ...]

    def reduce(self, c: int) -> int:
        return c % self.characteristic if self.characteristic else c

    def zero(self) -> Polynomial:
        return Polynomial._raw(self, {})

    def constant(self, c: int) -> Polynomial:
        return Polynomial(self, {(0,) * len(self.names): c})

    def one(self) -> Polynomial:
        return self.constant(1)

    def monomial(self, exps: Mapping[str, int] | tuple, coeff: int = 1) -> Polynomial:
        if isinstance(exps, Mapping):
            mono = [0] * len(self.names)
            for name, e in exps.items():
                mono[self.names.index(name)] += e
            exps = tuple(mono)
        p = self.one()
        for i, e in enumerate(exps):
            for _ in range(e):
                p = p * self._gen(i)
        return p.scale(coeff)

    def generator(self, name: str) -> Polynomial:
        return self._gen(self.names.index(name))

    def _gen(self, i: int) -> Polynomial:
        mono = [0] * len(self.names)
        mono[i] = 1
        return Polynomial(self, {tuple(mono): 1})

    def monomial_degree(self, mono: tuple) -> int:
        return sum(e * d for e, d in zip(mono, self.gen_degrees))

    def sort_key(self, mono: tuple):
        return tuple(mono[i] for i in self._order)

    def parse(self, text: str) -> Polynomial:
        return parse(text, self)


class FreeRing(_RingBase):
    """Commutative polynomial ring on named graded symbols (no truncation).

    Used as the ambient ring of displayed presentations, where relations are
    ordinary polynomials in the generating symbols.
    """

    def __init__(self, characteristic: int, generators: Iterable[tuple[str, int]]):
        gens = list(generators)
        self.characteristic = characteristic
        self.names = tuple(n for n, _ in gens)
        self.gen_degrees = tuple(d for _, d in gens)
        self._order = list(range(len(gens)))  # rank generators as declared

    def multiply(self, a: Polynomial, b: Polynomial) -> Polynomial:
        out: dict[tuple, int] = {}
        red = self.reduce
        for ma, ca in a.terms.items():
            for mb, cb in b.terms.items():
                m = tuple(x + y for x, y in zip(ma, mb))
                v = red(out.get(m, 0) + ca * cb)
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return Polynomial._raw(self, out)


class GradedAlgebra(_RingBase):
    """Truncated polynomial algebra tensored with a simple system of odd generators."""

    def __init__(self, characteristic: int, generators: Iterable[GeneratorSpec]):
        self.characteristic = characteristic
        self.generators = tuple(generators)
        self.names = tuple(g.name for g in self.generators)
        if len(set(self.names)) != len(self.names):
            raise AlgebraError("duplicate generator names")
        self.gen_degrees = tuple(g.degree for g in self.generators)
        self.odd_index = tuple(i for i, g in enumerate(self.generators) if g.is_odd)
        self.even_index = tuple(i for i, g in enumerate(self.generators) if not g.is_odd)
        for g in self.generators:
            if g.degree <= 0:
                raise AlgebraError(f"{g.name}: degree must be positive")
            if g.is_odd != (g.degree % 2 == 1):
                raise AlgebraError(f"{g.name}: parity of degree does not match kind")
            if not g.is_odd and g.truncation < 1:
                raise AlgebraError(f"{g.name}: truncation must be >= 1")
        # basis order: generators sorted by (degree, declaration index)
        self._order = sorted(range(len(self.names)), key=lambda i: (self.gen_degrees[i], i))
        self.top_degree = sum(
            g.degree if g.is_odd else (g.truncation - 1) * g.degree for g in self.generators
        )
        self._squares: dict[int, Polynomial] = {}
        for i in self.odd_index:
            sq = self.generators[i].square
            if sq is None or sq == "0":
                continue
            poly = parse(sq, self)
            if not poly:
                continue
            if characteristic != 2:
                raise AlgebraError(
                    f"{self.names[i]}: nonzero square requires characteristic 2"
                )
            for m in poly.terms:
                if any(m[j] for j in self.odd_index):
                    raise AlgebraError(f"{self.names[i]}: square must lie in even generators")
            if poly.degree != 2 * self.gen_degrees[i]:
                raise AlgebraError(f"{self.names[i]}: square has wrong degree")
            self._squares[i] = poly
        self._basis_cache: dict[int, list[tuple]] | None = None

    # -- structure ---------------------------------------------------------

    def square_of(self, name: str) -> Polynomial:
        i = self.names.index(name)
        if i not in self.odd_index:
            raise AlgebraError(f"{name} is not odd")
        return self._squares.get(i, self.zero())

    def admissible(self, mono: tuple) -> bool:
        for g, e in zip(self.generators, mono):
            if e < 0 or e > (1 if g.is_odd else g.truncation - 1):
                return False
        return True

    @property
    def dimension(self) -> int:
        out = 2 ** len(self.odd_index)
        for i in self.even_index:
            out *= self.generators[i].truncation
        return out

    def _all_basis(self) -> dict[int, list[tuple]]:
        if self._basis_cache is None:
            ranges = [
                range(2) if g.is_odd else range(g.truncation) for g in self.generators
            ]
            table: dict[int, list[tuple]] = {}
            for mono in itertools.product(*ranges):
                table.setdefault(self.monomial_degree(mono), []).append(mono)
            for d in table:
                table[d].sort(key=self.sort_key)
            self._basis_cache = table
        return self._basis_cache

    def basis_in_degree(self, d: int) -> list[tuple]:
        if d < 0:
            raise AlgebraError("degree must be nonnegative")
        return list(self._all_basis().get(d, []))

    def poincare(self) -> GradedDims:
        return GradedDims({d: len(b) for d, b in self._all_basis().items()})

    # -- multiplication ----------------------------------------------------

    def multiply_monomials(self, a: tuple, b: tuple) -> dict[tuple, int]:
        """Product of two admissible monomials as a {monomial: coeff} map."""
        even = list(a)
        for i in self.even_index:
            e = a[i] + b[i]
            if e >= self.generators[i].truncation:
                return {}
            even[i] = e
        for i in self.odd_index:
            even[i] = 0
        # odd part: multiply theta_A by the odd generators of b one at a time
        current = [i for i in self.odd_index if a[i]]
        sign = 1
        factor: dict[tuple, int] = {tuple(even): 1}
        char2 = self.characteristic == 2
        for j in self.odd_index:
            if not b[j]:
                continue
            if not char2:
                above = sum(1 for i in current if i > j)
                if above % 2:
                    sign = -sign
            if j in current:
                sq = self._squares.get(j)
                if sq is None:
                    return {}
                current.remove(j)
                factor = self._mul_even(factor, sq.terms)
                if not factor:
                    return {}
            else:
                current.append(j)
                current.sort()
        out = {}
        red = self.reduce
        for m, c in factor.items():
            m = list(m)
            for i in current:
                m[i] = 1
            v = red(c * sign)
            if v:
                out[tuple(m)] = v
        return out

    def _mul_even(self, f: dict, g: dict) -> dict:
        out: dict[tuple, int] = {}
        red = self.reduce
        for ma, ca in f.items():
            for mb, cb in g.items():
                m = []
                ok = True
                for i, (x, y) in enumerate(zip(ma, mb)):
                    e = x + y
                    if i in self.even_index and e >= self.generators[i].truncation:
                        ok = False
                        break
                    m.append(e)
                if not ok:
                    continue
                m = tuple(m)
                v = red(out.get(m, 0) + ca * cb)
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return out

    def multiply(self, a: Polynomial, b: Polynomial) -> Polynomial:
        out: dict[tuple, int] = {}
        red = self.reduce
        for ma, ca in a.terms.items():
            for mb, cb in b.terms.items():
                for m, c in self.multiply_monomials(ma, mb).items():
                    v = red(out.get(m, 0) + ca * cb * c)
                    if v:
                        out[m] = v
                    else:
                        out.pop(m, None)
        return Polynomial._raw(self, out)

    def normalize(self, terms: Mapping[tuple, int]) -> Polynomial:
        """Canonical form of an arbitrary exponent map (odd exponents <= 1 assumed)."""
        out = self.zero()
        for mono, c in terms.items():
            out = out + self.monomial(mono, c)
        return out

    def element(self, vector, basis: list[tuple]) -> Polynomial:
        return Polynomial(self, {m: int(c) for m, c in zip(basis, vector) if c})

    def coordinates(self, poly: Polynomial, basis: list[tuple]) -> list[int]:
        index = {m: i for i, m in enumerate(basis)}
        vec = [0] * len(basis)
        for m, c in poly.terms.items():
            if m not in index:
                raise AlgebraError("element not in the span of the given basis")
            vec[index[m]] = c
        return vec


def tensor(*algebras: GradedAlgebra) -> GradedAlgebra:
    """Tensor product (generator lists concatenated; names must be disjoint)."""
    chars = {a.characteristic for a in algebras}
    if len(chars) != 1:
        raise AlgebraError("characteristics differ")
    gens = [g for a in algebras for g in a.generators]
    return GradedAlgebra(chars.pop(), gens)


def exterior_dims(degrees: Iterable[int]) -> GradedDims:
    """Poincare series of a simple system of generators in the given degrees."""
    out = GradedDims({0: 1})
    for d in degrees:
        out = out * GradedDims({0: 1, d: 1})
    return out
