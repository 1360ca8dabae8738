"""Weyl group enumeration and the Schubert-cell Poincare polynomial of G/T.

Simple reflections act on weights written in the fundamental-weight basis:
``s_i(v) = v - v_i * a_i`` with ``a_i`` the i-th column of the Cartan
matrix.  Breadth-first search from a regular dominant weight visits every
element once, at depth equal to its length.
"""
from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass

from . import liedata
from .liedata import LieGroupData

DEFAULT_CAP = 10**6
LARGE_SYSTEMS = ("E6", "E7")  # enumerated only on request


class CapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class RootSystemData:
    name: str
    cartan: tuple[tuple[int, ...], ...]
    group: str

    @property
    def rank(self) -> int:
        return len(self.cartan)

    def __post_init__(self):
        n = len(self.cartan)
        for i, row in enumerate(self.cartan):
            if len(row) != n or row[i] != 2:
                raise ValueError(f"{self.name}: bad Cartan diagonal")
            for j, a in enumerate(row):
                if i != j and (a > 0 or (a == 0) != (self.cartan[j][i] == 0)):
                    raise ValueError(f"{self.name}: bad off-diagonal entry ({i},{j})")


def _chain(n: int) -> list[list[int]]:
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
        if i + 1 < n:
            a[i][i + 1] = a[i + 1][i] = -1
    return a


def cartan_matrix(kind: str, n: int) -> tuple[tuple[int, ...], ...]:
    if kind == "A":
        a = _chain(n)
    elif kind == "B":
        a = _chain(n)
        a[n - 1][n - 2] = -2
    elif kind == "C":
        a = _chain(n)
        a[n - 2][n - 1] = -2
    elif kind == "D":
        a = _chain(n)
        a[n - 2][n - 1] = a[n - 1][n - 2] = 0
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1
    elif kind == "G":
        a = [[2, -1], [-3, 2]]
    elif kind == "F":
        a = _chain(4)
        a[1][2] = -2
    elif kind == "E":
        # Bourbaki labels: 1-3-4-5-6(-7-8) with 2 attached to 4
        a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(k, k + 1) for k in range(4, n - 1)]
        for i, j in edges:
            a[i][j] = a[j][i] = -1
    else:
        raise ValueError(f"unknown type {kind}")
    return tuple(tuple(r) for r in a)


_SYSTEM = re.compile(r"^([A-G])(\d+)$")
_RANK_BOUNDS = {"A": (1, 8), "B": (2, 8), "C": (2, 8), "D": (4, 8)}


def root_system(name: str) -> RootSystemData:
    """Catalog lookup: A1..A8, B2..B8, C2..C8, D4..D8, G2, F4, E6, E7, E8."""
    m = _SYSTEM.match(name.strip())
    if not m:
        raise ValueError(f"unknown root system {name!r}")
    kind, n = m.group(1), int(m.group(2))
    if kind in _RANK_BOUNDS:
        lo, hi = _RANK_BOUNDS[kind]
        if not lo <= n <= hi:
            raise ValueError(f"{kind}{n} outside the catalog ({kind}{lo}..{kind}{hi})")
        group = {
            "A": f"SU({n + 1})",
            "B": "Sp(2)" if n == 2 else f"Spin({2 * n + 1})",
            "C": f"Sp({n})",
            "D": f"Spin({2 * n})",
        }[kind]
    elif (kind, n) in (("G", 2), ("F", 4), ("E", 6), ("E", 7), ("E", 8)):
        group = name
    else:
        raise ValueError(f"unknown root system {name!r}")
    return RootSystemData(name, cartan_matrix(kind, n), group)


@dataclass
class LengthHistogram:
    counts: list[int]

    @property
    def order(self) -> int:
        return sum(self.counts)

    @property
    def max_length(self) -> int:
        return len(self.counts) - 1

    def is_palindromic(self) -> bool:
        return self.counts == self.counts[::-1]


def _start_vector(n: int, attempt: int) -> tuple[int, ...]:
    base = attempt + 2
    return tuple(base**i for i in range(n))


def _bfs(cartan, start, cap: int) -> list[int]:
    n = len(cartan)
    cols = [tuple(cartan[r][i] for r in range(n)) for i in range(n)]
    seen = {start}
    frontier = [start]
    counts = []
    while frontier:
        counts.append(len(frontier))
        nxt = []
        for v in frontier:
            for i in range(n):
                c = v[i]
                if c == 0:
                    continue
                col = cols[i]
                w = tuple(v[k] - c * col[k] for k in range(n))
                if w not in seen:
                    seen.add(w)
                    if len(seen) > cap:
                        raise CapExceeded(f"orbit exceeds cap {cap}")
                    nxt.append(w)
        frontier = nxt
    return counts


def weyl_order(r: RootSystemData) -> int:
    return math.prod(liedata.group_data(r.group).degrees_q)


def enumerate_weyl(r: RootSystemData, cap: int = DEFAULT_CAP, allow_large: bool = False) -> LengthHistogram:
    if r.name in LARGE_SYSTEMS and not allow_large:
        raise CapExceeded(f"{r.name} enumeration is opt-in (allow_large)")
    expected = weyl_order(r)
    if expected > cap:
        raise CapExceeded(f"|W({r.name})| = {expected} exceeds cap {cap}")
    for attempt in range(3):
        counts = _bfs(r.cartan, _start_vector(r.rank, attempt), cap)
        if sum(counts) == expected:
            return LengthHistogram(counts)
    raise RuntimeError(f"{r.name}: orbit size {sum(counts)} never reached |W| = {expected}")


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Division by a polynomial with leading coefficient +-1 (exact over Z)."""
    num = list(num)
    lead = den[-1]
    q = [0] * max(len(num) - len(den) + 1, 1)
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1] // lead
        q[k] = c
        for j, d in enumerate(den):
            num[k + j] -= c * d
    return q, num[: len(den) - 1]


def flag_poincare(g: LieGroupData | str) -> list[int]:
    """Coefficients (in t, stride 2) of prod_i (1 - t^{2 l_i}) / (1 - t^2)."""
    if isinstance(g, str):
        g = liedata.group_data(g)
    out = [1]
    for l in g.degrees_q:
        num = [1] + [0] * (2 * l - 1) + [-1]
        q, rem = _poly_divmod(num, [1, 0, -1])
        if any(rem):
            raise ArithmeticError(f"{g.name}: (1-t^{2 * l})/(1-t^2) is not exact")
        out = _poly_mul(out, q)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def compare(r: RootSystemData, hist: LengthHistogram) -> bool:
    coeffs = flag_poincare(r.group)
    return coeffs[::2] == hist.counts and not any(coeffs[1::2])
