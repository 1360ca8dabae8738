"""Numerical invariants of the compact simply-connected simple Lie groups.

For each group: rank, dimension, the degrees ``q(G)`` of the basic Weyl
invariants, and the special Schubert classes (degree, torsion index, cup
length).  The exceptional rows are a literal table; the classical families
are generated from closed forms.
"""
from __future__ import annotations

import hashlib
import json
import math
import re
from collections import Counter
from dataclasses import dataclass

EXCEPTIONAL = ("G2", "F4", "E6", "E7", "E8")

# name: (rank, dim, q(G), [(degree, torsion index, cup length), ...])
EXCEPTIONAL_TABLE = {
    "G2": (2, 14, (2, 6), ((6, 2, 2),)),
    "F4": (4, 52, (2, 6, 8, 12), ((6, 2, 2), (8, 3, 3))),
    "E6": (6, 78, (2, 5, 6, 8, 9, 12), ((6, 2, 2), (8, 3, 3))),
    "E7": (7, 133, (2, 6, 8, 10, 12, 14, 18),
           ((6, 2, 2), (8, 3, 3), (10, 2, 2), (18, 2, 2))),
    "E8": (8, 248, (2, 8, 12, 14, 18, 20, 24, 30),
           ((6, 2, 8), (8, 3, 3), (10, 2, 4), (12, 5, 5), (18, 2, 2), (20, 3, 3), (30, 2, 2))),
}

# sha256 of the canonical JSON dump of EXCEPTIONAL_TABLE; guards against edits
TABLE_CHECKSUM = "1aa43dbd69b1903eed749907a40d4e028e5c944c28057db1902edb075c0ddf41"

FAMILY_BOUNDS = {"SU": (2, 64), "Sp": (1, 64), "Spin": (7, 128)}

# Spin cup lengths read "2^([ln(...)]+1)"; the logarithm is taken base 2
SPIN_CUP_LENGTH_FLAG = "spin-cup-length-log2"


class UnknownGroup(ValueError):
    pass


class CorruptTable(RuntimeError):
    pass


@dataclass(frozen=True)
class SpecialClass:
    degree: int
    torsion_index: int
    cup_length: int

    def __post_init__(self):
        if self.torsion_index not in (2, 3, 5):
            raise CorruptTable(f"torsion index {self.torsion_index} not in {{2,3,5}}")
        if self.cup_length < 2:
            raise CorruptTable(f"cup length {self.cup_length} < 2")
        if self.degree % 2:
            raise CorruptTable(f"special class degree {self.degree} is odd")


@dataclass(frozen=True)
class LieGroupData:
    name: str
    rank: int
    dim: int
    degrees_q: tuple[int, ...]
    special_classes: tuple[SpecialClass, ...] = ()
    flags: tuple[str, ...] = ()

    def __post_init__(self):
        if len(self.degrees_q) != self.rank:
            raise CorruptTable(f"{self.name}: |q(G)| != rank")
        if list(self.degrees_q) != sorted(self.degrees_q):
            raise CorruptTable(f"{self.name}: q(G) not sorted")
        # Spin(4k) has the invariant degree 2k twice; every other group is strict
        if not self.name.startswith("Spin") and len(set(self.degrees_q)) != self.rank:
            raise CorruptTable(f"{self.name}: q(G) has repeated degrees")
        if sum(2 * l - 1 for l in self.degrees_q) != self.dim:
            raise CorruptTable(f"{self.name}: sum(2l-1) != dim")
        degs = [s.degree for s in self.special_classes]
        if any(a >= b for a, b in zip(degs, degs[1:])):
            raise CorruptTable(f"{self.name}: special degrees not strictly increasing")

    @property
    def is_exceptional(self) -> bool:
        return self.name in EXCEPTIONAL

    @property
    def family(self) -> str:
        return self.name.split("(")[0]

    def special(self, degree: int) -> SpecialClass:
        for s in self.special_classes:
            if s.degree == degree:
                return s
        raise KeyError(degree)

    def cup_length(self, degree: int) -> int:
        return self.special(degree).cup_length


@dataclass(frozen=True)
class DegreePartition:
    d1: tuple[int, ...]
    d2: tuple[int, ...]

    @property
    def full(self) -> tuple[int, ...]:
        return tuple(sorted(self.d1 + self.d2))


def table_checksum() -> str:
    blob = json.dumps(EXCEPTIONAL_TABLE, sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()


_PARAM = re.compile(r"^(SU|Sp|Spin)\((\d+)\)$")


def _spin_special(n: int) -> tuple[SpecialClass, ...]:
    # Spin(2m+1): k=[(m-1)/2], cl_i = 2^(floor(log2(m/(2i+1)))+1)
    # Spin(2m):   k=[(m-2)/2], cl_i = 2^(floor(log2((m-1)/(2i+1)))+1)
    m = n // 2
    if n % 2:
        k, top = (m - 1) // 2, m
    else:
        k, top = (m - 2) // 2, m - 1
    out = []
    for i in range(1, k + 1):
        ratio = top / (2 * i + 1)
        out.append(SpecialClass(4 * i + 2, 2, 2 ** (math.floor(math.log2(ratio)) + 1)))
    return tuple(out)


def group_data(name: str) -> LieGroupData:
    """Look up a group by identifier: ``G2``..``E8``, ``SU(n)``, ``Sp(n)``, ``Spin(n)``."""
    name = name.strip().replace(" ", "")
    if name in EXCEPTIONAL_TABLE:
        rank, dim, q, special = EXCEPTIONAL_TABLE[name]
        return LieGroupData(name, rank, dim, q, tuple(SpecialClass(*s) for s in special))
    m = _PARAM.match(name)
    if not m:
        raise UnknownGroup(f"unknown group {name!r}")
    fam, n = m.group(1), int(m.group(2))
    lo, hi = FAMILY_BOUNDS[fam]
    if not lo <= n <= hi:
        raise UnknownGroup(f"{fam}(n) requires {lo} <= n <= {hi}, got {n}")
    if fam == "SU":
        return LieGroupData(name, n - 1, n * n - 1, tuple(range(2, n + 1)))
    if fam == "Sp":
        return LieGroupData(name, n, n * (2 * n + 1), tuple(range(2, 2 * n + 1, 2)))
    m_ = n // 2
    if n % 2:
        q = tuple(range(2, 2 * m_ + 1, 2))
    else:
        q = tuple(sorted(list(range(2, 2 * m_ - 1, 2)) + [m_]))
    return LieGroupData(
        name, m_, n * (n - 1) // 2, q, _spin_special(n), flags=(SPIN_CUP_LENGTH_FLAG,)
    )


def d1(g: LieGroupData, p: int) -> tuple[int, ...]:
    return tuple(s.degree for s in g.special_classes if s.torsion_index == p)


def degree_partition(g: LieGroupData, p: int) -> DegreePartition:
    """Split the degrees of the mod-p primary classes into D_1 and D_2.

    D_2 is ``2*q(G)`` with each ``t*cl(t)`` (t in D_1) removed once.
    """
    first = d1(g, p)
    pool = Counter(2 * l for l in g.degrees_q)
    for t in first:
        target = t * g.cup_length(t)
        if pool[target] == 0:
            raise CorruptTable(f"{g.name}, p={p}: {target} = t*cl(t) not in 2*q(G)")
        pool[target] -= 1
    second = tuple(sorted(pool.elements()))
    if len(first) + len(second) != g.rank:
        raise CorruptTable(f"{g.name}, p={p}: partition has wrong size")
    return DegreePartition(first, second)


def zeta_square_table(g: LieGroupData, p: int) -> dict[int, str]:
    """Nonzero squares of the odd mod-p generators, keyed by generator degree.

    Values are monomials in the reduced Schubert cocycles, written with
    names ``x<t>``.  Missing keys square to zero.
    """
    if not g.is_exceptional:
        raise UnknownGroup(f"square table only known for exceptional groups, not {g.name}")
    if p != 2:
        return {}
    table = {3: "x6"}
    if g.name in ("E7", "E8"):
        table.update({5: "x10", 9: "x18"})
    if g.name == "E8":
        table.update({15: "x30", 23: "x6^6*x10"})
    return table


def all_tables() -> dict:
    """JSON-ready dump of the exceptional rows with their degree partitions."""
    out = {}
    for name in EXCEPTIONAL:
        g = group_data(name)
        out[name] = {
            "rank": g.rank,
            "dim": g.dim,
            "q": list(g.degrees_q),
            "special": [
                {"degree": s.degree, "torsion_index": s.torsion_index, "cup_length": s.cup_length}
                for s in g.special_classes
            ],
            "partitions": {
                str(p): {"d1": list(degree_partition(g, p).d1), "d2": list(degree_partition(g, p).d2)}
                for p in (2, 3, 5)
            },
        }
    return {"checksum": table_checksum(), "groups": out}
