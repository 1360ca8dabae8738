"""Serializable ring presentations (generators, relations, graded dimensions)."""
from __future__ import annotations

import functools
import json
from dataclasses import dataclass, field

from .gradedalg import FreeRing, GradedDims, Polynomial


@dataclass
class RingPresentation:
    """``coefficient``: 0 for Z, p for F_p.

    ``tensor_factor`` lists odd symbols (name, degree, square) of a simple
    system tensored onto the quotient; ``graded_dims`` already includes it.
    """

    coefficient: int
    generators: list[tuple[str, int, int]]  # (name, degree, additive order; 0 = infinite)
    relations: list[str]
    graded_dims: GradedDims = field(default_factory=GradedDims)
    group: str = ""
    tensor_factor: list[tuple[str, int, str]] = field(default_factory=list)
    augmented: bool = False  # quotient of the augmentation ideal F[...]^+

    @functools.cached_property
    def ring(self) -> FreeRing:
        return FreeRing(self.coefficient, [(n, d) for n, d, _ in self.generators])

    def relation_polys(self) -> list[Polynomial]:
        ring = self.ring
        return [ring.parse(r) for r in self.relations]

    def to_dict(self) -> dict:
        out = {
            "group": self.group,
            "coefficient": self.coefficient,
            "generators": [
                {"name": n, "degree": d, "order": o} for n, d, o in self.generators
            ],
            "relations": list(self.relations),
            "graded_dims": {str(d): c for d, c in sorted(self.graded_dims.items()) if c},
        }
        if self.tensor_factor:
            out["tensor_factor"] = [
                {"name": n, "degree": d, "square": s} for n, d, s in self.tensor_factor
            ]
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True) + "\n"

    def ring_text(self) -> str:
        """One-line form such as ``Z[x6]/<2*x6, x6^2>``."""
        coeff = "Z" if self.coefficient == 0 else f"F{self.coefficient}"
        if not self.generators and not self.tensor_factor:
            return "0" if self.augmented else coeff
        names = ",".join(n for n, _, _ in self.generators)
        head = f"{coeff}[{names}]" + ("^+" if self.augmented else "")
        if self.relations:
            head += "/<" + ", ".join(self.relations) + ">"
        if self.tensor_factor:
            head += " (x) Delta(" + ",".join(n for n, _, _ in self.tensor_factor) + ")"
        return head

    def to_text(self) -> str:
        lines = [f"{self.group}: {self.ring_text()}"]
        for n, d, o in self.generators:
            lines.append(f"  {n}  degree {d}  order {o or 'inf'}")
        for n, d, s in self.tensor_factor:
            lines.append(f"  {n}  degree {d}  square {s}")
        dims = " ".join(f"{d}:{c}" for d, c in sorted(self.graded_dims.items()) if c)
        lines.append(f"  graded dims: {dims or '0'}")
        return "\n".join(lines) + "\n"
