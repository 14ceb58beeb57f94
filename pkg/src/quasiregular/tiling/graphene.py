"""Carbon-bond graph of an isogonal hexagon patch."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .model import Patch

DOUBLE_CHOICES = ("shorter", "longer")


@dataclass(frozen=True)
class BondGraph:
    atoms: list[tuple[float, float]]
    bonds: list[tuple[int, int, str]]  # (i, j, "single" | "double")
    interior: frozenset[int]
    lengths: dict[str, float]  # edge class -> bond length
    ratio: float  # a1-class bond length over a2-class bond length

    def degree(self, i: int) -> int:
        return sum(1 for a, b, _ in self.bonds if i in (a, b))

    def audit(self) -> dict:
        """Per-atom degrees and double-bond counts; interior atoms need 3 bonds, one double."""
        deg = [0] * len(self.atoms)
        dbl = [0] * len(self.atoms)
        for a, b, kind in self.bonds:
            for k in (a, b):
                deg[k] += 1
                dbl[k] += kind == "double"
        bad = [i for i in sorted(self.interior) if deg[i] != 3 or dbl[i] != 1]
        return {
            "atoms": len(self.atoms),
            "bonds": len(self.bonds),
            "interior_atoms": len(self.interior),
            "max_degree": max(deg, default=0),
            "bad_interior_atoms": bad,
            "ok": not bad and max(deg, default=0) <= 3,
        }


def graphene_graph(patch: Patch, double_bond: str = "shorter") -> BondGraph:
    """Atoms are patch vertices, bonds are tile edges tagged by their length class.

    Bonds of the ``double_bond`` length class are double, the rest single.
    """
    if double_bond not in DOUBLE_CHOICES:
        raise ValueError(f"double_bond must be one of {DOUBLE_CHOICES}")
    if patch.kind != "hexagon":
        raise ValueError(f"graphene graph needs a hexagon patch, got {patch.kind!r}")
    a1, a2 = patch.params.get("a1"), patch.params.get("a2")
    if not (a1 and a2):
        raise ValueError("degenerate patch: tiles are not all hexagons")
    if a1 == a2:
        raise ValueError("a1 == a2: bonds have a single length class, no single/double split")
    classes: dict[tuple[int, int], str] = {}
    lengths: dict[str, float] = {}
    for tile in patch.tiles:
        vids = patch.outline_vids[tile.id]
        m = len(vids)
        for k in range(m):
            key = tuple(sorted((vids[k], vids[(k + 1) % m])))
            cls = tile.prototype.edge_classes[k]
            classes.setdefault(key, cls)
            if classes[key] != cls:
                raise ValueError(f"edge {key} has conflicting length classes")
            lengths.setdefault(cls, math.dist(patch.points[vids[k]], patch.points[vids[(k + 1) % m]]))
    short = min(lengths, key=lengths.get)
    double_cls = short if double_bond == "shorter" else max(lengths, key=lengths.get)
    bonds = [(i, j, "double" if c == double_cls else "single") for (i, j), c in sorted(classes.items())]
    return BondGraph(list(patch.points), bonds, patch.interior_vertices, lengths,
                     lengths["a1"] / lengths["a2"])
