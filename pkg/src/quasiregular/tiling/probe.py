"""Finite-patch probe for translational symmetry."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .._geometry import PointIndex
from .model import Patch

PROBE_TOL = 1e-6


@dataclass(frozen=True)
class ProbeResult:
    tested: list[tuple[float, float]]
    invariant: list[tuple[float, float]]
    inconclusive: list[tuple[float, float]]

    @property
    def has_translation(self) -> bool:
        return bool(self.invariant)


def _matches(tile, other, shift) -> bool:
    if tile.kind != other.kind or len(tile.vertices) != len(other.vertices):
        return False
    return all(
        min(math.dist((x + shift[0], y + shift[1]), w) for w in other.vertices) <= PROBE_TOL
        for x, y in tile.vertices
    )


def translation_probe(patch: Patch, candidates: int = 50) -> ProbeResult:
    """Test the shortest centroid-difference vectors as candidate translations.

    A vector t counts as a symmetry when every tile whose translate lands well
    inside the patch (one tile diameter from its outer rim) is matched by a
    tile of the same kind and the same vertex set.  Vectors that leave no
    tile to check are reported as inconclusive.
    """
    tiles = patch.tiles
    cents = [t.centroid for t in tiles]
    seen = PointIndex(PROBE_TOL)
    vecs = []
    for i, ti in enumerate(tiles):
        for j, tj in enumerate(tiles):
            if i == j or ti.kind != tj.kind:
                continue
            d = (cents[j][0] - cents[i][0], cents[j][1] - cents[i][1])
            if math.hypot(*d) > PROBE_TOL and seen.add(d)[1]:
                vecs.append(d)
    vecs.sort(key=lambda d: (round(math.hypot(*d), 9), math.atan2(d[1], d[0])))
    vecs = vecs[:candidates]
    diam = max(max(math.dist(t.centroid, v) for v in t.vertices) for t in tiles) * 2
    rim = max(math.hypot(*c) for c in cents)
    core = rim - diam
    index = PointIndex(PROBE_TOL)
    by_centroid = {}
    for t, c in zip(tiles, cents):
        by_centroid.setdefault(index.add(c)[0], t)
    invariant, inconclusive = [], []
    for d in vecs:
        checked = 0
        ok = True
        for t, c in zip(tiles, cents):
            if math.hypot(c[0] + d[0], c[1] + d[1]) > core:
                continue
            checked += 1
            hit = index.find((c[0] + d[0], c[1] + d[1]))
            if hit is None or not _matches(t, by_centroid[hit], d):
                ok = False
                break
        if checked == 0:
            inconclusive.append(d)
        elif ok:
            invariant.append(d)
    return ProbeResult(vecs, invariant, inconclusive)
