"""Deterministic edge-matching growth of finite patches.

Tiles are added ring by ring.  For every boundary edge of a tile in the
current ring, the attachment rules name the prototype (and which of its edge
classes) that must sit on the other side.  A candidate is rejected if it
overlaps an existing tile, creates a T-junction, overfills a vertex, or
leaves a vertex gap too small for any prototype corner.  If no candidate
survives, growth stops with :class:`TilingConflict`.
"""

from __future__ import annotations

import math
from typing import Mapping, Sequence

from .._geometry import (
    PointIndex,
    bbox_overlap,
    overlap_area,
    point_segment_distance,
)
from .model import VERTEX_TOL, Patch, PlacedTile, Point, Prototype

ANGLE_TOL = 1e-8
OVERLAP_RATIO = 1e-8
TWO_PI = 2.0 * math.pi

Rules = Mapping[tuple[str, str], Sequence[tuple[str, str]]]


class TilingConflict(RuntimeError):
    """Raised when no admissible tile fits a boundary edge."""

    def __init__(self, message: str, vertex: Point | None = None):
        super().__init__(message)
        self.vertex = vertex


def place_on_edge(proto: Prototype, edge: int, p: Point, q: Point, tile_id: int) -> PlacedTile:
    """Place ``proto`` so its edge ``edge`` (u -> v) lies on the directed edge q -> p.

    The existing tile traverses the shared edge as p -> q, so the new tile
    runs it the other way and both stay counter-clockwise.
    """
    u = proto.vertices[edge]
    v = proto.vertices[(edge + 1) % len(proto.vertices)]
    theta = math.atan2(p[1] - q[1], p[0] - q[0]) - math.atan2(v[1] - u[1], v[0] - u[0])
    c, s = math.cos(theta), math.sin(theta)
    t = (q[0] - (c * u[0] - s * u[1]), q[1] - (s * u[0] + c * u[1]))
    return PlacedTile(proto, theta, t, tile_id)


class Grower:
    def __init__(self, prototypes: Sequence[Prototype], rules: Rules):
        self.prototypes = {p.name: p for p in prototypes}
        self.rules = rules
        self.min_angle = min(min(p.angles) for p in prototypes)
        self.tiles: list[PlacedTile] = []
        self.ring: list[int] = []
        self.index = PointIndex(VERTEX_TOL)
        self.angle_sum: dict[int, float] = {}
        self.edge_count: dict[tuple[int, int], int] = {}

    def _vid(self, p: Point) -> int | None:
        return self.index.find(p)

    def _edge_key(self, a: Point, b: Point):
        ia, ib = self._vid(a), self._vid(b)
        if ia is None or ib is None:
            return None
        return (ia, ib) if ia < ib else (ib, ia)

    def add(self, tile: PlacedTile, ring: int) -> None:
        self.tiles.append(tile)
        self.ring.append(ring)
        verts = tile.vertices
        vids = [self.index.add(v)[0] for v in verts]
        for k, vid in enumerate(vids):
            self.angle_sum[vid] = self.angle_sum.get(vid, 0.0) + tile.prototype.angles[k]
            key = tuple(sorted((vid, vids[(k + 1) % len(vids)])))
            self.edge_count[key] = self.edge_count.get(key, 0) + 1

    def conflict(self, cand: PlacedTile) -> Point | None:
        """First offending vertex of ``cand`` against the current patch, or None."""
        verts = cand.vertices
        for k, v in enumerate(verts):
            vid = self._vid(v)
            if vid is None:
                continue
            total = self.angle_sum[vid] + cand.prototype.angles[k]
            gap = TWO_PI - total
            if gap < -ANGLE_TOL or (ANGLE_TOL < gap < self.min_angle - ANGLE_TOL):
                return v
        box = cand.bbox
        for t in self.tiles:
            if not bbox_overlap(box, t.bbox, VERTEX_TOL):
                continue
            if _t_junction(verts, t.vertices) or _t_junction(t.vertices, verts):
                return _nearest(verts, t.vertices)
            a = overlap_area(verts, t.vertices)
            if a > OVERLAP_RATIO * min(cand.area, t.area):
                return _nearest(verts, t.vertices)
        return None

    def grow(self, seed: str, rings: int) -> list[PlacedTile]:
        if rings < 0:
            raise ValueError("rings must be >= 0")
        self.add(PlacedTile(self.prototypes[seed], 0.0, (0.0, 0.0), 0), 0)
        frontier = [0]
        for r in range(1, rings + 1):
            nxt = []
            for tid in frontier:
                tile = self.tiles[tid]
                verts = tile.vertices
                m = len(verts)
                for k in range(m):
                    p, q = verts[k], verts[(k + 1) % m]
                    key = self._edge_key(p, q)
                    if key is not None and self.edge_count.get(key, 0) >= 2:
                        continue
                    cls = tile.prototype.edge_classes[k]
                    options = self.rules.get((tile.prototype.name, cls), ())
                    if not options:
                        continue
                    placed = None
                    bad = None
                    for name, want in options:
                        proto = self.prototypes[name]
                        cand = place_on_edge(proto, proto.edge_index(want), p, q, len(self.tiles))
                        bad = self.conflict(cand)
                        if bad is None:
                            placed = cand
                            break
                    if placed is None:
                        raise TilingConflict(
                            f"no admissible tile on edge of tile {tid} (ring {r - 1}); "
                            f"conflict at vertex ({bad[0]:.9f}, {bad[1]:.9f})",
                            bad,
                        )
                    self.add(placed, r)
                    nxt.append(placed.id)
            frontier = nxt
        return self.tiles


def _t_junction(verts: Sequence[Point], other: Sequence[Point]) -> bool:
    """Some vertex of ``verts`` lies strictly inside an edge of ``other``."""
    m = len(other)
    for v in verts:
        for i in range(m):
            a, b = other[i], other[(i + 1) % m]
            d, t = point_segment_distance(v, a, b)
            if d <= VERTEX_TOL and VERTEX_TOL < t * math.dist(a, b) < math.dist(a, b) - VERTEX_TOL:
                return True
    return False


def _nearest(verts, other) -> Point:
    return min(verts, key=lambda v: min(math.dist(v, o) for o in other))


def grow_patch(prototypes: Sequence[Prototype], rules: Rules, seed: str, rings: int,
               kind: str, params: dict) -> Patch:
    tiles = Grower(prototypes, rules).grow(seed, rings)
    return Patch(list(tiles), [], kind, dict(params))
