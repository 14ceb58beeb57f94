"""Tile prototypes, placed tiles and finite patches."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

from .._geometry import PointIndex, bbox, centroid, interior_angles, signed_area

Point = tuple[float, float]
VERTEX_TOL = 1e-7  # merge radius for the patch vertex index


@dataclass(frozen=True)
class Prototype:
    """A tile shape in local coordinates with a class label on every edge.

    Edge i runs from vertex i to vertex i + 1 (CCW).  Edge classes drive the
    attachment rules of the growth engine.
    """

    name: str
    kind: str
    vertices: tuple[Point, ...]
    edge_classes: tuple[str, ...]

    def __post_init__(self):
        if len(self.edge_classes) != len(self.vertices):
            raise ValueError("one edge class per edge required")
        if signed_area(self.vertices) <= 0:
            raise ValueError(f"prototype {self.name} must be counter-clockwise")

    @cached_property
    def angles(self) -> tuple[float, ...]:
        return tuple(interior_angles(self.vertices))

    def edge_index(self, cls: str) -> int:
        return self.edge_classes.index(cls)


@dataclass(frozen=True)
class PlacedTile:
    prototype: Prototype
    rotation: float
    translation: Point
    id: int

    @cached_property
    def vertices(self) -> tuple[Point, ...]:
        c, s = math.cos(self.rotation), math.sin(self.rotation)
        tx, ty = self.translation
        return tuple((c * x - s * y + tx, s * x + c * y + ty) for x, y in self.prototype.vertices)

    @property
    def kind(self) -> str:
        return self.prototype.kind

    @cached_property
    def area(self) -> float:
        return signed_area(self.vertices)

    @cached_property
    def bbox(self):
        return bbox(self.vertices)

    @cached_property
    def centroid(self) -> Point:
        return centroid(self.vertices)


@dataclass
class Patch:
    """A finite collection of placed tiles plus regions left intentionally empty.

    ``vertex_index`` maps a vertex id to the (owner, corner) pairs meeting
    there; owners are tile ids, holes are encoded as -(k + 1).
    """

    tiles: list[PlacedTile]
    declared_holes: list[tuple[Point, ...]] = field(default_factory=list)
    kind: str = ""
    params: dict = field(default_factory=dict)
    points: list[Point] = field(init=False, repr=False)
    vertex_index: dict[int, list[tuple[int, int]]] = field(init=False, repr=False)
    edge_owners: dict[tuple[int, int], list[int]] = field(init=False, repr=False)
    interior_vertices: frozenset[int] = field(init=False, repr=False)
    outline_vids: dict[int, list[int]] = field(init=False, repr=False)

    def __post_init__(self):
        index = PointIndex(VERTEX_TOL)
        self.vertex_index = {}
        self.edge_owners = {}
        self.outline_vids = {}
        for owner, verts in self.outlines():
            vids = [index.add(p)[0] for p in verts]
            self.outline_vids[owner] = vids
            for k, vid in enumerate(vids):
                self.vertex_index.setdefault(vid, []).append((owner, k))
                key = tuple(sorted((vid, vids[(k + 1) % len(vids)])))
                self.edge_owners.setdefault(key, []).append(owner)
        self.points = [tuple(p) for p in index.points]
        incident: dict[int, list[tuple[int, int]]] = {}
        for e in self.edge_owners:
            incident.setdefault(e[0], []).append(e)
            incident.setdefault(e[1], []).append(e)
        self.interior_vertices = frozenset(
            v for v, es in incident.items() if all(len(self.edge_owners[e]) == 2 for e in es)
        )

    def outlines(self):
        for t in self.tiles:
            yield t.id, t.vertices
        for k, h in enumerate(self.declared_holes):
            yield -(k + 1), tuple(h)

    def outline(self, owner: int) -> tuple[Point, ...]:
        if owner >= 0:
            return self.tiles[owner].vertices
        return tuple(self.declared_holes[-owner - 1])

    def corner_angle(self, owner: int, corner: int) -> float:
        return interior_angles(self.outline(owner))[corner]

    def touches_hole(self, vid: int) -> bool:
        return any(owner < 0 for owner, _ in self.vertex_index[vid])

    def __len__(self) -> int:
        return len(self.tiles)
