"""Patch generators for the hexagon, octagon and decagon tilings."""

from __future__ import annotations

import math

from .._geometry import centroid, edge_lengths, signed_area
from ..coxeter import build_system
from ..polygon import Polygon, isogonal_polygon, isotoxal_polygon, regular_polygon
from .growth import TilingConflict, grow_patch, place_on_edge
from .model import Patch, PlacedTile, Prototype

SQRT2 = math.sqrt(2.0)


def _centred(verts):
    cx, cy = centroid(verts)
    return tuple((x - cx, y - cy) for x, y in verts)


def _dedupe(verts, tol=1e-9):
    """Drop zero-length edges (a collapsed isogonal polygon repeats vertices)."""
    out = []
    for v in verts:
        if not out or math.dist(v, out[-1]) > tol:
            out.append(v)
    while len(out) > 1 and math.dist(out[0], out[-1]) <= tol:
        out.pop()
    return tuple(out)


def isogonal_prototype(name: str, poly: Polygon) -> Prototype:
    """Edge classes 'a1'/'a2' follow from the position of a1 w1 + a2 w2 in the vertex list.

    The edge leaving that vertex counter-clockwise is the a1 edge; classes alternate.
    """
    verts = poly.vertices
    if poly.a1 == 0 or poly.a2 == 0:
        cls = "a1" if poly.a2 == 0 else "a2"
        verts = _dedupe(verts)
        return Prototype(name, "triangle" if len(verts) == 3 else "regular", verts,
                         (cls,) * len(verts))
    sys = build_system(poly.n)
    start = sys.weight((poly.a1, poly.a2)).point
    k0 = min(range(len(verts)), key=lambda i: math.dist(verts[i], start))
    classes = tuple("a1" if (i - k0) % 2 == 0 else "a2" for i in range(len(verts)))
    return Prototype(name, poly.kind, verts, classes)


def isotoxal_prototype(name: str, poly: Polygon) -> Prototype:
    """Edge classes 'AB'/'BA' by the vertex classes at the tail and head of each edge."""
    m = len(poly.vertices)
    classes = tuple(poly.labels[i] + poly.labels[(i + 1) % m] for i in range(m))
    return Prototype(name, poly.kind, poly.vertices, classes)


def uniform_prototype(name: str, kind: str, verts, cls: str) -> Prototype:
    return Prototype(name, kind, tuple(verts), (cls,) * len(verts))


def square(side: float):
    h = side / 2
    return ((-h, -h), (h, -h), (h, h), (-h, h))


def _check_rings(rings):
    if isinstance(rings, bool) or not isinstance(rings, int) or rings < 1:
        raise ValueError(f"rings must be an integer >= 1, got {rings!r}")


def _check_pair(a1, a2, positive=False):
    if not (math.isfinite(a1) and math.isfinite(a2)):
        raise ValueError("parameters must be finite")
    if positive:
        if not (a1 > 0 and a2 > 0):
            raise ValueError("parameters must be positive")
    elif a1 < 0 or a2 < 0 or (a1 == 0 and a2 == 0):
        raise ValueError("a1, a2 must be nonnegative and not both zero")


def hexagon_patch(a1: float, a2: float, rings: int) -> Patch:
    """Isogonal hexagons around regular hexagons, two of the former and one of
    the latter at every vertex.

    Regular hexagons have edge sqrt2 a2 and sit on the a2 edges; a1 edges join
    two isogonal hexagons.  a1 = a2 gives the honeycomb, a1 = 0 the
    trihexagonal limit and a2 = 0 the triangular lattice.
    """
    _check_pair(a1, a2)
    _check_rings(rings)
    iso = isogonal_prototype("isogonal-hexagon", isogonal_polygon(3, a1, a2))
    protos = [iso]
    rules = {("isogonal-hexagon", "a1"): [("isogonal-hexagon", "a1")]}
    seed = "isogonal-hexagon"
    if a2 > 0:
        reg = regular_polygon(3, a2)
        protos.append(uniform_prototype("regular-hexagon", "regular", reg.vertices, "a2"))
        rules[("isogonal-hexagon", "a2")] = [("regular-hexagon", "a2")]
        rules[("regular-hexagon", "a2")] = [("isogonal-hexagon", "a2")]
        seed = "regular-hexagon"
    return grow_patch(protos, rules, seed, rings, "hexagon", {"a1": a1, "a2": a2, "rings": rings})


def isotoxal_hexagon_patch(a1: float, a2: float, rings: int) -> Patch:
    """Central regular hexagon ringed by isotoxal hexagons; every edge has the same length.

    The regular hexagons sit on the AB edges of the isotoxal ones, so each
    vertex sees alpha + beta + 120 degrees.
    """
    _check_pair(a1, a2, positive=True)
    _check_rings(rings)
    tox = isotoxal_polygon(3, a1, a2)
    edge = edge_lengths(tox.vertices)[0]
    reg = regular_polygon(3, edge / SQRT2)
    protos = [
        isotoxal_prototype("isotoxal-hexagon", tox),
        uniform_prototype("regular-hexagon", "regular", reg.vertices, "AB"),
    ]
    rules = {
        ("regular-hexagon", "AB"): [("isotoxal-hexagon", "AB")],
        ("isotoxal-hexagon", "AB"): [("regular-hexagon", "AB")],
        ("isotoxal-hexagon", "BA"): [("isotoxal-hexagon", "BA")],
    }
    return grow_patch(protos, rules, "regular-hexagon", rings, "isotoxal-hexagon",
                      {"a1": a1, "a2": a2, "rings": rings, "lambda": tox.lam})


OCTAGON_VARIANTS = ("regular", "isogonal", "isotoxal")


def octagon_square_patch(a1: float, a2: float, rings: int, variant: str = "isogonal") -> Patch:
    """Two octagons and one square at each vertex (truncated square tiling combinatorics).

    The squares border the a2 edges of an isogonal octagon (side sqrt2 a2) or
    the AB edges of an isotoxal one (side = the common edge length).
    """
    _check_pair(a1, a2, positive=True)
    _check_rings(rings)
    if variant not in OCTAGON_VARIANTS:
        raise ValueError(f"variant must be one of {OCTAGON_VARIANTS}, got {variant!r}")
    if variant == "regular" and a1 != a2:
        raise ValueError("the regular variant requires a1 == a2")
    if variant == "isotoxal":
        tox = isotoxal_polygon(4, a1, a2)
        oct_proto = isotoxal_prototype("octagon", tox)
        side = edge_lengths(tox.vertices)[0]
        near, far = "AB", "BA"
        extra = {"lambda": tox.lam}
    else:
        oct_proto = isogonal_prototype("octagon", isogonal_polygon(4, a1, a2))
        side = SQRT2 * a2
        near, far = "a2", "a1"
        extra = {}
    sq = uniform_prototype("square", "square", square(side), near)
    rules = {
        ("octagon", near): [("square", near)],
        ("square", near): [("octagon", near)],
        ("octagon", far): [("octagon", far)],
    }
    params = {"a1": a1, "a2": a2, "rings": rings, "variant": variant, **extra}
    return grow_patch([oct_proto, sq], rules, "octagon", rings, "octagon-square", params)


def bowtie(edge: float) -> tuple[tuple[float, float], ...]:
    """Equilateral non-convex hexagon with interior angles 72, 72, 216, 72, 72, 216 degrees.

    Edge 0 joins the two 72 degree corners of one lobe, edge 3 those of the other.
    """
    angles = [72, 72, 216, 72, 72, 216]
    pts = [(0.0, 0.0)]
    heading = 0.0
    for k in range(5):
        x, y = pts[-1]
        pts.append((x + edge * math.cos(heading), y + edge * math.sin(heading)))
        heading += math.pi - math.radians(angles[k + 1])
    pts = _centred(pts)
    if signed_area(pts) <= 0:
        raise ArithmeticError("bow-tie construction is not counter-clockwise")
    return pts


DECAGON_KINDS = ("bowtie-exemplar", "isogonal-exemplar")

# Stored exemplar combinatorics: (parent tile, parent edge, prototype, prototype edge).
# Tile 0 is the central decagon.
_BOWTIE_LAYOUT = (
    [(0, 2 * k, "decagon", 0) for k in range(5)]
    + [(0, 2 * k + 1, "bowtie", 0) for k in range(5)]
    + [(6 + k, 3, "decagon", 0) for k in range(5)]
)


def _layout_patch(protos, layout, kind, params) -> list[PlacedTile]:
    by_name = {p.name: p for p in protos}
    tiles = [PlacedTile(protos[0], 0.0, (0.0, 0.0), 0)]
    for parent, pedge, name, edge in layout:
        verts = tiles[parent].vertices
        p, q = verts[pedge], verts[(pedge + 1) % len(verts)]
        tiles.append(place_on_edge(by_name[name], edge, p, q, len(tiles)))
    return tiles


def decagon_patch(kind: str, a1: float, a2: float = None) -> Patch:
    """Stored finite exemplars around a central decagon.

    bowtie-exemplar: a regular decagon of edge sqrt2 a1 ringed by five
    decagons and five bow-ties, with a decagon beyond each bow-tie.
    isogonal-exemplar: an isogonal decagon with five decagons on its a1
    edges; the quadrilateral gaps on the a2 edges are declared holes.
    """
    if kind not in DECAGON_KINDS:
        raise ValueError(f"unknown decagon exemplar {kind!r}; expected one of {DECAGON_KINDS}")
    if a2 is None:
        a2 = a1
    _check_pair(a1, a2, positive=True)
    if kind == "bowtie-exemplar":
        dec = regular_polygon(5, a1)
        protos = [
            uniform_prototype("decagon", "regular", dec.vertices, "d"),
            uniform_prototype("bowtie", "bowtie", bowtie(SQRT2 * a1), "d"),
        ]
        tiles = _layout_patch(protos, _BOWTIE_LAYOUT, kind, {})
        return Patch(tiles, [], "decagon", {"kind": kind, "a1": a1, "a2": a1})
    proto = isogonal_prototype("decagon", isogonal_polygon(5, a1, a2))
    first = proto.edge_index("a1")
    a1_edges = [i for i, c in enumerate(proto.edge_classes) if c == "a1"]
    layout = [(0, e, "decagon", first) for e in a1_edges]
    tiles = _layout_patch([proto], layout, kind, {})
    centre = tiles[0].vertices
    m = len(centre)
    holes = []
    for k, e in enumerate(a1_edges):
        left, right = tiles[1 + k], tiles[1 + (k + 1) % len(a1_edges)]
        g = (e + 1) % m  # the a2 edge between the two neighbours
        lv, rv = left.vertices, right.vertices
        hole = [centre[(g + 1) % m], centre[g], lv[(first - 1) % m], rv[(first + 2) % m]]
        if signed_area(hole) < 0:
            hole.reverse()
        holes.append(tuple(hole))
    return Patch(tiles, holes, "decagon", {"kind": kind, "a1": a1, "a2": a2})


__all__ = [
    "TilingConflict",
    "bowtie",
    "decagon_patch",
    "hexagon_patch",
    "isotoxal_hexagon_patch",
    "octagon_square_patch",
]
