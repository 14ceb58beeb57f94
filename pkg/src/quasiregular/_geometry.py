"""Small 2D/3D geometry kernel shared by the polygon, prism and tiling modules."""

from __future__ import annotations

import itertools
import math
from typing import Iterable, Sequence

Point = tuple[float, float]


class PointIndex:
    """Assigns stable integer ids to points, merging points closer than ``tol``.

    Points are hashed on a grid of cell size ``tol`` and looked up in the
    3**d neighbouring cells, so merging never depends on which side of a cell
    boundary the rounding noise falls.
    """

    def __init__(self, tol: float = 1e-9):
        self.tol = tol
        self.points: list[tuple[float, ...]] = []
        self._cells: dict[tuple[int, ...], list[int]] = {}

    def __len__(self) -> int:
        return len(self.points)

    def _cell(self, p: Sequence[float]) -> tuple[int, ...]:
        return tuple(math.floor(c / self.tol) for c in p)

    def find(self, p: Sequence[float]) -> int | None:
        cell = self._cell(p)
        for offset in itertools.product((-1, 0, 1), repeat=len(cell)):
            key = tuple(c + o for c, o in zip(cell, offset))
            for idx in self._cells.get(key, ()):
                q = self.points[idx]
                if max(abs(a - b) for a, b in zip(p, q)) <= self.tol:
                    return idx
        return None

    def add(self, p: Sequence[float]) -> tuple[int, bool]:
        """Return (id, created)."""
        idx = self.find(p)
        if idx is not None:
            return idx, False
        idx = len(self.points)
        self.points.append(tuple(float(c) for c in p))
        self._cells.setdefault(self._cell(p), []).append(idx)
        return idx, True


def polar_angle(p: Point) -> float:
    """Angle in [0, 2pi); values within 1e-12 below 2pi snap to 0."""
    a = math.atan2(p[1], p[0]) % (2 * math.pi)
    if a > 2 * math.pi - 1e-12:
        a = 0.0
    return a


def signed_area(poly: Sequence[Point]) -> float:
    s = 0.0
    for (x0, y0), (x1, y1) in zip(poly, list(poly[1:]) + [poly[0]]):
        s += x0 * y1 - x1 * y0
    return 0.5 * s


def centroid(poly: Sequence[Point]) -> Point:
    a = signed_area(poly)
    cx = cy = 0.0
    for (x0, y0), (x1, y1) in zip(poly, list(poly[1:]) + [poly[0]]):
        cr = x0 * y1 - x1 * y0
        cx += (x0 + x1) * cr
        cy += (y0 + y1) * cr
    return cx / (6 * a), cy / (6 * a)


def edge_lengths(poly: Sequence[Point]) -> list[float]:
    m = len(poly)
    return [math.dist(poly[i], poly[(i + 1) % m]) for i in range(m)]


def interior_angles(poly: Sequence[Point]) -> list[float]:
    """Interior angles of a CCW simple polygon, each in (0, 2pi)."""
    m = len(poly)
    out = []
    for i in range(m):
        px, py = poly[i - 1]
        cx, cy = poly[i]
        nx, ny = poly[(i + 1) % m]
        ux, uy = cx - px, cy - py
        vx, vy = nx - cx, ny - cy
        turn = math.atan2(ux * vy - uy * vx, ux * vx + uy * vy)
        out.append(math.pi - turn)
    return out


def is_convex(poly: Sequence[Point], tol: float = 1e-12) -> bool:
    m = len(poly)
    for i in range(m):
        ax, ay = poly[i - 1]
        bx, by = poly[i]
        cx, cy = poly[(i + 1) % m]
        if (bx - ax) * (cy - by) - (by - ay) * (cx - bx) < -tol:
            return False
    return True


def bbox(poly: Iterable[Point]) -> tuple[float, float, float, float]:
    xs, ys = zip(*poly)
    return min(xs), min(ys), max(xs), max(ys)


def bbox_overlap(a, b, pad: float = 0.0) -> bool:
    return not (a[2] < b[0] - pad or b[2] < a[0] - pad or a[3] < b[1] - pad or b[3] < a[1] - pad)


def rotate(p: Point, angle: float) -> Point:
    c, s = math.cos(angle), math.sin(angle)
    return c * p[0] - s * p[1], s * p[0] + c * p[1]


def segments_cross(p1: Point, p2: Point, q1: Point, q2: Point, tol: float = 1e-12) -> bool:
    """True when the open segments intersect transversally in a single point."""

    def orient(a, b, c):
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])

    d1 = orient(q1, q2, p1)
    d2 = orient(q1, q2, p2)
    d3 = orient(p1, p2, q1)
    d4 = orient(p1, p2, q2)
    return ((d1 > tol and d2 < -tol) or (d1 < -tol and d2 > tol)) and (
        (d3 > tol and d4 < -tol) or (d3 < -tol and d4 > tol)
    )


def point_segment_distance(p: Point, a: Point, b: Point) -> tuple[float, float]:
    """Distance from p to segment ab, and the segment parameter of the foot point."""
    ax, ay = a
    dx, dy = b[0] - ax, b[1] - ay
    L2 = dx * dx + dy * dy
    if L2 == 0.0:
        return math.dist(p, a), 0.0
    t = ((p[0] - ax) * dx + (p[1] - ay) * dy) / L2
    tc = min(1.0, max(0.0, t))
    return math.dist(p, (ax + tc * dx, ay + tc * dy)), t


def point_in_polygon(p: Point, poly: Sequence[Point], tol: float = 1e-9) -> int:
    """+1 strictly inside, 0 on the boundary (within tol), -1 outside.

    Winding-number test; robust for non-convex simple polygons.
    """
    m = len(poly)
    for i in range(m):
        if point_segment_distance(p, poly[i], poly[(i + 1) % m])[0] <= tol:
            return 0
    wn = 0
    px, py = p
    for i in range(m):
        (x0, y0), (x1, y1) = poly[i], poly[(i + 1) % m]
        is_left = (x1 - x0) * (py - y0) - (px - x0) * (y1 - y0)
        if y0 <= py < y1 and is_left > 0:
            wn += 1
        elif y1 <= py < y0 and is_left < 0:
            wn -= 1
    return 1 if wn != 0 else -1


def triangulate(poly: Sequence[Point]) -> list[list[Point]]:
    """Ear-clipping triangulation of a CCW simple polygon (fan for convex input)."""
    poly = list(poly)
    if is_convex(poly):
        return [[poly[0], poly[i], poly[i + 1]] for i in range(1, len(poly) - 1)]
    idx = list(range(len(poly)))
    tris = []
    guard = 0
    while len(idx) > 3 and guard < 10_000:
        guard += 1
        for k in range(len(idx)):
            i0, i1, i2 = idx[k - 1], idx[k], idx[(k + 1) % len(idx)]
            a, b, c = poly[i0], poly[i1], poly[i2]
            if (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]) <= 1e-14:
                continue
            tri = [a, b, c]
            if any(point_in_polygon(poly[j], tri, 0.0) == 1 for j in idx if j not in (i0, i1, i2)):
                continue
            tris.append(tri)
            del idx[k]
            break
        else:
            raise ValueError("polygon is not simple; ear clipping failed")
    tris.append([poly[i] for i in idx])
    return tris


def clip_convex(subject: Sequence[Point], clip: Sequence[Point]) -> list[Point]:
    """Sutherland-Hodgman clip of ``subject`` against the CCW convex ``clip``."""
    out = list(subject)
    m = len(clip)
    for i in range(m):
        if not out:
            break
        a, b = clip[i], clip[(i + 1) % m]
        inp, out = out, []

        def side(p):
            return (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])

        for j in range(len(inp)):
            cur, prev = inp[j], inp[j - 1]
            sc, sp = side(cur), side(prev)
            if sc >= 0:
                if sp < 0:
                    out.append(_intersect(prev, cur, sp, sc))
                out.append(cur)
            elif sp >= 0:
                out.append(_intersect(prev, cur, sp, sc))
    return out


def _intersect(p, q, sp, sq):
    t = sp / (sp - sq)
    return p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])


def overlap_area(a: Sequence[Point], b: Sequence[Point]) -> float:
    """Area of the intersection of two simple CCW polygons."""
    if is_convex(b):
        if is_convex(a):
            inter = clip_convex(a, b)
            return abs(signed_area(inter)) if len(inter) >= 3 else 0.0
        return sum(abs(signed_area(i)) for i in (clip_convex(t, b) for t in triangulate(a)) if len(i) >= 3)
    total = 0.0
    for ta in triangulate(a):
        for tb in triangulate(b):
            inter = clip_convex(ta, tb)
            if len(inter) >= 3:
                total += abs(signed_area(inter))
    return total
