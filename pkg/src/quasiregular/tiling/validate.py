"""Geometric audit of finite patches."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .._geometry import (
    bbox,
    bbox_overlap,
    edge_lengths,
    interior_angles,
    overlap_area,
    point_in_polygon,
    segments_cross,
    signed_area,
)
from .model import VERTEX_TOL, Patch

OVERLAP_RATIO = 1e-8
ANGLE_TOL = 1e-8
EDGE_TOL = 1e-9


@dataclass
class ValidationReport:
    overlap_ok: bool
    max_overlap_ratio: float
    overlapping_pairs: list[tuple[int, int]]
    edge_match_ok: bool
    t_junctions: list[tuple[float, float]]
    edge_mismatch: float
    angle_sum_ok: bool
    max_angle_error: float
    bad_vertices: list[tuple[float, float]]
    census: Counter
    tile_census: Counter
    hole_census: list[dict] = field(default_factory=list)
    interior_count: int = 0

    @property
    def passed(self) -> bool:
        return self.overlap_ok and self.edge_match_ok and self.angle_sum_ok

    def as_dict(self) -> dict:
        def flag(ok):
            return "pass" if ok else "fail"

        return {
            "overlap": flag(self.overlap_ok),
            "angle_sum": flag(self.angle_sum_ok),
            "edge_match": flag(self.edge_match_ok),
            "max_overlap_ratio": self.max_overlap_ratio,
            "max_angle_error": self.max_angle_error,
            "interior_vertices": self.interior_count,
            "census": dict(sorted(self.census.items())),
            "tile_census": dict(sorted(self.tile_census.items())),
            "holes": self.hole_census,
        }


def configuration_key(angles) -> str:
    """Vertex configuration as descending corner angles in degrees, e.g. '120.000+120.000+120.000'."""
    return "+".join(f"{math.degrees(a):.3f}" for a in sorted(angles, reverse=True))


def _overlap_audit(patch: Patch):
    """Pairwise intersection area plus proper edge crossings and strictly-inside vertices."""
    outlines = list(patch.outlines())
    boxes = [bbox(v) for _, v in outlines]
    areas = [abs(signed_area(v)) for _, v in outlines]
    worst = 0.0
    pairs = []
    for i in range(len(outlines)):
        oi, vi = outlines[i]
        for j in range(i + 1, len(outlines)):
            oj, vj = outlines[j]
            if not bbox_overlap(boxes[i], boxes[j], VERTEX_TOL):
                continue
            ratio = overlap_area(vi, vj) / min(areas[i], areas[j])
            worst = max(worst, ratio)
            inside = any(point_in_polygon(p, vj, VERTEX_TOL) == 1 for p in vi) or any(
                point_in_polygon(p, vi, VERTEX_TOL) == 1 for p in vj
            )
            if ratio >= OVERLAP_RATIO or inside or _edges_cross(vi, vj):
                pairs.append((oi, oj))
    return worst, pairs


def _edges_cross(a, b) -> bool:
    for i in range(len(a)):
        p1, p2 = a[i], a[(i + 1) % len(a)]
        for j in range(len(b)):
            if segments_cross(p1, p2, b[j], b[(j + 1) % len(b)], 1e-12):
                return True
    return False


def _t_junctions(patch: Patch) -> list[tuple[float, float]]:
    pts = np.array(patch.points)
    found = []
    for u, w in patch.edge_owners:
        a, b = pts[u], pts[w]
        d = b - a
        L2 = float(d @ d)
        t = (pts - a) @ d / L2
        foot = a + np.outer(t, d)
        dist = np.linalg.norm(pts - foot, axis=1)
        L = math.sqrt(L2)
        hit = (dist <= VERTEX_TOL) & (t * L > VERTEX_TOL) & (t * L < L - VERTEX_TOL)
        hit[[u, w]] = False
        found.extend(tuple(map(float, pts[k])) for k in np.nonzero(hit)[0])
    return found


def _edge_audit(patch: Patch):
    """Every edge has at most two owners, traversed in opposite directions, endpoints coincident."""
    ok = all(len(owners) <= 2 for owners in patch.edge_owners.values())
    directed: dict[tuple[int, int], list] = {}
    for owner, verts in patch.outlines():
        vids = patch.outline_vids[owner]
        m = len(verts)
        for k in range(m):
            directed.setdefault((vids[k], vids[(k + 1) % m]), []).append((verts[k], verts[(k + 1) % m]))
    mismatch = 0.0
    for (u, w), segs in directed.items():
        if len(segs) > 1:
            ok = False
        back = directed.get((w, u))
        if back:
            (a, b), (c, d) = segs[0], back[0]
            mismatch = max(mismatch, math.dist(a, d), math.dist(b, c))
    tj = _t_junctions(patch)
    return ok and not tj and mismatch <= EDGE_TOL, tj, mismatch


def validate_patch(patch: Patch) -> ValidationReport:
    """Overlap, edge matching and angle sums, plus vertex-configuration census.

    Vertices touching a declared hole are exempt from the angle-sum rule.
    """
    worst, pairs = _overlap_audit(patch)
    edge_ok, tj, mismatch = _edge_audit(patch)
    census: Counter = Counter()
    tile_census: Counter = Counter()
    max_err = 0.0
    bad = []
    for vid in sorted(patch.interior_vertices):
        if patch.touches_hole(vid):
            continue
        corners = patch.vertex_index[vid]
        angles = [patch.corner_angle(o, k) for o, k in corners]
        err = abs(sum(angles) - 2 * math.pi)
        max_err = max(max_err, err)
        if err > ANGLE_TOL:
            bad.append(patch.points[vid])
        census[configuration_key(angles)] += 1
        tile_census["+".join(sorted(patch.tiles[o].kind for o, _ in corners))] += 1
    holes = [
        {
            "vertices": len(h),
            "area": abs(signed_area(h)),
            "edges": edge_lengths(h),
            "angles_deg": [math.degrees(a) for a in interior_angles(h)],
        }
        for h in patch.declared_holes
    ]
    return ValidationReport(
        overlap_ok=not pairs,
        max_overlap_ratio=worst,
        overlapping_pairs=pairs,
        edge_match_ok=edge_ok,
        t_junctions=tj,
        edge_mismatch=mismatch,
        angle_sum_ok=not bad,
        max_angle_error=max_err,
        bad_vertices=bad,
        census=census,
        tile_census=tile_census,
        hole_census=holes,
        interior_count=sum(census.values()),
    )
