"""Quasi-regular prisms from D_n x C_2 orbits and their dipyramid duals."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .coxeter import build_system, orbit

TOL = 1e-9
Point3 = tuple[float, float, float]


@dataclass(frozen=True)
class Polyhedron:
    vertices: tuple[Point3, ...]
    edges: tuple[tuple[int, int], ...]
    faces: tuple[tuple[int, ...], ...]
    kind: str
    n: int = 0
    params: tuple[float, ...] = ()
    # Duals: r2 is the reciprocation radius squared; dividing vertices by
    # `scale` gives the normalization in which the omega_2-class equatorial
    # vertices have unit coefficient.
    r2: float | None = None
    scale: float = 1.0
    meta: dict = field(default_factory=dict, compare=False)

    def euler_characteristic(self) -> int:
        return len(self.vertices) - len(self.edges) + len(self.faces)

    def edge_lengths(self) -> list[float]:
        return [math.dist(self.vertices[i], self.vertices[j]) for i, j in self.edges]

    def normalized(self) -> Polyhedron:
        s = self.scale
        verts = tuple(tuple(c / s for c in v) for v in self.vertices)
        r2 = None if self.r2 is None else self.r2 / (s * s)
        return Polyhedron(verts, self.edges, self.faces, self.kind, self.n, self.params, r2, 1.0,
                          dict(self.meta))


def _edges_from_faces(faces) -> tuple[tuple[int, int], ...]:
    seen = set()
    out = []
    for f in faces:
        for i in range(len(f)):
            e = tuple(sorted((f[i], f[(i + 1) % len(f)])))
            if e not in seen:
                seen.add(e)
                out.append(e)
    return tuple(out)


def face_normal(verts: np.ndarray, face) -> np.ndarray:
    """Newell normal (unnormalized) of a face."""
    p = verts[list(face)]
    q = np.roll(p, -1, axis=0)
    return np.array([
        np.sum((p[:, 1] - q[:, 1]) * (p[:, 2] + q[:, 2])),
        np.sum((p[:, 2] - q[:, 2]) * (p[:, 0] + q[:, 0])),
        np.sum((p[:, 0] - q[:, 0]) * (p[:, 1] + q[:, 1])),
    ])


def _orient_outward(verts: np.ndarray, face) -> tuple[int, ...]:
    # convex solids here always contain the origin
    if face_normal(verts, face) @ verts[list(face)].mean(axis=0) < 0:
        return tuple(reversed(face))
    return tuple(face)


def _check_prism_params(n: int, a1: float, a2: float, a3: float) -> None:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 2:
        raise ValueError(f"n must be an integer >= 2, got {n!r}")
    if not all(math.isfinite(a) for a in (a1, a2, a3)):
        raise ValueError("parameters must be finite")
    if not a3 > 0:
        raise ValueError("a3 must be positive")
    if a1 < 0 or a2 < 0 or (a1 == 0 and a2 == 0):
        raise ValueError("a1, a2 must be nonnegative and not both zero")
    if n == 2 and (a1 == 0 or a2 == 0):
        raise ValueError("n = 2 with a zero parameter gives a degenerate (zero-area) cap")


def build_prism(n: int, a1: float, a2: float, a3: float) -> Polyhedron:
    """Orbit of a1 w1 + a2 w2 + a3 w3 under D_n x C_2, with symbolic faces.

    Vertices come top cap first (x3 = a3/sqrt2, CCW) then the bottom cap in
    the same angular order, so vertex i and i + m are joined by a lateral edge.
    """
    _check_prism_params(n, a1, a2, a3)
    sys = build_system(int(n), 3)
    pts = [v.point for v in orbit(sys, sys.weight((a1, a2, a3)))]
    m = len(pts) // 2
    verts = np.array(pts)
    if not np.allclose(verts[:m, :2], verts[m:, :2], atol=TOL):
        raise ArithmeticError("cap layers are not aligned")
    faces = [tuple(range(m)), tuple(range(2 * m - 1, m - 1, -1))]
    for i in range(m):
        j = (i + 1) % m
        faces.append((m + i, m + j, j, i))
    faces = [_orient_outward(verts, f) for f in faces]
    edges = _edges_from_faces(faces)
    lengths = [math.dist(pts[i], pts[j]) for i, j in edges]
    if m == 4:
        kind = "cube" if max(lengths) - min(lengths) <= TOL * max(lengths) else "rectangular-box"
    else:
        kind = "prism"
    return Polyhedron(tuple(tuple(p) for p in pts), edges, tuple(faces), kind, int(n),
                      (float(a1), float(a2), float(a3)))


def reciprocate(p: Polyhedron, r2: float) -> Polyhedron:
    """Polar dual about the origin-centred sphere of radius sqrt(r2).

    Face plane n.x = d goes to the vertex (r2 / d) n; the faces around each
    original vertex become the dual face, ordered by angle in its plane.
    """
    verts = np.array(p.vertices)
    dual_pts = []
    for f in p.faces:
        nrm = face_normal(verts, f)
        nrm /= np.linalg.norm(nrm)
        d = float(np.mean(verts[list(f)] @ nrm))
        if d <= 0:
            raise ValueError("origin must lie strictly inside the solid")
        dual_pts.append(nrm * (r2 / d))
    dual = np.array(dual_pts)
    incident: dict[int, list[int]] = {i: [] for i in range(len(verts))}
    for k, f in enumerate(p.faces):
        for i in f:
            incident[i].append(k)
    faces = []
    for i in range(len(verts)):
        ks = incident[i]
        axis = verts[i] / np.linalg.norm(verts[i])
        u = np.cross(axis, [1.0, 0.0, 0.0])
        if np.linalg.norm(u) < 1e-6:
            u = np.cross(axis, [0.0, 1.0, 0.0])
        u /= np.linalg.norm(u)
        w = np.cross(axis, u)
        c = dual[ks].mean(axis=0)
        ks = sorted(ks, key=lambda k: math.atan2((dual[k] - c) @ w, (dual[k] - c) @ u))
        faces.append(_orient_outward(dual, ks))
    edges = _edges_from_faces(faces)
    kind = "octahedron" if p.kind == "cube" else ("prism" if p.kind == "dipyramid" else "dipyramid")
    return Polyhedron(tuple(tuple(float(c) for c in q) for q in dual), edges, tuple(faces), kind,
                      p.n, p.params, r2)


def dual_prism(n: int, a1: float, a2: float, a3: float) -> Polyhedron:
    """Dipyramid dual of build_prism by polar reciprocation.

    r2 is chosen so the equatorial vertices are a1 O(10) and lambda O(01),
    i.e. the isotoxal dual of the cap (with a1 = 0 the roles of the weights
    swap).  The reported ``scale`` is the coefficient of the omega_2-class
    equatorial vertices (omega_1-class when a1 = 0), so ``normalized()``
    gives the unit-coefficient form: {w2, w1 - w2, -w1, +-2/3 w3} for the
    triangular prism, {+-w1, +-w2, +-(w2 - w1), +-2 w3} for the hexagonal one.
    """
    prism = build_prism(n, a1, a2, a3)
    gram = build_system(int(n)).cartan_inv
    g, h = float(gram[0, 0]), float(gram[0, 1])
    lam_w1 = a1 * g + a2 * h  # (Lambda, w1)
    lam_w2 = a1 * h + a2 * g  # (Lambda, w2)
    if a1 > 0:
        r2 = a1 * lam_w1
        scale = r2 / lam_w2
    else:
        r2 = a2 * lam_w2
        scale = r2 / lam_w1
    dual = reciprocate(prism, r2)
    return Polyhedron(dual.vertices, dual.edges, dual.faces, dual.kind, dual.n, dual.params,
                      r2, scale, {"primal_kind": prism.kind})


def planarity_deviation(p: Polyhedron) -> float:
    """Largest distance of a face vertex from its face's least-squares plane."""
    verts = np.array(p.vertices)
    worst = 0.0
    for f in p.faces:
        q = verts[list(f)]
        q = q - q.mean(axis=0)
        _, _, vt = np.linalg.svd(q)
        worst = max(worst, float(np.max(np.abs(q @ vt[-1]))))
    return worst


def edge_face_counts(p: Polyhedron) -> Counter:
    c = Counter()
    for f in p.faces:
        for i in range(len(f)):
            c[tuple(sorted((f[i], f[(i + 1) % len(f)])))] += 1
    return c


@dataclass(frozen=True)
class FaceInfo:
    label: str
    edges: tuple[float, ...]
    angles: tuple[float, ...]


def _face_angles(pts: np.ndarray) -> list[float]:
    m = len(pts)
    out = []
    for i in range(m):
        u = pts[i - 1] - pts[i]
        v = pts[(i + 1) % m] - pts[i]
        c = u @ v / (np.linalg.norm(u) * np.linalg.norm(v))
        out.append(math.acos(max(-1.0, min(1.0, float(c)))))
    return out


def _classify(edges: list[float], angles: list[float], tol: float) -> str:
    m = len(edges)
    scale = max(edges)

    def eq(a, b):
        return abs(a - b) <= tol * max(1.0, scale)

    all_edges_equal = all(eq(e, edges[0]) for e in edges)
    all_angles_equal = all(abs(a - angles[0]) <= tol for a in angles)
    if m == 3:
        if all_edges_equal:
            return "equilateral"
        if eq(edges[0], edges[1]) or eq(edges[1], edges[2]) or eq(edges[0], edges[2]):
            return "isosceles"
        return "scalene"
    if m == 4 and all(abs(a - math.pi / 2) <= tol for a in angles):
        return "square" if all_edges_equal else "rectangle"
    alt_edges = all(eq(edges[i], edges[i % 2]) for i in range(m)) and m % 2 == 0
    alt_angles = all(abs(angles[i] - angles[i % 2]) <= tol for i in range(m)) and m % 2 == 0
    if all_edges_equal and all_angles_equal:
        return "regular-polygon"
    if all_angles_equal and alt_edges:
        return "isogonal-polygon"
    if all_edges_equal and alt_angles:
        return "isotoxal-polygon"
    return "polygon"


def classify_faces(p: Polyhedron, tol: float = TOL) -> list[FaceInfo]:
    """Per-face label from the edge-length multiset and the face angles."""
    verts = np.array(p.vertices)
    out = []
    for f in p.faces:
        pts = verts[list(f)]
        edges = [float(np.linalg.norm(pts[(i + 1) % len(f)] - pts[i])) for i in range(len(f))]
        angles = _face_angles(pts)
        out.append(FaceInfo(_classify(edges, angles, tol), tuple(edges), tuple(angles)))
    return out


def distinct_lengths(values, tol: float = TOL) -> list[float]:
    """Sorted representatives of a list of lengths, merged within tol."""
    reps: list[float] = []
    for v in sorted(values):
        if not reps or v - reps[-1] > tol:
            reps.append(v)
    return reps
