"""Regular, isogonal and isotoxal polygons as orbits of I2(n).

An isogonal 2n-gon is the orbit of a1 w1 + a2 w2; its edges alternate
sqrt(2) a1 and sqrt(2) a2 and all interior angles are pi (1 - 1/n).  Its dual,
the isotoxal 2n-gon, has vertices on the two fundamental orbits a1 O(10) and
lambda O(01), with lambda fixed by orthogonality of the dual edge to Lambda.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ._geometry import PointIndex, edge_lengths, interior_angles, polar_angle, signed_area
from .coxeter import CoxeterSystem, build_system, diagram_mirror, orbit

TOL = 1e-9
Point = tuple[float, float]


@dataclass(frozen=True)
class Polygon:
    kind: str  # regular | isogonal | isotoxal
    n: int
    a1: float
    a2: float
    vertices: tuple[Point, ...]
    lam: float | None = None
    # vertex class labels; "A" on a1 O(10), "B" on lambda O(01) for isotoxal polygons
    labels: tuple[str, ...] = field(default=(), compare=False)

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def area(self) -> float:
        return signed_area(self.vertices)


@dataclass(frozen=True)
class PolygonMetrics:
    edges: list[float]
    angles: list[float]
    circumradii: list[float]
    lam: float | None = None
    eta: float | None = None
    # closed-form predictions for isotoxal polygons
    predicted_edge: float | None = None
    predicted_angles: tuple[float, float] | None = None

    def as_dict(self) -> dict:
        out = {
            "edges": self.edges,
            "angles_deg": [math.degrees(a) for a in self.angles],
            "circumradii": self.circumradii,
        }
        if self.lam is not None:
            out["lambda"] = self.lam
            out["eta"] = self.eta
            out["predicted_edge"] = self.predicted_edge
            out["predicted_angles_deg"] = [math.degrees(a) for a in self.predicted_angles]
        return out


def _check_params(n: int, a1: float, a2: float) -> None:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 2:
        raise ValueError(f"n must be an integer >= 2, got {n!r}")
    if not (math.isfinite(a1) and math.isfinite(a2)):
        raise ValueError("parameters must be finite")
    if a1 < 0 or a2 < 0:
        raise ValueError("parameters must be nonnegative")
    if a1 == 0 and a2 == 0:
        raise ValueError("a1 and a2 cannot both be zero")


def _orbit_points(sys: CoxeterSystem, a1: float, a2: float) -> tuple[Point, ...]:
    return tuple(v.point for v in orbit(sys, sys.weight((a1, a2))))


def regular_polygon(n: int, a: float) -> Polygon:
    """Regular 2n-gon of edge sqrt(2) a, the orbit of a (w1 + w2)."""
    if not a > 0:
        raise ValueError(f"edge parameter must be positive, got {a}")
    _check_params(n, a, a)
    sys = build_system(n)
    return Polygon("regular", int(n), float(a), float(a), _orbit_points(sys, a, a))


def isogonal_polygon(n: int, a1: float, a2: float) -> Polygon:
    """Orbit of a1 w1 + a2 w2.

    With a1 == a2 the result is regular (and tagged so); with one parameter
    zero it collapses to the fundamental n-gon.
    """
    _check_params(n, a1, a2)
    sys = build_system(n)
    kind = "regular" if a1 == a2 else "isogonal"
    return Polygon(kind, int(n), float(a1), float(a2), _orbit_points(sys, a1, a2))


def dual_scale(n: int, a1: float, a2: float) -> float:
    """lambda = a1 (2 a1 + c a2) / (c a1 + 2 a2) with c = 2 cos(pi / n).

    Solves (lambda w2 - a1 w1) . (a1 w1 + a2 w2) = 0 for every n; at n = 3, 4, 5
    it reduces to the three textbook cases (c = 1, sqrt 2, golden ratio).
    """
    if not (a1 > 0 and a2 > 0):
        raise ValueError("dual_scale needs a1 > 0 and a2 > 0")
    c = 2.0 * math.cos(math.pi / n)
    den = c * a1 + 2.0 * a2
    if den <= 0:
        raise ZeroDivisionError("degenerate dual scale denominator")
    return a1 * (2.0 * a1 + c * a2) / den


def duality_residual(n: int, a1: float, a2: float, lam: float | None = None) -> float:
    """|(lambda w2 - a1 w1) . Lambda|, evaluated with the Gram matrix of the weights."""
    if lam is None:
        lam = dual_scale(n, a1, a2)
    g = build_system(n).cartan_inv
    d = np.array([-a1, lam])
    v = np.array([a1, a2])
    return abs(float(d @ g @ v))


def isotoxal_polygon(n: int, a1: float, a2: float) -> Polygon:
    """Union of a1 O(10) and lambda O(01), sorted counter-clockwise."""
    _check_params(n, a1, a2)
    lam = dual_scale(n, a1, a2)
    sys = build_system(n)
    pts = [(p, "A") for p in _orbit_points(sys, a1, 0.0)]
    pts += [(p, "B") for p in _orbit_points(sys, 0.0, lam)]
    pts.sort(key=lambda t: polar_angle(t[0]))
    kind = "regular" if a1 == a2 else "isotoxal"
    return Polygon(kind, int(n), float(a1), float(a2), tuple(p for p, _ in pts), lam,
                   tuple(lbl for _, lbl in pts))


def polygon_metrics(p: Polygon) -> PolygonMetrics:
    if len(p.vertices) < 3:
        raise ValueError("a polygon needs at least 3 vertices")
    edges = edge_lengths(p.vertices)
    angles = interior_angles(p.vertices)
    radii = [math.hypot(*v) for v in p.vertices]
    if p.lam is None:
        return PolygonMetrics(edges, angles, radii)
    eta = p.lam / p.a1
    edge, ang = isotoxal_closed_form(p.n, p.a1, p.lam)
    return PolygonMetrics(edges, angles, radii, p.lam, eta, edge, ang)


def isotoxal_closed_form(n: int, a1: float, lam: float) -> tuple[float, tuple[float, float]]:
    """Edge and the two interior angles (at the lambda w2 vertex, at the a1 w1 vertex).

    edge^2 = a1^2 g - 2 a1 lam h + lam^2 g with g = (w_i, w_i), h = (w1, w2).
    For n = 3 this is a1^2 (2/3)(eta^2 - eta + 1).
    """
    gram = build_system(n).cartan_inv
    g, h = float(gram[0, 0]), float(gram[0, 1])
    edge2 = a1 * a1 * g - 2 * a1 * lam * h + lam * lam * g
    # angle at vertex V between neighbours P, Q: cos = (P-V).(Q-V) / edge^2.
    # lam w2 lies on the r1 mirror, so its neighbours are a1 w1 and r1(a1 w1); likewise for a1 w1 and r2.
    sys = build_system(n)
    w1 = np.array(sys.weights[0].as_array()[:2])
    w2 = np.array(sys.weights[1].as_array()[:2])
    A, B = a1 * w1, lam * w2
    r1, r2 = sys.reflection_matrices()
    at_b = _angle(B, A, r1 @ A)
    at_a = _angle(A, B, r2 @ B)
    return math.sqrt(edge2), (at_b, at_a)


def _angle(v, p, q) -> float:
    u, w = p - v, q - v
    c = float(u @ w / (np.linalg.norm(u) * np.linalg.norm(w)))
    return math.acos(max(-1.0, min(1.0, c)))


def hexagon_angles_from_eta(eta: float) -> tuple[float, float]:
    """Closed-form hexagon angles (alpha, beta) as functions of eta = lambda / a1 (n = 3)."""
    d = 2 * (eta * eta - eta + 1)
    alpha = math.acos((2 * eta * eta - 2 * eta - 1) / d)
    beta = math.acos((-eta * eta - 2 * eta + 2) / d)
    return alpha, beta


def hexagon_edge_from_eta(a1: float, eta: float) -> float:
    """Hexagon edge a1 sqrt(2/3 (eta^2 - eta + 1)), valid for n = 3."""
    return a1 * math.sqrt(2.0 / 3.0 * (eta * eta - eta + 1))


@dataclass(frozen=True)
class TransitivityReport:
    vertex_transitive: bool
    edge_transitive: bool
    vertex_orbits: int
    edge_orbits: int
    group_order: int


def symmetry_matrices(p: Polygon, sys: CoxeterSystem) -> list[np.ndarray]:
    """D_n, extended by the diagram mirror when it preserves the vertex set."""
    mats = sys.group_matrices()
    gamma = np.array([diagram_mirror(sys, e) for e in ((1.0, 0.0), (0.0, 1.0))]).T
    if _maps_onto(gamma, p.vertices):
        mats = mats + [m @ gamma for m in mats]
    return mats


def _maps_onto(m: np.ndarray, pts) -> bool:
    index = PointIndex(1e-7)
    for q in pts:
        index.add(q)
    return all(index.find(tuple(m @ np.array(q))) is not None for q in pts)


def transitivity_report(p: Polygon, sys: CoxeterSystem | None = None) -> TransitivityReport:
    """Count vertex and edge orbits under the polygon's Coxeter symmetry."""
    if sys is None:
        sys = build_system(p.n)
    mats = symmetry_matrices(p, sys)
    index = PointIndex(1e-7)
    for q in p.vertices:
        index.add(q)
    m = len(p.vertices)
    images = []
    for g in mats:
        img = []
        for q in p.vertices:
            j = index.find(tuple(g @ np.array(q)))
            if j is None:
                raise ValueError("polygon is not invariant under its Coxeter group")
            img.append(j)
        images.append(img)
    vertex_orbits = _count_orbits(range(m), lambda i: (im[i] for im in images))
    edges = [frozenset((i, (i + 1) % m)) for i in range(m)]
    edge_pos = {e: k for k, e in enumerate(edges)}

    def edge_images(k):
        i, j = k, (k + 1) % m
        for im in images:
            yield edge_pos[frozenset((im[i], im[j]))]

    edge_orbits = _count_orbits(range(len(edges)), edge_images)
    return TransitivityReport(vertex_orbits == 1, edge_orbits == 1, vertex_orbits, edge_orbits,
                              len(mats))


def _count_orbits(items, neighbours) -> int:
    parent = {i: i for i in items}

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in items:
        for j in neighbours(i):
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj
    return len({find(i) for i in parent})
