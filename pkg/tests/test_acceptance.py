"""Acceptance criteria 1-13.

Each test records one PASS/FAIL line; the lines are printed in the terminal
summary (see conftest.py) and also echoed when run with ``-s``.
"""

import itertools
import math
import time

import numpy as np
import pytest

from oracles import point_set_equal
from quasiregular.coxeter import build_system, generator_relations_residual, reflect_linear, reflect_quaternion
from quasiregular.polygon import (
    dual_scale,
    duality_residual,
    hexagon_angles_from_eta,
    isogonal_polygon,
    isotoxal_polygon,
    polygon_metrics,
    regular_polygon,
    transitivity_report,
)
from quasiregular.prism import build_prism, distinct_lengths, dual_prism
from quasiregular.quat import Quaternion, aut_group_order
from quasiregular.tiling import (
    graphene_graph,
    hexagon_patch,
    isotoxal_hexagon_patch,
    octagon_square_patch,
    validate_patch,
)

SQ2 = math.sqrt(2)
TAU = (1 + math.sqrt(5)) / 2
RESULTS: list[str] = []


def record(number: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {title}" + (f" ({detail})" if detail else "")
    RESULTS.append(line)
    print(line)
    assert ok, line


def test_01_group_orders():
    t0 = time.perf_counter()
    o3 = aut_group_order(3)
    t3 = time.perf_counter() - t0
    t0 = time.perf_counter()
    o5 = aut_group_order(5)
    t5 = time.perf_counter() - t0
    ok = o3 == 144 and o5 == 400 and t3 < 5 and t5 < 5
    record(1, "automorphism group orders 144 and 400", ok, f"{o3} in {t3:.2f}s, {o5} in {t5:.2f}s")


def test_02_generator_relations():
    rng = np.random.default_rng(2)
    worst = 0.0
    for n in range(2, 13):
        sys = build_system(n)
        for a in rng.uniform(-5, 5, size=(100, 2)):
            worst = max(worst, generator_relations_residual(sys, sys.weight(tuple(a))))
    record(2, "r1^2 = r2^2 = (r1 r2)^n = 1 for n = 2..12", worst < 1e-10, f"max residual {worst:.1e}")


def test_03_linear_vs_quaternion_reflection():
    rng = np.random.default_rng(3)
    systems = {n: build_system(n) for n in range(2, 13)}
    worst = 0.0
    for _ in range(1000):
        sys = systems[int(rng.integers(2, 13))]
        i = int(rng.integers(1, 3))
        q = Quaternion(*rng.uniform(-5, 5, size=2))
        d = reflect_linear(sys, i, q) - reflect_quaternion(sys, i, q)
        worst = max(worst, d.norm())
    record(3, "linear reflection equals quaternion reflection on 1000 samples", worst < 1e-10,
           f"max deviation {worst:.1e}")


def test_04_isogonal_hexagon():
    m = polygon_metrics(isogonal_polygon(3, 1, 2))
    e = m.edges
    alt = all(
        abs(e[i] - e[0]) < 1e-9 if i % 2 == 0 else abs(e[i] - e[1]) < 1e-9 for i in range(6)
    ) and {round(e[0], 9), round(e[1], 9)} == {round(SQ2, 9), round(2 * SQ2, 9)}
    ang = max(abs(math.degrees(a) - 120) for a in m.angles)
    record(4, "isogonal hexagon (1,2): edges sqrt2 / 2sqrt2 alternate, angles 120", alt and ang < 1e-9,
           f"edges {e[0]:.9f}/{e[1]:.9f}, max angle error {ang:.1e} deg")


def test_05_dual_scale():
    lam = dual_scale(3, 1, 2)
    res = duality_residual(3, 1, 2)
    rng = np.random.default_rng(5)
    worst = 0.0
    for a1, a2 in rng.uniform(0.05, 5, size=(200, 2)):
        n4 = a1 * (SQ2 * a1 + a2) / (a1 + SQ2 * a2)
        n5 = a1 * (2 * a1 + TAU * a2) / (TAU * a1 + 2 * a2)
        worst = max(worst, abs(dual_scale(4, a1, a2) - n4), abs(dual_scale(5, a1, a2) - n5),
                    duality_residual(4, a1, a2), duality_residual(5, a1, a2))
    ok = abs(lam - 0.8) < 1e-12 and res < 1e-10 and worst < 1e-10
    record(5, "dual scale lambda(3,1,2) = 0.8 and the n = 4, 5 forms", ok,
           f"lambda {lam:.15f}, residual {res:.1e}, special-case residual {worst:.1e}")


def test_06_isotoxal_angles():
    rng = np.random.default_rng(6)
    worst = 0.0
    for n, total in ((3, 240), (4, 270), (5, 288)):
        for a1, a2 in rng.uniform(0.05, 5, size=(50, 2)):
            deg = [math.degrees(a) for a in polygon_metrics(isotoxal_polygon(n, a1, a2)).angles]
            worst = max(worst, max(abs(deg[i] + deg[(i + 1) % len(deg)] - total) for i in range(len(deg))))
    alpha, beta = (math.degrees(x) for x in hexagon_angles_from_eta(0.8))
    ok = worst < 1e-9 and abs(alpha - 141.787) < 1e-3 and abs(beta - 98.213) < 1e-3
    record(6, "isotoxal alpha + beta = 240 / 270 / 288; hexagon angles at eta 0.8", ok,
           f"max sum error {worst:.1e} deg, alpha {alpha:.4f}, beta {beta:.4f}")


def _w(n, *c):
    return np.array(build_system(n, 3).weight(c).point)


def test_07_prism_duals():
    tri = distinct_lengths(dual_prism(3, 1, 0, 1).normalized().edge_lengths())
    hexa = distinct_lengths(dual_prism(3, 1, 1, 1).normalized().edge_lengths())
    ok_tri = len(tri) == 2 and np.allclose(tri, [math.sqrt(8 / 9), SQ2], atol=1e-9, rtol=0)
    ok_hex = len(hexa) == 2 and np.allclose(hexa, [math.sqrt(2 / 3), math.sqrt(8 / 3)], atol=1e-9, rtol=0)
    octa = np.array(dual_prism(4, 1, 0, 1).vertices)
    w1, w2, w3 = _w(4, 1, 0, 0), _w(4, 0, 1, 0), _w(4, 0, 0, 1)
    target = np.array([s * v for s in (1, -1) for v in (w2, -w2 + SQ2 * w1, SQ2 * w3)])
    k = np.linalg.norm(octa[0]) / np.linalg.norm(target[0])
    ok_oct = point_set_equal(octa / k, target, 1e-9)
    record(7, "prism duals: {sqrt(8/9), sqrt2}, {sqrt(2/3), sqrt(8/3)}, cube to octahedron",
           ok_tri and ok_hex and ok_oct, f"triangular {tri}, hexagonal {hexa}")


def test_08_euler_characteristic():
    classes = [(1, 0, 1), (0, 1, 1), (1, 1, 1), (1, 2, 1), (2, 1, 3), (1, 1, 2)]
    bad = []
    count = 0
    for n in range(2, 9):
        for p in classes:
            if n == 2 and 0 in p[:2]:
                continue  # zero-area cap
            for solid in (build_prism(n, *p), dual_prism(n, *p)):
                count += 1
                if solid.euler_characteristic() != 2:
                    bad.append((n, p, solid.kind))
    record(8, "V - E + F = 2 for prisms and dipyramids, n = 2..8", not bad, f"{count} solids, failures {bad}")


def test_09_pentagonal_prisms():
    a = np.array(build_prism(5, 1, 0, 1).vertices)
    b = np.array(build_prism(5, 0, 1, 1).vertices)
    t = math.radians(36)
    rot = np.array([[math.cos(t), -math.sin(t), 0], [math.sin(t), math.cos(t), 0], [0, 0, 1]])
    ok = point_set_equal(a @ rot.T, b, 1e-9)
    record(9, "pentagonal prisms from w1 + w3 and w2 + w3 differ by a 36 degree rotation", ok)


def test_10_tiling_validation():
    failures = []
    patches = 0
    for a1, a2 in itertools.product((0.5, 1, 2), repeat=2):
        for rings in (1, 2, 3):
            factories = [
                ("hexagon", lambda: hexagon_patch(a1, a2, rings)),
                ("isotoxal", lambda: isotoxal_hexagon_patch(a1, a2, rings)),
                ("octagon-isogonal", lambda: octagon_square_patch(a1, a2, rings, "isogonal")),
                ("octagon-isotoxal", lambda: octagon_square_patch(a1, a2, rings, "isotoxal")),
            ]
            if a1 == a2:
                factories.append(("octagon-regular", lambda: octagon_square_patch(a1, a2, rings, "regular")))
            for name, make in factories:
                r = validate_patch(make())
                patches += 1
                if not (r.overlap_ok and r.angle_sum_ok and r.max_overlap_ratio < 1e-8 and r.max_angle_error <= 1e-8):
                    failures.append((name, a1, a2, rings))
    honey = validate_patch(hexagon_patch(1, 1, 3))
    ok_honey = honey.passed and set(honey.census) == {"120.000+120.000+120.000"} and honey.interior_count > 0
    record(10, "tiling generators pass validation on the parameter grid; honeycomb limit 3 x 120",
           not failures and ok_honey, f"{patches} patches, failures {failures}")


def test_11_graphene():
    g = graphene_graph(hexagon_patch(1, 2, 3), "shorter")
    audit = g.audit()
    record(11, "graphene: every interior atom has 3 bonds, exactly one double", audit["ok"],
           f"{audit['interior_atoms']} interior atoms checked, bond ratio {g.ratio:.6f}")


def test_12_transitivity():
    bad = []
    for n in range(2, 9):
        iso = transitivity_report(isogonal_polygon(n, 1, 2))
        tox = transitivity_report(isotoxal_polygon(n, 1, 2))
        reg = transitivity_report(regular_polygon(n, 1))
        if not (iso.vertex_transitive and iso.edge_orbits == 2):
            bad.append(("isogonal", n))
        if not (tox.edge_transitive and tox.vertex_orbits == 2):
            bad.append(("isotoxal", n))
        if not (reg.vertex_transitive and reg.edge_transitive):
            bad.append(("regular", n))
    record(12, "isogonal / isotoxal / regular transitivity for n = 2..8", not bad, f"failures {bad}")


def test_13_pentagonal_dual_equator():
    d = dual_prism(5, 1, 0, 1).normalized()
    z = np.array(d.vertices)[:, 2]
    equator = [math.dist(d.vertices[i], d.vertices[j]) for i, j in d.edges if abs(z[i]) < 1e-12 and abs(z[j]) < 1e-12]
    lengths = distinct_lengths(d.edge_lengths())
    ok = len(equator) == 5 and all(abs(e - SQ2) < 1e-9 for e in equator)
    record(13, "pentagonal dipyramid equatorial edge sqrt2", ok,
           "edge report " + ", ".join(f"{x:.9f}" for x in lengths))


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
