import math
from collections import Counter

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import point_set_equal, polar_dual_vertices
from quasiregular.coxeter import build_system
from quasiregular.prism import (
    build_prism,
    classify_faces,
    distinct_lengths,
    dual_prism,
    edge_face_counts,
    planarity_deviation,
)

SQ2 = math.sqrt(2)

PARAM_CLASSES = [(1, 0, 1), (0, 1, 1), (1, 1, 1), (1, 2, 1), (2, 1, 0.5), (1, 1, 3)]


def wvec(n, *coeffs):
    sys = build_system(n, 3)
    return np.array(sys.weight(coeffs).point)


def cases(params_list):
    # n = 2 with a zero cap parameter has a zero-area cap and is rejected
    return [(n, p) for n in range(2, 9) for p in params_list if not (n == 2 and 0 in p[:2])]


@pytest.mark.parametrize("n,params", cases(PARAM_CLASSES))
def test_euler_and_closure(n, params):
    for solid in (build_prism(n, *params), dual_prism(n, *params)):
        assert solid.euler_characteristic() == 2
        assert set(edge_face_counts(solid).values()) == {2}
        assert planarity_deviation(solid) < 1e-9


@pytest.mark.parametrize("n,params", cases([(1, 2, 1), (1, 0, 1), (1, 1, 2)]))
def test_dual_vertices_match_convex_hull_reciprocation(n, params):
    prism = build_prism(n, *params)
    dual = dual_prism(n, *params)
    assert point_set_equal(polar_dual_vertices(np.array(prism.vertices), dual.r2), dual.vertices)


def test_triangular_prism_vertices():
    p = build_prism(3, 1, 0, 1)
    w1, w2, w3 = wvec(3, 1, 0, 0), wvec(3, 0, 1, 0), wvec(3, 0, 0, 1)
    expected = [s * w3 + v for s in (1, -1) for v in (w1, w2 - w1, -w2)]
    assert point_set_equal(expected, p.vertices)
    assert len(p.faces) == 5


def test_triangular_dual():
    d = dual_prism(3, 1, 0, 1).normalized()
    w1, w2, w3 = wvec(3, 1, 0, 0), wvec(3, 0, 1, 0), wvec(3, 0, 0, 1)
    expected = [w2, w1 - w2, -w1, 2 / 3 * w3, -2 / 3 * w3]
    assert point_set_equal(expected, d.vertices)
    lengths = distinct_lengths(d.edge_lengths())
    assert np.allclose(lengths, [math.sqrt(8 / 9), SQ2], atol=1e-9)
    assert Counter(f.label for f in classify_faces(d)) == {"isosceles": 6}


def test_hexagonal_dual():
    d = dual_prism(3, 1, 1, 1).normalized()
    w1, w2, w3 = wvec(3, 1, 0, 0), wvec(3, 0, 1, 0), wvec(3, 0, 0, 1)
    expected = [s * v for s in (1, -1) for v in (w1, w2, w2 - w1, 2 * w3)]
    assert point_set_equal(expected, d.vertices)
    lengths = distinct_lengths(d.edge_lengths())
    assert np.allclose(lengths, [math.sqrt(2 / 3), math.sqrt(8 / 3)], atol=1e-9)


def test_cube_to_octahedron():
    cube = build_prism(4, 1, 0, 1)
    assert cube.kind == "cube"
    assert np.allclose(cube.edge_lengths(), SQ2)
    d = dual_prism(4, 1, 0, 1)
    assert d.kind == "octahedron"
    w1, w2, w3 = wvec(4, 1, 0, 0), wvec(4, 0, 1, 0), wvec(4, 0, 0, 1)
    expected = [s * v for s in (1, -1) for v in (w2, -w2 + SQ2 * w1, SQ2 * w3)]
    assert point_set_equal(expected, d.normalized().vertices)
    assert np.allclose(d.edge_lengths(), d.edge_lengths()[0])


@pytest.mark.parametrize("params,label", [((1, 2, 3), "scalene"), ((1, 1, 3), "isosceles")])
def test_n2_dual_face_types(params, label):
    d = dual_prism(2, *params)
    assert {f.label for f in classify_faces(d)} == {label}
    kinds = build_prism(2, *params).kind
    assert kinds == "rectangular-box"


def test_pentagonal_prisms_related_by_36_degrees():
    a = np.array(build_prism(5, 1, 0, 1).vertices)
    b = np.array(build_prism(5, 0, 1, 1).vertices)
    t = math.radians(36)
    rot = np.array([[math.cos(t), -math.sin(t), 0], [math.sin(t), math.cos(t), 0], [0, 0, 1]])
    assert point_set_equal(a @ rot.T, b) or point_set_equal(a @ rot, b)


def test_pentagonal_dual_equator():
    d = dual_prism(5, 1, 0, 1).normalized()
    z = np.array(d.vertices)[:, 2]
    equator = [(i, j) for i, j in d.edges if abs(z[i]) < 1e-12 and abs(z[j]) < 1e-12]
    assert len(equator) == 5
    for i, j in equator:
        assert math.isclose(math.dist(d.vertices[i], d.vertices[j]), SQ2, abs_tol=1e-9)


@given(st.integers(3, 9), st.floats(0.1, 3), st.floats(0.1, 3), st.floats(0.1, 3))
def test_prism_face_classes(n, a1, a2, a3):
    p = build_prism(n, a1, a2, a3)
    labels = Counter(f.label for f in classify_faces(p, 1e-7))
    assert labels["square"] + labels["rectangle"] == 2 * n
    assert len(p.vertices) == 4 * n


def test_bad_parameters():
    with pytest.raises(ValueError):
        build_prism(3, 1, 1, 0)
    with pytest.raises(ValueError):
        build_prism(3, 0, 0, 1)
    with pytest.raises(ValueError):
        build_prism(2, 1, 0, 1)
    with pytest.raises(ValueError):
        build_prism(1, 1, 1, 1)
