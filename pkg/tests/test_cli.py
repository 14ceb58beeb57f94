import io
import json
import re
import xml.etree.ElementTree as ET

import pytest

from golden_cases import CASES, GOLDEN_DIR, render
from quasiregular.cli import run
from quasiregular.emit import RenderSpec, emit_json, emit_obj, emit_svg, fixed
from quasiregular.polygon import isotoxal_polygon, regular_polygon
from quasiregular.prism import build_prism, dual_prism
from quasiregular.tiling import decagon_patch, hexagon_patch

SVG_NS = "{http://www.w3.org/2000/svg}"


def call(cmd):
    out, err = io.StringIO(), io.StringIO()
    code = run(cmd.split(), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden_outputs(name):
    code, text = render(CASES[name])
    assert code == 0
    assert text == (GOLDEN_DIR / name).read_text(encoding="utf-8")


def test_polygon_json_schema():
    code, out, err = call("polygon --n 3 --a1 1 --a2 2 --format json")
    assert code == 0 and err == ""
    data = json.loads(out)
    assert list(data) == ["kind", "n", "params", "vertices", "edges", "faces", "metrics", "validation"]
    assert list(data["params"]) == ["a1", "a2", "a3"]
    assert data["kind"] == "isogonal" and len(data["vertices"]) == 6


def test_isotoxal_lambda_printed_fixed_point():
    text = emit_json(isotoxal_polygon(3, 1, 2), RenderSpec())
    assert re.search(r'"lambda": 0\.800000\b', text)


def test_regular_decagon_has_ten_vertices():
    data = json.loads(emit_json(regular_polygon(5, 1), RenderSpec()))
    assert len(data["vertices"]) == 10


@pytest.mark.parametrize("precision", [1, 3, 6, 9, 12])
def test_json_round_trip(precision):
    poly = isotoxal_polygon(4, 1.3, 0.7)
    data = json.loads(emit_json(poly, RenderSpec(precision=precision)))
    for got, want in zip(data["vertices"], poly.vertices):
        assert max(abs(g - w) for g, w in zip(got, want)) <= 10.0 ** (-precision)


def test_passing_patch_validation_block():
    code, out, _ = call("tiling --variant hexagon --a1 1 --a2 2 --rings 2")
    assert code == 0
    v = json.loads(out)["validation"]
    assert v["overlap"] == "pass" and v["angle_sum"] == "pass" and v["edge_match"] == "pass"


def test_group_check():
    assert call("group-check --n 3")[:2] == (0, "aut-order 144\n")
    code, out, _ = call("group-check --n 5 --format json")
    assert code == 0 and json.loads(out)["metrics"]["aut_order"] == 400


@pytest.mark.parametrize("cmd", [
    "polygon --n 1 --a1 1 --a2 2",
    "polygon --n 3 --a1 -1 --a2 2",
    "frobnicate",
    "polygon --bogus 1",
    "polygon --format obj",
    "prism --format svg",
    "tiling --variant penrose",
    "polygon --precision 0",
    "group-check --n 0",
    "",
])
def test_usage_errors_exit_2(cmd):
    code, out, err = call(cmd)
    assert code == 2
    assert out == ""
    assert err


def test_tiling_validation_failure_exits_1(monkeypatch):
    import quasiregular.cli as cli

    class Failing:
        passed = False

        def as_dict(self):
            return {"overlap": "fail"}

    monkeypatch.setattr(cli, "validate_patch", lambda p: Failing())
    monkeypatch.setattr(cli, "patch_record", lambda p, r: {"kind": "hexagon"})
    code, out, err = call("tiling --variant hexagon --a1 1 --a2 2 --rings 1")
    assert code == 1
    assert "validation failed" in err


def test_out_file(tmp_path):
    target = tmp_path / "cube.obj"
    code, out, _ = call(f"prism --n 4 --a1 1 --a2 0 --a3 1 --format obj --out {target}")
    assert code == 0 and out == ""
    lines = target.read_text().splitlines()
    assert sum(l.startswith("v ") for l in lines) == 8
    assert sum(l.startswith("f ") for l in lines) == 6


def test_obj_counts():
    hexdip = emit_obj(dual_prism(3, 1, 1, 1), RenderSpec(format="obj"))
    assert hexdip.count("\nv ") == 8 and hexdip.count("\nf ") == 12
    tri = emit_obj(build_prism(3, 1, 0, 1), RenderSpec(format="obj"))
    assert tri.count("\nv ") == 6 and tri.count("\nf ") == 5
    faces = [list(map(int, l.split()[1:])) for l in tri.splitlines() if l.startswith("f ")]
    assert min(min(f) for f in faces) == 1


def test_svg_regular_hexagon():
    root = ET.fromstring(emit_svg([regular_polygon(3, 1)], RenderSpec(format="svg")))
    polys = root.findall(f"{SVG_NS}polygon")
    assert len(polys) == 1
    assert len(polys[0].get("points").split()) == 6


def test_svg_patch_one_element_per_tile():
    patch = hexagon_patch(1, 2, 1)
    root = ET.fromstring(emit_svg([patch], RenderSpec(format="svg")))
    assert len(root.findall(f"{SVG_NS}polygon")) == len(patch.tiles)


def test_svg_holes_are_not_polygons():
    patch = decagon_patch("isogonal-exemplar", 1, 2)
    root = ET.fromstring(emit_svg([patch], RenderSpec(format="svg")))
    assert len(root.findall(f"{SVG_NS}polygon")) == len(patch.tiles)
    assert len(root.findall(f"{SVG_NS}path")) == 5


def test_svg_empty_and_3d():
    root = ET.fromstring(emit_svg([], RenderSpec(format="svg")))
    assert root.tag == f"{SVG_NS}svg" and len(root) == 0
    with pytest.raises(TypeError):
        emit_svg([build_prism(3, 1, 1, 1)], RenderSpec(format="svg"))


def test_svg_y_axis_flipped_and_viewbox_margin():
    text = emit_svg([regular_polygon(3, 1)], RenderSpec(format="svg", scale=1.0))
    root = ET.fromstring(text)
    x, y, w, h = map(float, root.get("viewBox").split())
    pts = [tuple(map(float, p.split(","))) for p in root.find(f"{SVG_NS}polygon").get("points").split()]
    xs, ys = zip(*pts)
    assert x == pytest.approx(min(xs) - 0.05 * (max(xs) - min(xs)), abs=1e-6)
    assert w == pytest.approx(1.1 * (max(xs) - min(xs)), abs=1e-6)
    # the first vertex has positive y in math coordinates, so a negative SVG y
    assert regular_polygon(3, 1).vertices[1][1] > 0 and pts[1][1] < 0


def test_emitters_are_deterministic():
    spec = RenderSpec(format="svg")
    assert emit_svg([hexagon_patch(1, 2, 2)], spec) == emit_svg([hexagon_patch(1, 2, 2)], spec)


def test_render_spec_validation():
    with pytest.raises(ValueError):
        RenderSpec(precision=13)
    with pytest.raises(ValueError):
        RenderSpec(scale=0)
    with pytest.raises(ValueError):
        RenderSpec(format="png")


def test_fixed_has_no_negative_zero():
    assert fixed(-1e-12, 6) == "0.000000"
    assert fixed(-0.5, 1) == "-0.5"


def test_help_exits_zero():
    assert call("--help")[0] == 0
