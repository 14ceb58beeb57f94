"""Deterministic SVG, OBJ and JSON writers.

All numbers are written fixed-point at a chosen precision so identical inputs
give byte-identical files.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from .polygon import Polygon, polygon_metrics, transitivity_report
from .prism import Polyhedron, classify_faces, distinct_lengths, planarity_deviation
from .tiling import Patch, ValidationReport, validate_patch

FORMATS = ("svg", "obj", "json")


@dataclass(frozen=True)
class RenderSpec:
    output_path: str | None = None
    format: str = "json"
    scale: float = 1.0
    precision: int = 6

    def __post_init__(self):
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}")
        if not 1 <= self.precision <= 12:
            raise ValueError("precision must be in [1, 12]")
        if not (self.scale > 0 and math.isfinite(self.scale)):
            raise ValueError("scale must be positive")


def fixed(x: float, precision: int) -> str:
    s = f"{x:.{precision}f}"
    if s.lstrip("-").strip("0.") == "":
        s = s.lstrip("-")  # no negative zero
    return s


def _write(text: str, spec: RenderSpec) -> str:
    if spec.output_path:
        Path(spec.output_path).write_text(text, encoding="utf-8", newline="\n")
    return text


# --- SVG -----------------------------------------------------------------

_FILL = {
    "regular": "#f4d35e",
    "isogonal": "#5fa8d3",
    "isotoxal": "#ee964b",
    "square": "#9bc53d",
    "triangle": "#c3423f",
    "bowtie": "#9d79bc",
}


def _outlines(item):
    if isinstance(item, Polyhedron):
        raise TypeError("SVG output takes 2D polygons or patches, not polyhedra")
    if isinstance(item, Polygon):
        return [(item.kind, item.vertices)], []
    if isinstance(item, Patch):
        return [(t.kind, t.vertices) for t in item.tiles], list(item.declared_holes)
    raise TypeError(f"cannot render {type(item).__name__} as SVG")


def emit_svg(items, spec: RenderSpec) -> str:
    """One <polygon> per polygon or tile, in input order; declared holes become dashed paths."""
    p = spec.precision
    shapes, holes = [], []
    for item in items:
        s, h = _outlines(item)
        shapes += s
        holes += h
    pts = [(x * spec.scale, -y * spec.scale) for _, vs in shapes for x, y in vs]
    pts += [(x * spec.scale, -y * spec.scale) for vs in holes for x, y in vs]
    if pts:
        xs, ys = zip(*pts)
        w, h = max(xs) - min(xs), max(ys) - min(ys)
        mx, my = 0.05 * (w or 1.0), 0.05 * (h or 1.0)
        box = (min(xs) - mx, min(ys) - my, w + 2 * mx, h + 2 * my)
    else:
        box = (0.0, 0.0, 1.0, 1.0)
    stroke = fixed(0.01 * max(box[2], box[3]), p)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="'
        + " ".join(fixed(v, p) for v in box) + '">',
    ]
    for kind, vs in shapes:
        coords = " ".join(f"{fixed(x * spec.scale, p)},{fixed(-y * spec.scale, p)}" for x, y in vs)
        lines.append(f'  <polygon class="{kind}" points="{coords}" fill="{_FILL.get(kind, "#cccccc")}" '
                     f'stroke="#222222" stroke-width="{stroke}"/>')
    for vs in holes:
        d = " ".join(f"{fixed(x * spec.scale, p)},{fixed(-y * spec.scale, p)}" for x, y in vs)
        lines.append(f'  <path class="hole" d="M {d} Z" fill="none" stroke="#888888" '
                     f'stroke-dasharray="{stroke}" stroke-width="{stroke}"/>')
    lines.append("</svg>")
    return _write("\n".join(lines) + "\n", spec)


# --- OBJ -----------------------------------------------------------------

def emit_obj(solid: Polyhedron, spec: RenderSpec) -> str:
    if not isinstance(solid, Polyhedron):
        raise TypeError("OBJ output needs a polyhedron")
    p = spec.precision
    lines = [f"# {solid.kind} n={solid.n}"]
    for v in solid.vertices:
        lines.append("v " + " ".join(fixed(c * spec.scale, p) for c in v))
    for f in solid.faces:
        lines.append("f " + " ".join(str(i + 1) for i in f))
    return _write("\n".join(lines) + "\n", spec)


# --- JSON ----------------------------------------------------------------

def _dump(obj, p: int, indent: int = 0) -> str:
    pad = "  " * indent
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return fixed(obj, p) if math.isfinite(obj) else "null"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        inner = [f'{pad}  {_dump(str(k), p)}: {_dump(v, p, indent + 1)}' for k, v in obj.items()]
        return "{\n" + ",\n".join(inner) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if all(not isinstance(x, (dict, list, tuple)) for x in obj):
            return "[" + ", ".join(_dump(x, p) for x in obj) + "]"
        inner = [pad + "  " + _dump(x, p, indent + 1) for x in obj]
        return "[\n" + ",\n".join(inner) + "\n" + pad + "]"
    if hasattr(obj, "item"):  # numpy scalar
        return _dump(obj.item(), p, indent)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _record(kind, n, params, vertices=(), edges=(), faces=(), metrics=None, validation=None):
    a = list(params) + [None] * (3 - len(params))
    return {
        "kind": kind,
        "n": n,
        "params": {"a1": a[0], "a2": a[1], "a3": a[2]},
        "vertices": [[float(c) for c in v] for v in vertices],
        "edges": [list(e) for e in edges],
        "faces": [list(f) for f in faces],
        "metrics": metrics or {},
        "validation": validation or {},
    }


def polygon_record(poly: Polygon) -> dict:
    m = len(poly.vertices)
    metrics = polygon_metrics(poly).as_dict()
    tr = transitivity_report(poly)
    metrics["vertex_orbits"] = tr.vertex_orbits
    metrics["edge_orbits"] = tr.edge_orbits
    metrics["symmetry_order"] = tr.group_order
    if poly.labels:
        metrics["vertex_classes"] = list(poly.labels)
    return _record(poly.kind, poly.n, (poly.a1, poly.a2), poly.vertices,
                   [(i, (i + 1) % m) for i in range(m)], [list(range(m))], metrics)


def polyhedron_record(solid: Polyhedron) -> dict:
    faces = classify_faces(solid)
    lengths = distinct_lengths(solid.edge_lengths())
    dev = planarity_deviation(solid)
    chi = solid.euler_characteristic()
    metrics = {
        "vertex_count": len(solid.vertices),
        "edge_count": len(solid.edges),
        "face_count": len(solid.faces),
        "euler_characteristic": chi,
        "edge_lengths": lengths,
        "face_classes": dict(sorted(Counter(f.label for f in faces).items())),
        "planarity_deviation": dev,
    }
    if solid.r2 is not None:
        metrics["reciprocation_radius_squared"] = solid.r2
        metrics["scale"] = solid.scale
    validation = {
        "euler": "pass" if chi == 2 else "fail",
        "planarity": "pass" if dev <= 1e-9 else "fail",
    }
    return _record(solid.kind, solid.n, solid.params, solid.vertices, solid.edges, solid.faces,
                   metrics, validation)


_PATCH_N = {"hexagon": 3, "isotoxal-hexagon": 3, "octagon-square": 4, "decagon": 5}


def patch_record(patch: Patch, report: ValidationReport | None = None) -> dict:
    if report is None:
        report = validate_patch(patch)
    prm = patch.params
    faces = [patch.outline_vids[t.id] for t in patch.tiles]
    metrics = {
        "tiles": len(patch.tiles),
        "tile_kinds": dict(sorted(Counter(t.kind for t in patch.tiles).items())),
        "holes": len(patch.declared_holes),
    }
    for key in ("rings", "variant", "kind", "lambda"):
        if key in prm:
            metrics[key] = prm[key]
    return _record(patch.kind, _PATCH_N.get(patch.kind), (prm.get("a1"), prm.get("a2")),
                   patch.points, sorted(patch.edge_owners), faces, metrics, report.as_dict())


def to_record(result) -> dict:
    if isinstance(result, dict):
        return result
    if isinstance(result, Polygon):
        return polygon_record(result)
    if isinstance(result, Polyhedron):
        return polyhedron_record(result)
    if isinstance(result, Patch):
        return patch_record(result)
    raise TypeError(f"no JSON schema for {type(result).__name__}")


def emit_json(result, spec: RenderSpec) -> str:
    """Fixed key order: kind, n, params, vertices, edges, faces, metrics, validation."""
    return _write(_dump(to_record(result), spec.precision) + "\n", spec)
