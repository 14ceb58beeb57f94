"""Quasi-regular polygons, prisms and plane tilings from dihedral Coxeter groups in quaternion form."""

from .coxeter import CoxeterSystem, WeightVector, build_system, orbit, reflect
from .polygon import (
    Polygon,
    dual_scale,
    isogonal_polygon,
    isotoxal_polygon,
    polygon_metrics,
    regular_polygon,
    transitivity_report,
)
from .prism import Polyhedron, build_prism, dual_prism
from .quat import PairTransform, Quaternion, aut_group_order, dicyclic_root_system

__version__ = "0.1.0"

__all__ = [
    "CoxeterSystem",
    "PairTransform",
    "Polygon",
    "Polyhedron",
    "Quaternion",
    "WeightVector",
    "aut_group_order",
    "build_prism",
    "build_system",
    "dicyclic_root_system",
    "dual_prism",
    "dual_scale",
    "isogonal_polygon",
    "isotoxal_polygon",
    "orbit",
    "polygon_metrics",
    "reflect",
    "regular_polygon",
    "transitivity_report",
]
