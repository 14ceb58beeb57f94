"""Finite patches of the hexagon, octagon and decagon tilings."""

from .generators import (
    DECAGON_KINDS,
    OCTAGON_VARIANTS,
    bowtie,
    decagon_patch,
    hexagon_patch,
    isotoxal_hexagon_patch,
    octagon_square_patch,
)
from .graphene import BondGraph, graphene_graph
from .growth import TilingConflict, place_on_edge
from .model import Patch, PlacedTile, Prototype
from .probe import ProbeResult, translation_probe
from .validate import ValidationReport, configuration_key, validate_patch

__all__ = [
    "BondGraph",
    "DECAGON_KINDS",
    "OCTAGON_VARIANTS",
    "Patch",
    "PlacedTile",
    "ProbeResult",
    "Prototype",
    "TilingConflict",
    "ValidationReport",
    "bowtie",
    "configuration_key",
    "decagon_patch",
    "graphene_graph",
    "hexagon_patch",
    "isotoxal_hexagon_patch",
    "octagon_square_patch",
    "place_on_edge",
    "translation_probe",
    "validate_patch",
]
