"""Galois groups of polynomials of degree at most 5 over the rationals."""

from __future__ import annotations

__all__ = [
    "ClassificationUnknown",
    "GaloisClass",
    "QuinticMap",
    "classify_cycle_types",
    "cycle_type_samples",
    "galois_group",
    "galois_group_cubic",
    "galois_group_quadratic",
    "is_solvable_by_radicals",
    "quintic_map",
    "splitting_degree",
]

from galoiskit.galois.classify import (
    ClassificationUnknown,
    classify_cycle_types,
    galois_group,
    galois_group_cubic,
    galois_group_quadratic,
    is_solvable_by_radicals,
    splitting_degree,
)
from galoiskit.galois.grid import QuinticMap, quintic_map
from galoiskit.galois.sampling import cycle_type_samples
from galoiskit.types import GaloisClass
