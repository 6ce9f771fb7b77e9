"""Constructive Hamiltonian paths in wheel and whirl base-cobase graphs."""

from __future__ import annotations

from .cube import GREEN, RED, CallLog, PrimitiveFailure, SubCube, color, cube_cover
from .lemmas import lemma_36_plus, lemma_43_plus
from .primitives import (
    PRIMITIVES,
    PathCover,
    PreconditionError,
    primitive,
    random_instance,
)
from .stitched import ConstructionError, ham_path, ham_path_wheel, ham_path_whirl
from .verify import (
    cover_is_valid,
    cube_cover_problems,
    model_path_is_valid,
    model_path_problems,
)

__all__ = [
    "GREEN",
    "PRIMITIVES",
    "RED",
    "CallLog",
    "ConstructionError",
    "PathCover",
    "PreconditionError",
    "PrimitiveFailure",
    "SubCube",
    "color",
    "cover_is_valid",
    "cube_cover",
    "cube_cover_problems",
    "ham_path",
    "ham_path_wheel",
    "ham_path_whirl",
    "lemma_36_plus",
    "lemma_43_plus",
    "model_path_is_valid",
    "model_path_problems",
    "primitive",
    "random_instance",
]
