"""Homological stabilizer codes on graphs embedded in orientable surfaces."""

from .errors import DomainError, HomcodeError, Inadmissible, InputError
from .hsc import (
    FaceGenerators,
    HscCode,
    LabelSet,
    apply_label_transform,
    build_ktc,
    build_tcc,
    canonical_label_set,
    check_admissibility,
    classify,
    enumerate_label_classes,
    excitations,
    vertex_label_set,
)
from .lattices import export_dot, generate, read_map, write_map
from .pauli import AboveCap, CodeParams, PauliWord, commutes, logical_basis, min_distance, stabilizer_params, syndrome
from .surface import CombinatorialMap, build_map, cycle_cut_spaces, dual, euler_genus, face_coloring, medial

__version__ = "0.1.0"

__all__ = [
    "AboveCap",
    "CodeParams",
    "CombinatorialMap",
    "DomainError",
    "FaceGenerators",
    "HomcodeError",
    "HscCode",
    "Inadmissible",
    "InputError",
    "LabelSet",
    "PauliWord",
    "apply_label_transform",
    "build_ktc",
    "build_map",
    "build_tcc",
    "canonical_label_set",
    "check_admissibility",
    "classify",
    "commutes",
    "cycle_cut_spaces",
    "dual",
    "enumerate_label_classes",
    "euler_genus",
    "excitations",
    "export_dot",
    "face_coloring",
    "generate",
    "logical_basis",
    "medial",
    "min_distance",
    "read_map",
    "stabilizer_params",
    "syndrome",
    "vertex_label_set",
    "write_map",
]
