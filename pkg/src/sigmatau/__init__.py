"""Hamilton cycles, paths and cycle covers in the directed sigma-tau Cayley graph."""

from .cycles import CycleCover, cover_from_family, y_cover_family, y_cycle_family
from .generators import CycleGenerator, PathGenerator, cycle_generator, path_generator
from .perms import RotClass, apply_sigma, apply_tau, apply_word, canonical
from .rotation import RotationSystem, face_count, faces, reduce, wheeel
from .rules import RuleKind, iterate, path_endpoints
from .wilf import wilf, wilf_induced

__version__ = "0.1.0"

__all__ = [
    "CycleCover",
    "CycleGenerator",
    "PathGenerator",
    "RotClass",
    "RotationSystem",
    "RuleKind",
    "apply_sigma",
    "apply_tau",
    "apply_word",
    "canonical",
    "cover_from_family",
    "cycle_generator",
    "face_count",
    "faces",
    "iterate",
    "path_endpoints",
    "path_generator",
    "reduce",
    "wheeel",
    "wilf",
    "wilf_induced",
    "y_cover_family",
    "y_cycle_family",
]
