"""Lefschetz properties of Stanley-Reisner rings of balanced and (2,1)-balanced 2-spheres."""

from .complex import Complex2, ComplexError, is_sphere, f_vector, missing_triangles
from .coloring import proper_3_coloring, is_21_coloring
from .lefschetz import check_colored_slp, check_21_slp, check_theorem2

__all__ = [
    "Complex2",
    "ComplexError",
    "is_sphere",
    "f_vector",
    "missing_triangles",
    "proper_3_coloring",
    "is_21_coloring",
    "check_colored_slp",
    "check_21_slp",
    "check_theorem2",
]
