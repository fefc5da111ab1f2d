"""Exact octonionic and Clifford function classes.

Octonion and Cl(0,7) arithmetic over the rationals, the triality bridge between
them, Cauchy-Riemann type operators on polynomial maps, and exact dimensions of
the homogeneous solution spaces.
"""

from .algebra import Octonion, Quaternion, oct_mul
from .clifford import Multivector, constants, mv_mul
from .operators import D_left, D_right, ck_extension, classify, spinor_tests
from .polyfun import Poly, PolyMap, parse, render
from .regspace import SystemId, solution_dim

__all__ = [
    "D_left",
    "D_right",
    "Multivector",
    "Octonion",
    "Poly",
    "PolyMap",
    "Quaternion",
    "SystemId",
    "ck_extension",
    "classify",
    "constants",
    "mv_mul",
    "oct_mul",
    "parse",
    "render",
    "solution_dim",
    "spinor_tests",
]

__version__ = "0.1.0"
