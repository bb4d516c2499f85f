"""Quiver polynomials for equioriented type A quivers.

Four independent formulas (Schubert ratio, pipe dreams, lacing
components, peelable tableaux) and a harness that cross-checks them.
"""

from .engine import Formula, QuiverResult, compute, pipe_formula, ratio_formula, verify_all
from .polyring import Polynomial, Variable
from .quivercore import RankArray, codim, minimal_lacings, zelevinsky

__all__ = [
    "Formula",
    "Polynomial",
    "QuiverResult",
    "RankArray",
    "Variable",
    "codim",
    "compute",
    "minimal_lacings",
    "pipe_formula",
    "ratio_formula",
    "verify_all",
    "zelevinsky",
]
__version__ = "0.1.0"
