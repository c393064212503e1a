"""Exact symbolic verification of bilinear Toda-molecule identities.

The package constructs tau functions as two-directional Wronskians over
exact Gaussian-rational Laurent polynomials and mechanically checks, as
zero-residual polynomial identities, the bilinear lattice equations, the
Ernst-system decomposition equations for Tomimatsu-Sato pairs, their
symmetry properties, closed-form cross-checks and the order-by-order
Laurent-coefficient systems.
"""

__version__ = "0.1.0"

from .gaussian import GaussianRational
from .laurent import LaurentPoly, Monomial, parse, serialize
from .operators import FOperator, apply_F, apply_F_weyl, hirota, hirota_dst
from .wronskian import SymMatrix, TauFamily, build_psi, determinant, wronskian_matrix

__all__ = [
    "__version__",
    "GaussianRational",
    "LaurentPoly",
    "Monomial",
    "parse",
    "serialize",
    "FOperator",
    "apply_F",
    "apply_F_weyl",
    "hirota",
    "hirota_dst",
    "SymMatrix",
    "TauFamily",
    "build_psi",
    "determinant",
    "wronskian_matrix",
]
