"""Integral cohomology of X^n, Sym^d X and Quot schemes on a curve X, with the
bookkeeping behind their Brauer groups."""

from .curve import CohomClass, DimensionError, GenusContext, cup, integrate, permute
from .errors import ResourceLimitError, VerificationError
from .polynomial import PoincarePolynomial
from .quot import poincare_quot
from .symmetric import invariant_rank, sym_betti

__version__ = "0.1.0"

__all__ = [
    "CohomClass",
    "DimensionError",
    "GenusContext",
    "PoincarePolynomial",
    "ResourceLimitError",
    "VerificationError",
    "cup",
    "integrate",
    "invariant_rank",
    "permute",
    "poincare_quot",
    "sym_betti",
]
