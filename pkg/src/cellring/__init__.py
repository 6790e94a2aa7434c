"""Exact computations in the a = 6 two-sided cell of the extended affine
Weyl group of type B3~ and its based ring J_c."""

from .laurent import LaurentPoly
from .weyl import TAU, WeylElement, evaluate, length, reduced_word

__version__ = "0.1.0"

__all__ = ["LaurentPoly", "TAU", "WeylElement", "evaluate", "length", "reduced_word", "__version__"]
