"""Exact Farey, Gauss and multidimensional Gauss maps on projective simplexes."""

from .exactnum import NFElement, NumberField
from .projective import ProjPoint, canonicalize, point

__version__ = "0.1.0"
