"""Betti numbers, Taylor and Scarf complexes and Cohen-Macaulayness of monomial ideals."""

from .core import Monomial, MonomialIdeal, height, minimal_primes, polarize
from .parsing import format_ideal, parse_ideal
from .resolutions import oracle_betti, scarf_betti, taylor_complex

__version__ = "0.1.0"

__all__ = [
    "Monomial",
    "MonomialIdeal",
    "format_ideal",
    "height",
    "minimal_primes",
    "oracle_betti",
    "parse_ideal",
    "polarize",
    "scarf_betti",
    "taylor_complex",
]
