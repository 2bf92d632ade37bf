"""dimerlab: exact combinatorics of dimer models on surfaces.

Dimer quivers, perfect matchings and matching polygons, zigzag consistency,
mirror duality, canonical (weak) Jacobi-algebra elements, Gtl angle algebras,
matrix factorizations of the quiver potential, tropical stability data and
universal-localization reductions.  All arithmetic is exact.
"""

from .dimer import (Dimer, DimerError, parse_dimer, format_dimer,
                    parse_weights, parse_representation, surface_invariants)
from .homology import homology, HomologyData, pairing
from .matching import enumerate_matchings, matching_polygon, matching_point, MatchingPolygon
from .zigzag import zigzag_cycles, is_consistent, ZigzagCycle, ConsistencyReport

__all__ = [
    "Dimer", "DimerError", "parse_dimer", "format_dimer",
    "parse_weights", "parse_representation", "surface_invariants",
    "homology", "HomologyData", "pairing",
    "enumerate_matchings", "matching_polygon", "matching_point", "MatchingPolygon",
    "zigzag_cycles", "is_consistent", "ZigzagCycle", "ConsistencyReport",
]

__version__ = "0.1.0"
