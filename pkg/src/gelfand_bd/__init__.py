"""Insertion algorithms, Gelfand Hecke modules and W-graphs for signed permutations.

Modules: ``signed`` (groups B and D), ``tableaux``, ``insertion``,
``equivalence`` (plactic and admissible relations), ``laurent`` and ``hecke``
(modules and canonical bases), ``wgraph``, ``verify`` and ``cli``.
"""

from .hecke import CanonicalBasis, GelfandModule, canonical_basis
from .insertion import P_B, P_Bprime, P_D, Q_D, bitableau_correspondence, domino_correspondence
from .laurent import LaurentPoly
from .signed import CoxType, SignedPerm, length
from .tableaux import Bitableau, DominoTableau, Partition, StandardTableau
from .wgraph import WGraph, build_graph, cells, molecules

__version__ = "0.1.0"

__all__ = [
    "Bitableau", "CanonicalBasis", "CoxType", "DominoTableau", "GelfandModule", "LaurentPoly",
    "P_B", "P_Bprime", "P_D", "Partition", "Q_D", "SignedPerm", "StandardTableau", "WGraph",
    "bitableau_correspondence", "build_graph", "canonical_basis", "cells", "domino_correspondence",
    "length", "molecules",
]
