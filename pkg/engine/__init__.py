"""Parastab Engine Module.

Exact-arithmetic core: root data, structure constants, equivariant
subbundles of T(G/P) and Schubert calculus.
"""

from engine.chevalley import CharMode, min_admissible_char
from engine.parabolic import ParabolicData, SubmoduleCandidate, enumerate_submodules, tangent_roots
from engine.rootsys import RootSystem, SimpleType, Weight, build_root_system
from engine.schubert import ChowBasis, Polarization, build_chow_basis, degree, slope

__all__ = [
    "CharMode",
    "min_admissible_char",
    "ParabolicData",
    "SubmoduleCandidate",
    "enumerate_submodules",
    "tangent_roots",
    "RootSystem",
    "SimpleType",
    "Weight",
    "build_root_system",
    "ChowBasis",
    "Polarization",
    "build_chow_basis",
    "degree",
    "slope",
]
