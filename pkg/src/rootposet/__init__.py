"""Root posets, abelian ideals and amazing roots of irreducible root systems."""

from __future__ import annotations

from .amazing import amazing_roots, is_amazing, primitive_bijection, primitive_roots
from .ideals import commutative_roots, enumerate_abelian_ideals, heisenberg_set
from .poset import FalsificationError, RootSet, join
from .rootsys import RankedType, RootSystem, RootSystemError, get_root_system

__version__ = "0.1.0"

__all__ = [
    "FalsificationError",
    "RankedType",
    "RootSet",
    "RootSystem",
    "RootSystemError",
    "amazing_roots",
    "commutative_roots",
    "enumerate_abelian_ideals",
    "get_root_system",
    "heisenberg_set",
    "is_amazing",
    "join",
    "primitive_bijection",
    "primitive_roots",
]
