"""SMILES handling: parsing, canonicalization, group decomposition."""

from .canonical import canonical_smiles
from .decompose import GroupPattern, decompose
from .parser import Atom, Bond, MolecularGraph, parse_smiles

__all__ = [
    "Atom",
    "Bond",
    "GroupPattern",
    "MolecularGraph",
    "canonical_smiles",
    "decompose",
    "parse_smiles",
]
