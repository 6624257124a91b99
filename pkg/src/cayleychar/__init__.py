"""Exact character tables of permutation groups and spectra of normal Cayley graphs."""

from .catalog import resolve_group
from .cyclotomic import Cyclotomic
from .dixon import CharacterTable, character_table, degree_multiset
from .errors import CayleyCharError, ComputationError, GroupTooLarge, InputError, VerificationError
from .permgroup import ConjugacyClass, PermGroup, Permutation, class_of, conjugacy_classes, parse_cycles
from .spectra import ConnectionSet, SpectrumReport, brute_force_spectrum, normal_cayley_spectrum
from .vanishing import classify_classes, verify_main_theorem, weight

__all__ = [
    "CayleyCharError", "CharacterTable", "ComputationError", "ConjugacyClass", "ConnectionSet",
    "Cyclotomic", "GroupTooLarge", "InputError", "PermGroup", "Permutation", "SpectrumReport",
    "VerificationError", "brute_force_spectrum", "character_table", "class_of", "classify_classes",
    "conjugacy_classes", "degree_multiset", "normal_cayley_spectrum", "parse_cycles", "resolve_group",
    "verify_main_theorem", "weight",
]
