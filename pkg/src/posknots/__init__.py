"""Knots carried by positive braided templates and their prime factors."""

from .braid import (
    BraidWord,
    ClosureInfo,
    Permutation,
    canonical_rotation,
    closure_info,
    genus_positive,
    half_twist_word,
    parse_braid,
    positive_sort_braid,
)
from .factoring import Factorization, SplitPoint, cyclic_decomposition, factorize
from .invariants import alexander, is_reducible_diagram
from .laurent import LaurentPoly
from .orbits import OrbitRecord, OrbitWord, census, enumerate_orbits, orbit_braid
from .template import Template, TemplateStats, load_template, parse_template, template_stats

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "ClosureInfo",
    "Permutation",
    "canonical_rotation",
    "closure_info",
    "genus_positive",
    "half_twist_word",
    "parse_braid",
    "positive_sort_braid",
    "Factorization",
    "SplitPoint",
    "cyclic_decomposition",
    "factorize",
    "alexander",
    "is_reducible_diagram",
    "LaurentPoly",
    "OrbitRecord",
    "OrbitWord",
    "census",
    "enumerate_orbits",
    "orbit_braid",
    "Template",
    "TemplateStats",
    "load_template",
    "parse_template",
    "template_stats",
]
