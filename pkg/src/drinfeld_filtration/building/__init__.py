"""Finite-level models of the building complexes over Z/p^n."""
from .homology import ChainComplexData, HomologyResult, complex_homology, exact_rank, order_complex, order_complex_homology
from .modules import FiniteModule, enumerate_submodules, howell_form, iter_submodules, module_ranks
from .posets import FlagPoset, beat_points, core, quillen_check
from .stalks import (ExtensionRing, RingLine, StalkResult, covering_free_modules, enumerate_lines,
                     quillen_certify, stalk_complex_homology, stalk_poset, tube_member, tube_member_bruteforce)
from .steinberg import gaussian_binomial, inclusion_exclusion_dim, partial_flags, steinberg_complex, steinberg_complex_homology

__all__ = [
    "ChainComplexData", "ExtensionRing", "FiniteModule", "FlagPoset", "HomologyResult", "RingLine",
    "StalkResult", "beat_points", "complex_homology", "core", "covering_free_modules", "enumerate_lines",
    "enumerate_submodules", "exact_rank", "gaussian_binomial", "howell_form", "inclusion_exclusion_dim", "iter_submodules",
    "module_ranks", "order_complex", "order_complex_homology", "partial_flags", "quillen_certify", "quillen_check",
    "stalk_complex_homology", "stalk_poset", "steinberg_complex", "steinberg_complex_homology",
    "tube_member", "tube_member_bruteforce",
]
