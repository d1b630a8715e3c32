"""Saddle-focus singularities of integrable Hamiltonian systems with three degrees of freedom.

Atoms are f-graphs (:mod:`sfatlas.atom`), focus factors are cyclic chains
(:mod:`sfatlas.focus`), products and their invariants live in
:mod:`sfatlas.model`, and :mod:`sfatlas.classify` builds complete catalogs.
"""

from .atom import (
    FGraph,
    boundary_circles,
    canonical_form,
    enumerate_atoms,
    extended_symmetries,
    genus,
    identify,
    quotient_atom,
    standard_series,
    symmetry_group,
)
from .classify import Catalog, Verdict, classify, decide_equivalence, render
from .focus import FocusAutomorphism, shift_automorphism
from .model import (
    AlmostDirectProduct,
    SimpleMinimalModel,
    build,
    chain_invariant,
    fingerprint,
    reduce,
    torus_counts,
)
from .permgroup import PermutationGroup, generate, iso_type

__version__ = "0.1.0"

__all__ = [
    "FGraph",
    "boundary_circles",
    "canonical_form",
    "enumerate_atoms",
    "extended_symmetries",
    "genus",
    "identify",
    "quotient_atom",
    "standard_series",
    "symmetry_group",
    "Catalog",
    "Verdict",
    "classify",
    "decide_equivalence",
    "render",
    "FocusAutomorphism",
    "shift_automorphism",
    "AlmostDirectProduct",
    "SimpleMinimalModel",
    "build",
    "chain_invariant",
    "fingerprint",
    "reduce",
    "torus_counts",
    "PermutationGroup",
    "generate",
    "iso_type",
]
