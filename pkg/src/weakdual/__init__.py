"""Weak dual equivalence toolkit: reduced words, standard Young and key
tableaux, involution families, and the Schur, Stanley, Schubert and key
polynomial expansions derived from them."""

from .foundations import BasisExpansion, Polynomial
from .bases import (
    key_poly,
    key_product,
    key_times_schur,
    schubert_key_expansion,
    schubert_poly,
    schur_poly,
    shuffle_product,
    skew_key_expansion,
    skew_key_poly,
    skew_schur_expansion,
    slide_product,
    stanley_F_expansion,
    stanley_schur_expansion,
)

__version__ = "0.1.0"

__all__ = [
    "BasisExpansion",
    "Polynomial",
    "key_poly",
    "key_product",
    "key_times_schur",
    "schubert_key_expansion",
    "schubert_poly",
    "schur_poly",
    "shuffle_product",
    "skew_key_expansion",
    "skew_key_poly",
    "skew_schur_expansion",
    "slide_product",
    "stanley_F_expansion",
    "stanley_schur_expansion",
]
