"""Grothendieck and Schubert polynomials of permutations, computed by
divided differences and by Rothe tableau formulas."""

from .balanced import Labeling, counterexample_labeling, enumerate_csbl, fgrs_schubert, is_balanced, is_csbl
from .complex import TableauComplex, build_rothe_complex, faces, k_poly_definition
from .errors import (
    GroundSetTooLarge,
    InvalidPermutation,
    MethodNotApplicable,
    NotThreeTwoOneAvoiding,
    RotheError,
)
from .oracle import double_grothendieck, double_schubert, single_grothendieck, single_schubert
from .perm import Permutation, rothe_diagram, skew_shape_321
from .poly import Polynomial, Ring, divided_difference, isobaric
from .tableaux import (
    SetValuedTableau,
    enumerate_lsvrt,
    enumerate_srt,
    enumerate_svrt,
    formula_matsumura_321,
    formula_theorem11,
    formula_theorem14_limit,
    formula_theorem14_srt,
    is_lsvrt,
    is_srt,
    is_svrt,
)

__version__ = "0.1.0"
