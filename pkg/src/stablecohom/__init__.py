"""Exact verification of Betti numbers and cohomology rings of degree-2 and degree-3
stable map spaces to projective space."""
from .exactpoly import (GradedRing, MultiPoly, NotDivisibleError, RingMismatchError,
                        collapse_even, exact_divide, expand_even, parse_poly, substitute,
                        sym_pair, to_text)
from .groebner import (GroebnerBasis, Ideal, MonomialOrder, buchberger, hilbert_series,
                       ideal_equal, krull_dimension, normal_form, quotient_vector_dimension)
from .series import RationalSeries, TPoly, expand_to, structural_checks
from .kirwan import quasimap_series, relations_d2, relations_d3
from .blowup import BlowupStep, Presentation, betti_blowdown, betti_blowup, presentation_blowup
from .pipeline import (VerificationError, VerificationReport, degree2_betti, degree3_betti,
                       run_suite)

__version__ = "0.1.0"

__all__ = [
    "GradedRing", "MultiPoly", "NotDivisibleError", "RingMismatchError", "collapse_even",
    "exact_divide", "expand_even", "parse_poly", "substitute", "sym_pair", "to_text",
    "GroebnerBasis", "Ideal", "MonomialOrder", "buchberger", "hilbert_series", "ideal_equal",
    "krull_dimension", "normal_form", "quotient_vector_dimension",
    "RationalSeries", "TPoly", "expand_to", "structural_checks",
    "quasimap_series", "relations_d2", "relations_d3",
    "BlowupStep", "Presentation", "betti_blowdown", "betti_blowup", "presentation_blowup",
    "VerificationError", "VerificationReport", "degree2_betti", "degree3_betti", "run_suite",
]
