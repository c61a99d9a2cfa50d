"""Gamma-vectors of barycentric subdivisions and their balanced realizations."""

from .complex import (
    ColoredComplex, SimplicialComplex, barycentric_subdivision, f_vector, from_facets,
    h_vector, verify_coloring,
)
from .constructions import (
    balanced_h_witness, ballot_complex, g_witness, gamma_hat_complex, h_witness,
    theorem_bary_witness, verify_gineq,
)
from .errors import SdGammaError, TheoremRefuted
from .eulerian import gamma_nj, gamma_sd_from_h, h_sd_from_h, table_by_recurrence
from .ffk import is_ffk, rank, unrank
from .goodness import goodness_certificate, verify_certificate
from .transforms import CountVector, IntPolynomial, gamma_from_symmetric

__version__ = "0.1.0"

__all__ = [
    "ColoredComplex", "SimplicialComplex", "barycentric_subdivision", "f_vector", "from_facets",
    "h_vector", "verify_coloring",
    "balanced_h_witness", "ballot_complex", "g_witness", "gamma_hat_complex", "h_witness",
    "theorem_bary_witness", "verify_gineq",
    "SdGammaError", "TheoremRefuted",
    "gamma_nj", "gamma_sd_from_h", "h_sd_from_h", "table_by_recurrence",
    "is_ffk", "rank", "unrank",
    "goodness_certificate", "verify_certificate",
    "CountVector", "IntPolynomial", "gamma_from_symmetric",
]
