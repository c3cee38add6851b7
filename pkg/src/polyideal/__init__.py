"""Exact polynomial ideals: Groebner bases by Buchberger, degree-by-degree,
Hilbert-driven, F4 and F5, with Hilbert series and property-based checks."""

from .errors import *  # noqa: F401,F403
from .fields import GF, QQ, FpElement, PrimeField, RationalField, parse_field, recip
from .monomials import GREVLEX, LEX, Graded, Grevlex, HomogInduced, Lex, MonomialOrder, graded, parse_order
from .polynomials import (
    Ideal,
    Polynomial,
    Ring,
    conv_poly,
    homogenise,
    homogenised_ring,
    inj_vars,
    inj_vars_at_end,
    inj_vars_offset,
    lift_map,
    remap_variables,
    unhomogenise,
)
from .text import format_ideal, parse_ideal_text, parse_polynomial, parse_ring_header
from .groebner import (
    buchberger,
    buchberger_with_cofactors,
    dot,
    ideal_membership,
    is_groebner_basis,
    normal_form,
    reduce_gb,
    s_poly,
)
from .hilbert import (
    HPS,
    calc_gb_via_homog,
    conv,
    degree_by_degree_gb,
    hilbert_driven_gb,
    hilbert_numerator,
    hilbert_series,
    taylor_coeffs,
)
from .matrices import DenseMatrix, SparseMatrix, gauss_reduction
from .f4 import f4, symbolic_preprocessing
from .f5 import LabeledPolynomial, Signature, f5
from .algorithms import ALGORITHMS, compute_gb

__version__ = "0.1.0"
