"""Exact complex root counting through Cauchy indices and subresultants."""

from .bounds import DegreeBoundReport, beta, bound_check, gamma
from .cauchy import (
    LocalIndex,
    SigmaTauChain,
    build_chain,
    build_chain_bivariate,
    cauchy_index,
    cauchy_index_oracle,
    count_real_roots,
    inversion_check,
    local_index,
    product_formula_check,
    var_sigma_tau,
)
from .exact import ComplexPoly, Gaussian, I, Poly, X, parse_rational, poly_from
from .subres import SubresSeq, check_structure, coefficient_degree_check, subresultants
from .winding import (
    IsolationBox,
    Rectangle,
    WindingReport,
    count_all_roots,
    count_roots_in_rectangle,
    is_well_controlled,
    isolate_roots,
    nonvanishing_delta,
    sufficient_radius,
    vanishes_on_boundary,
    winding_number,
)
