"""Generalized cosine and sine functions of C2 and their polynomial forms."""
from .bipoly import BiPoly, X, Y, eval_poly, eval_poly_exact
from .identities import catalog, verify_identity
from .operators import LinDiffOp, check_eigen, make_delta_bar, make_gamma_bar
from .orthogonality import QuadratureRule, inner_product, integrate_F, jacobian, mapped_gauss_rule, weight
from .recurrences import (
    MatrixRecurrence, PolyFamilyGenerator, gen_cminus, gen_cplus, gen_poly, gen_row_matrix,
    gen_sminus, gen_splus, to_character_basis,
)
from .trig import (
    CMINUS, CPLUS, SMINUS, SPLUS, Family, Label, canonicalize_label, congruence,
    decompose_product, eval_trig, normalization_g,
)
from .weyl import WeylElement, eval_orbit_fn, substitute, weyl_group

__all__ = [
    "BiPoly", "X", "Y", "eval_poly", "eval_poly_exact",
    "catalog", "verify_identity",
    "LinDiffOp", "check_eigen", "make_delta_bar", "make_gamma_bar",
    "QuadratureRule", "inner_product", "integrate_F", "jacobian", "mapped_gauss_rule", "weight",
    "MatrixRecurrence", "PolyFamilyGenerator", "gen_cminus", "gen_cplus", "gen_poly",
    "gen_row_matrix", "gen_sminus", "gen_splus", "to_character_basis",
    "CMINUS", "CPLUS", "SMINUS", "SPLUS", "Family", "Label", "canonicalize_label", "congruence",
    "decompose_product", "eval_trig", "normalization_g",
    "WeylElement", "eval_orbit_fn", "substitute", "weyl_group",
]
