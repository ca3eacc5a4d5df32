"""Bivariate degenerate Hermite polynomials: exact constructions, numerics
and an identity-verification harness."""
from .core import (DegenerateParam, DivergenceError, DomainError, ExactPoly,
                   MomentSequence, RepresentationError, make_param, poly_diff,
                   poly_eval)
from .hermite import (apply_M, apply_P, bvdhp, cosine_integral_x,
                      cosine_integral_y, dhp, diff_x_closed, diff_y_closed,
                      integral_x_identity, integral_y_identity,
                      inverse_expansion, monomial_construct, ode_residual,
                      operational_construct, recurrence_next, rodrigues)
from .numeric import (GFPoint, QuadratureConfig, eval_bvdhp, eval_dhp,
                      even_gf, gaussian_quartic, gf_closed, gf_series,
                      mellin_gauss, nodhf, ortho_dhp, partial_ortho,
                      scaling_checks)
from .umbral import (DHP_VACUUM, HERMITE_VACUUM, UmbralExpr, dhp_moment,
                     umbral_eval, umbral_expand, umbral_gf_coefficient,
                     vacuum_moment)
from .verify import CheckReport, HeatGrid, heat_fd_check, run_all, run_check

__version__ = "0.1.0"

__all__ = [
    "DegenerateParam",
    "DivergenceError",
    "DomainError",
    "ExactPoly",
    "MomentSequence",
    "RepresentationError",
    "make_param",
    "poly_diff",
    "poly_eval",
    "apply_M",
    "apply_P",
    "bvdhp",
    "cosine_integral_x",
    "cosine_integral_y",
    "dhp",
    "diff_x_closed",
    "diff_y_closed",
    "integral_x_identity",
    "integral_y_identity",
    "inverse_expansion",
    "monomial_construct",
    "ode_residual",
    "operational_construct",
    "recurrence_next",
    "rodrigues",
    "GFPoint",
    "QuadratureConfig",
    "eval_bvdhp",
    "eval_dhp",
    "even_gf",
    "gaussian_quartic",
    "gf_closed",
    "gf_series",
    "mellin_gauss",
    "nodhf",
    "ortho_dhp",
    "partial_ortho",
    "scaling_checks",
    "DHP_VACUUM",
    "HERMITE_VACUUM",
    "UmbralExpr",
    "dhp_moment",
    "umbral_eval",
    "umbral_expand",
    "umbral_gf_coefficient",
    "vacuum_moment",
    "CheckReport",
    "HeatGrid",
    "heat_fd_check",
    "run_all",
    "run_check",
]
