"""Generalized complete elliptic integrals, modular functions and quadrilateral moduli."""

from .errors import (
    AngleConstraintError, BranchError, DivergesAtOne, DomainError, GEllipticError,
    InfinityAtOne, LengthError, NoConvergence, OutOfRange, OutsideImage, PhaseMismatch,
    PoleError, PreconditionError, QuadratureFailure,
)
from .hyp2f1 import HypParams, HypResult, f21, hyp2f1
from .elliptic import EllipticParams, E_abc, E_comp, K_abc, K_comp
from .modulus import mu, mu_inv, phi_K
from .mfunc import m_eval, m_value
from .quadmod import QuadSpec, qm, qm_table
from .scmap import SCParams, grid_image, sc_forward, sc_vertices, sn
from .report import Report

__version__ = "0.1.0"

__all__ = [
    "AngleConstraintError", "BranchError", "DivergesAtOne", "DomainError", "GEllipticError",
    "InfinityAtOne", "LengthError", "NoConvergence", "OutOfRange", "OutsideImage",
    "PhaseMismatch", "PoleError", "PreconditionError", "QuadratureFailure",
    "HypParams", "HypResult", "f21", "hyp2f1",
    "EllipticParams", "E_abc", "E_comp", "K_abc", "K_comp",
    "mu", "mu_inv", "phi_K", "m_eval", "m_value",
    "QuadSpec", "qm", "qm_table", "SCParams", "grid_image", "sc_forward", "sc_vertices", "sn",
    "Report",
]
