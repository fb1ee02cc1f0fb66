"""Friezes and the modified Caldero-Chapoton map on cluster categories of type A_n."""

from __future__ import annotations

from .category import hom_dim, index, minimal_left_approx, minimal_right_approx
from .engine import (
    CCContext,
    alpha,
    beta,
    check_condition_F,
    check_generalized_frieze,
    check_multiplication,
    rho_direct,
    rho_multiplicative,
)
from .gmodules import g_module, pi, submodules
from .ktheory import subgroup_N, theta, theta_bar
from .laurent import EpsilonAssignment, LaurentPoly, parse_monomial
from .patterns import FriezeGrid, frieze_check, load_grid, parse_grid
from .polygon import Arc, ArcSum, Dissection, Triangulation, all_diagonals, crosses, suspend

__version__ = "0.1.0"

__all__ = [
    "Arc",
    "ArcSum",
    "CCContext",
    "Dissection",
    "EpsilonAssignment",
    "FriezeGrid",
    "LaurentPoly",
    "Triangulation",
    "all_diagonals",
    "alpha",
    "beta",
    "check_condition_F",
    "check_generalized_frieze",
    "check_multiplication",
    "crosses",
    "frieze_check",
    "g_module",
    "hom_dim",
    "index",
    "load_grid",
    "minimal_left_approx",
    "minimal_right_approx",
    "parse_grid",
    "parse_monomial",
    "pi",
    "rho_direct",
    "rho_multiplicative",
    "subgroup_N",
    "submodules",
    "suspend",
    "theta",
    "theta_bar",
]
