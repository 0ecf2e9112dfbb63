"""Exact verification of quasi-Frobenius structures on 4-dimensional real Lie superalgebras.

Modules:
  scalar       rational functions in the catalog parameters
  superspace   super vector spaces, bilinear forms, wedge forms
  lie          Lie superalgebra structures, closed forms, classification
  extension    flat connections, T*- and Pi T*-extensions, converse construction
  lsa          left-symmetric, Novikov and Balinsky-Novikov products
  catalog      the shipped catalog of algebras and its loader
  verify       per-entry checks behind ``superqf verify``
"""
from __future__ import annotations

from .catalog import Catalog, CatalogEntry, load_catalog, load_default, sample_points
from .extension import (
    Connection,
    ModuleCocycle,
    pi_t_star_extend,
    quotient_flat_connection,
    t_star_extend,
    verify_iso,
)
from .lie import LieSuperStructure, classify_at_point, closed_form_space, quasi_frobenius_classify
from .lsa import ProductTable, is_balinsky_novikov, is_left_symmetric, is_novikov
from .scalar import Scalar, parse_scalar
from .superspace import BilForm, Parity, SubSpace, SuperSpace, wedge_form
from .verify import CHECKS, VerificationPlan, run

__version__ = "0.1.0"

__all__ = [
    "BilForm", "CHECKS", "Catalog", "CatalogEntry", "Connection", "LieSuperStructure", "ModuleCocycle",
    "Parity", "ProductTable", "Scalar", "SubSpace", "SuperSpace", "VerificationPlan", "classify_at_point",
    "closed_form_space", "is_balinsky_novikov", "is_left_symmetric", "is_novikov", "load_catalog",
    "load_default", "parse_scalar", "pi_t_star_extend", "quasi_frobenius_classify",
    "quotient_flat_connection", "run", "sample_points", "t_star_extend", "verify_iso", "wedge_form",
]
