"""Exact topology of real moment-angle complexes Z_K(D¹,S⁰).

Submodules: ``simplicial`` (complexes K), ``intlinalg`` (Smith normal form
and homology), ``cellcomplex`` (cubical models, actions, quotients),
``words`` (Lyndon words), ``polygon`` (genus formulas), ``modrep``
(Z[Z_n]-module structure of H_1) and ``spectral`` (group homology and
the E²-page).
"""
from .errors import (
    ContractViolation,
    InvalidArgument,
    ResourceLimit,
    RmacError,
    UnsupportedCase,
    VerificationFailure,
)
from .intlinalg import FGAbelianGroup, IntMatrix, chain_homology, smith_normal_form
from .simplicial import SimplicialComplex, discrete_complex, polygon_boundary
from .cellcomplex import build_cc, build_rmac, homology, surface_report
from .polygon import genus_closed_form, quotient_genus
from .modrep import decompose_h1
from .spectral import e2_page

__version__ = "0.1.0"

__all__ = [
    "RmacError",
    "InvalidArgument",
    "ResourceLimit",
    "ContractViolation",
    "UnsupportedCase",
    "VerificationFailure",
    "IntMatrix",
    "FGAbelianGroup",
    "smith_normal_form",
    "chain_homology",
    "SimplicialComplex",
    "polygon_boundary",
    "discrete_complex",
    "build_rmac",
    "build_cc",
    "homology",
    "surface_report",
    "genus_closed_form",
    "quotient_genus",
    "decompose_h1",
    "e2_page",
]
