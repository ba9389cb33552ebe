"""Exact classification of non-degenerate second-order superintegrable
systems in the complex Euclidean plane."""

from .exactpoly import BiPoly, GaussRat, UniPoly, ZeroPolynomial, gauss_sqrt, parse_gauss
from .killing import (
    KillingTensorField,
    ScktField,
    SpecialConformalKillingTensor,
    killing_residual,
    sckt,
    to_field,
    to_killing,
)
from .pluecker import (
    DependentPair,
    PlueckerPoint,
    TernaryTriple,
    extract,
    local_pluecker_residuals,
    pfaffians,
    triple_from_parts,
    wedge,
)
from .sic import (
    LiftResult,
    NotOnVariety,
    NotReducible,
    SicReport,
    SingularSample,
    derive_d3_chain,
    ic_residuals,
    lift,
    lifted_triple,
    sic_residuals,
)

__version__ = "0.1.0"
