"""Special conformal Killing tensors on the plane in null coordinates.

A tensor is stored trace-free normalized (the metric direction is
quotiented out), leaving five parameters.  The induced 5-vector is
(A_zz, 2*b_z, c, 2*b_w, A_ww); two tensors are equal iff their 5-vectors
are equal.

Position dependence follows the convention pinned by wedge consistency:

    L_zz(z, w) = A_zz + 2 b_z w + c w^2
    L_ww(z, w) = A_ww + 2 b_w z + c z^2
    lambda     = 2 b_z z + 2 b_w w + 2 c z w      (trace, = 2 L_zw)

so that the coefficients of L1_zz L2_ww - L1_ww L2_zz are exactly the
Pluecker coordinates a_ij produced by the wedge of the two 5-vectors.
The lambda_zw = 2c normalization (rather than c) is the unique choice
consistent with that identity; see the decisions ledger.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .exactpoly import GR_ZERO, BiPoly, GaussRat, as_gauss


@dataclass(frozen=True)
class SpecialConformalKillingTensor:
    """Trace-free special conformal Killing tensor parameters."""

    a_zz: GaussRat
    b_z: GaussRat
    c: GaussRat
    b_w: GaussRat
    a_ww: GaussRat

    def five_vector(self) -> Tuple[GaussRat, ...]:
        return (self.a_zz, 2 * self.b_z, self.c, 2 * self.b_w, self.a_ww)

    def is_zero(self) -> bool:
        return not any(self.five_vector())

    def scale(self, s) -> "SpecialConformalKillingTensor":
        s = as_gauss(s)
        return SpecialConformalKillingTensor(
            self.a_zz * s, self.b_z * s, self.c * s, self.b_w * s, self.a_ww * s
        )

    def __add__(self, other: "SpecialConformalKillingTensor"):
        return SpecialConformalKillingTensor(
            self.a_zz + other.a_zz,
            self.b_z + other.b_z,
            self.c + other.c,
            self.b_w + other.b_w,
            self.a_ww + other.a_ww,
        )


def sckt(a_zz=0, b_z=0, c=0, b_w=0, a_ww=0) -> SpecialConformalKillingTensor:
    """Convenience constructor accepting ints/Fractions."""
    return SpecialConformalKillingTensor(
        as_gauss(a_zz), as_gauss(b_z), as_gauss(c), as_gauss(b_w), as_gauss(a_ww)
    )


@dataclass(frozen=True)
class ScktField:
    """Position-dependent components of a special conformal Killing tensor."""

    l_zz: BiPoly
    l_ww: BiPoly
    lam: BiPoly
    lam_z: BiPoly
    lam_w: BiPoly
    c: GaussRat


@dataclass(frozen=True)
class KillingTensorField:
    """Killing tensor components K_zz, K_zw, K_ww as polynomials."""

    k_zz: BiPoly
    k_zw: BiPoly
    k_ww: BiPoly

    @staticmethod
    def metric() -> "KillingTensorField":
        return KillingTensorField(BiPoly.zero(), BiPoly.const(1), BiPoly.zero())

    def scale(self, s) -> "KillingTensorField":
        s = as_gauss(s)
        return KillingTensorField(self.k_zz.scale(s), self.k_zw.scale(s), self.k_ww.scale(s))


def to_field(t: SpecialConformalKillingTensor) -> ScktField:
    l_zz = BiPoly({(0, 0): t.a_zz, (0, 1): 2 * t.b_z, (0, 2): t.c})
    l_ww = BiPoly({(0, 0): t.a_ww, (1, 0): 2 * t.b_w, (2, 0): t.c})
    lam = BiPoly({(1, 0): 2 * t.b_z, (0, 1): 2 * t.b_w, (1, 1): 2 * t.c})
    return ScktField(l_zz, l_ww, lam, lam.diff("z"), lam.diff("w"), t.c)


def to_killing(t: SpecialConformalKillingTensor, a_zw=GR_ZERO) -> KillingTensorField:
    """K = L - (tr L) g with the null metric g_zw = 1.

    ``a_zw`` is the suppressed metric-direction coordinate; passing a
    nonzero value reconstructs non-normalized tensors such as the metric
    itself (a_zw = 1, rest zero), which maps to -g.
    """
    a_zw = as_gauss(a_zw)
    fld = to_field(t)
    # L_zw = a_zw + b_z z + b_w w + c z w, lambda = 2 L_zw
    l_zw = BiPoly({(0, 0): a_zw, (1, 0): t.b_z, (0, 1): t.b_w, (1, 1): t.c})
    return KillingTensorField(fld.l_zz, -l_zw, fld.l_ww)


def killing_residual(k: KillingTensorField) -> Tuple[BiPoly, BiPoly, BiPoly, BiPoly]:
    """Symmetrized-derivative combinations K_(ij,k); all zero iff Killing.

    In two dimensions the cyclic sums give four independent components
    (zzz, zzw, zww, www), not three; all four are returned.
    """
    return (
        k.k_zz.diff("z").scale(3),
        k.k_zz.diff("w") + k.k_zw.diff("z").scale(2),
        k.k_ww.diff("z") + k.k_zw.diff("w").scale(2),
        k.k_ww.diff("w").scale(3),
    )
