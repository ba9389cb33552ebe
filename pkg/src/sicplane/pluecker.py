"""Wedges of tensor pairs, Pluecker coordinates and the polynomial triple.

A point has ten homogeneous coordinates, canonically ordered

    a_30, a_20, a_10, a_00, a_21, a_11, a_01, a_12, a_02, a_03

which fill the strict upper triangle of a skew 5x5 matrix.  The point is
projective: two points are equal iff their coordinates are proportional,
and the canonical representative scales the first nonzero coordinate in
the order above to 1.

From a point one extracts the triple (D, A_z, B_w):

    D(z, w) = sum a_ij z^i w^j            over 0 <= i, j <= 2, (i,j) != (2,2)
    A_z(w)  = a_21 w^2 + 2 a_20 w + a_30
    B_w(z)  = a_12 z^2 + 2 a_02 z + a_03
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .exactpoly import GR_ZERO, BiPoly, GaussRat, as_gauss
from .killing import SpecialConformalKillingTensor

COORD_NAMES = ("a30", "a20", "a10", "a00", "a21", "a11", "a01", "a12", "a02", "a03")

# position of each coordinate in the skew matrix (row < col)
_MATRIX_SLOTS = {
    "a30": (0, 1), "a20": (0, 2), "a10": (0, 3), "a00": (0, 4),
    "a21": (1, 2), "a11": (1, 3), "a01": (1, 4),
    "a12": (2, 3), "a02": (2, 4),
    "a03": (3, 4),
}

# D-coefficient slots: name -> (z power, w power)
D_SLOTS = {
    "a20": (2, 0), "a10": (1, 0), "a00": (0, 0),
    "a21": (2, 1), "a11": (1, 1), "a01": (0, 1),
    "a12": (1, 2), "a02": (0, 2),
}


class DependentPair(ValueError):
    """Wedge of linearly dependent tensors: not a 2-plane."""


class PlueckerPoint:
    """Projective point with ten Gaussian-rational coordinates."""

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence):
        cs = tuple(as_gauss(c) for c in coords)
        if len(cs) != 10:
            raise ValueError("PlueckerPoint needs exactly 10 coordinates")
        if not any(cs):
            raise ValueError("PlueckerPoint coordinates must not all vanish")
        self.coords = cs

    def __getitem__(self, name: str) -> GaussRat:
        return self.coords[COORD_NAMES.index(name)]

    def canonical(self) -> "PlueckerPoint":
        for c in self.coords:
            if c:
                return PlueckerPoint(tuple(x / c for x in self.coords))
        raise AssertionError("unreachable: zero point")

    def __eq__(self, other) -> bool:
        if not isinstance(other, PlueckerPoint):
            return NotImplemented
        return self.canonical().coords == other.canonical().coords

    def __hash__(self):
        return hash(self.canonical().coords)

    def scale(self, s) -> "PlueckerPoint":
        s = as_gauss(s)
        return PlueckerPoint(tuple(c * s for c in self.coords))

    def matrix(self) -> List[List[GaussRat]]:
        m = [[GR_ZERO] * 5 for _ in range(5)]
        for name, (r, c) in _MATRIX_SLOTS.items():
            v = self[name]
            m[r][c] = v
            m[c][r] = -v
        return m

    @staticmethod
    def from_matrix(m: Sequence[Sequence[GaussRat]]) -> "PlueckerPoint":
        return PlueckerPoint([m[r][c] for r, c in (_MATRIX_SLOTS[n] for n in COORD_NAMES)])

    def __str__(self):
        return "(" + ", ".join(f"{n}={c}" for n, c in zip(COORD_NAMES, self.coords)) + ")"

    __repr__ = __str__


def wedge(t1: SpecialConformalKillingTensor, t2: SpecialConformalKillingTensor) -> PlueckerPoint:
    """Antisymmetrized products of the two 5-vectors."""
    v1, v2 = t1.five_vector(), t2.five_vector()
    coords = []
    for name in COORD_NAMES:
        r, c = _MATRIX_SLOTS[name]
        coords.append(v1[r] * v2[c] - v1[c] * v2[r])
    if not any(coords):
        raise DependentPair("tensors span no 2-plane (dependent pair)")
    return PlueckerPoint(coords)


def pfaffians(p: PlueckerPoint) -> Tuple[GaussRat, ...]:
    """The five principal-minor Pfaffians; all zero iff p is decomposable."""
    a30, a20, a10, a00, a21, a11, a01, a12, a02, a03 = p.coords
    return (
        a03 * a21 - a02 * a11 + a01 * a12,
        a03 * a20 - a02 * a10 + a00 * a12,
        a03 * a30 - a01 * a10 + a00 * a11,
        a02 * a30 - a01 * a20 + a00 * a21,
        a12 * a30 - a11 * a20 + a10 * a21,
    )


@dataclass(frozen=True)
class TernaryTriple:
    """The polynomial triple (D, A_z, B_w) of a point.

    A_z depends on w only and B_w on z only; their quadratic and linear
    coefficients are tied to the corresponding coefficients of D, so a
    triple carries exactly the ten projective coordinates.
    """

    d: BiPoly
    a_z: BiPoly
    b_w: BiPoly

    def __post_init__(self):
        d, a_z, b_w = self.d, self.a_z, self.b_w
        if d.deg_z() > 2 or d.deg_w() > 2 or d.coeff(2, 2):
            raise ValueError("D must have deg_z <= 2, deg_w <= 2 and no z^2 w^2 term")
        if a_z.deg_z() > 0 or a_z.deg_w() > 2:
            raise ValueError("A_z must be a quadratic in w")
        if b_w.deg_w() > 0 or b_w.deg_z() > 2:
            raise ValueError("B_w must be a quadratic in z")
        if a_z.coeff(0, 2) != d.coeff(2, 1) or a_z.coeff(0, 1) != 2 * d.coeff(2, 0):
            raise ValueError("A_z coefficients inconsistent with D (a_21, a_20 slots)")
        if b_w.coeff(2, 0) != d.coeff(1, 2) or b_w.coeff(1, 0) != 2 * d.coeff(0, 2):
            raise ValueError("B_w coefficients inconsistent with D (a_12, a_02 slots)")

    def coordinates(self) -> Tuple[GaussRat, ...]:
        d = self.d
        return (
            self.a_z.coeff(0, 0),
            d.coeff(2, 0), d.coeff(1, 0), d.coeff(0, 0),
            d.coeff(2, 1), d.coeff(1, 1), d.coeff(0, 1),
            d.coeff(1, 2), d.coeff(0, 2),
            self.b_w.coeff(0, 0),
        )

    def pluecker_point(self) -> PlueckerPoint:
        return PlueckerPoint(self.coordinates())


def triple_from_parts(d: BiPoly, a_30, a_03) -> TernaryTriple:
    """Build the triple over D with prescribed constant terms a_30, a_03."""
    a_z = BiPoly({(0, 2): d.coeff(2, 1), (0, 1): 2 * d.coeff(2, 0), (0, 0): as_gauss(a_30)})
    b_w = BiPoly({(2, 0): d.coeff(1, 2), (1, 0): 2 * d.coeff(0, 2), (0, 0): as_gauss(a_03)})
    return TernaryTriple(d, a_z, b_w)


def extract(p: PlueckerPoint) -> TernaryTriple:
    d = BiPoly({D_SLOTS[name]: p[name] for name in D_SLOTS})
    return triple_from_parts(d, p["a30"], p["a03"])


def local_pluecker_residuals(t: TernaryTriple) -> Tuple[BiPoly, ...]:
    """Polynomial Pfaffians of the derivative matrix of (D, A_z, B_w).

    These vanish identically iff the coefficient Pfaffians vanish.
    Listed as (AB, AD_ww, BD_zz, AD_wwz, BD_zzw) residuals:

        A_z B_w    - (D_z D_w   - D D_zw)
        A_z D_ww   - (D_w D_zz  - D D_zzw)
        B_w D_zz   - (D_z D_ww  - D D_wwz)
        A_z D_wwz  - (D_zz D_zw - D_z D_zzw)
        B_w D_zzw  - (D_zw D_ww - D_w D_wwz)
    """
    d = t.d
    dz, dw = d.diff("z"), d.diff("w")
    dzz, dzw, dww = dz.diff("z"), dz.diff("w"), dw.diff("w")
    dzzw, dwwz = dzz.diff("w"), dww.diff("z")
    a, b = t.a_z, t.b_w
    return (
        a * b - (dz * dw - d * dzw),
        a * dww - (dw * dzz - d * dzzw),
        b * dzz - (dz * dww - d * dwwz),
        a * dwwz - (dzz * dzw - dz * dzzw),
        b * dzzw - (dzw * dww - dw * dwwz),
    )
