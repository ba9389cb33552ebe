"""Algebraic superintegrability conditions, residuals and the lift.

Residuals are literal left-minus-right polynomials of the defining
equations, returned as polynomials rather than booleans so callers can
inspect failure modes.  The factor 3/2 is kept exactly as in the source
normalization; all tables are consistent with it.

``lift`` recovers the two coefficients a_30, a_03 that the projection
(D, A_z, B_w) -> D forgets.  It solves the two residual equations by
exact polynomial division and cross-checks every simultaneously defined
quotient formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .exactpoly import GR_ZERO, BiPoly, GaussRat, ZeroPolynomial
from .pluecker import PlueckerPoint, TernaryTriple, pfaffians, triple_from_parts

_THREE_HALVES = GaussRat(Fraction(3, 2))


class NotReducible(ValueError):
    """D does not lie on the decomposable-cubic variety."""


class SingularSample(ValueError):
    """Numeric sample hits D = 0 or a singular form."""


class NotOnVariety(ValueError):
    """Operation requires an on-variety point."""


def _derivs(d: BiPoly):
    dz, dw = d.diff("z"), d.diff("w")
    return {
        "z": dz, "w": dw,
        "zz": dz.diff("z"), "zw": dz.diff("w"), "ww": dw.diff("w"),
        "zzw": dz.diff("z").diff("w"), "wwz": dw.diff("w").diff("z"),
    }


def ab3_residuals(t: TernaryTriple) -> Tuple[BiPoly, BiPoly]:
    """Residuals of the two conditions determining A_z and B_w from D:

        A_z D_w^2 - (2 D D_w D_zz - 3/2 D^2 D_zzw - D_w D_z^2 + D D_z D_zw)
        B_w D_z^2 - (2 D D_z D_ww - 3/2 D^2 D_wwz - D_z D_w^2 + D D_w D_zw)
    """
    d = t.d
    v = _derivs(d)
    ra = t.a_z * v["w"] * v["w"] - (
        (d * v["w"] * v["zz"]).scale(2)
        - (d * d * v["zzw"]).scale(_THREE_HALVES)
        - v["w"] * v["z"] * v["z"]
        + d * v["z"] * v["zw"]
    )
    rb = t.b_w * v["z"] * v["z"] - (
        (d * v["z"] * v["ww"]).scale(2)
        - (d * d * v["wwz"]).scale(_THREE_HALVES)
        - v["z"] * v["w"] * v["w"]
        + d * v["w"] * v["zw"]
    )
    return ra, rb


def cubic_residuals(t: TernaryTriple) -> Tuple[BiPoly, BiPoly]:
    """The two cubic superintegrability conditions (left side as residual):

        3 A_z D D_ww - 2 A_z B_w D_z - 2 A_z D_w^2 + D D_w D_zz
        3 B_w D D_zz - 2 A_z B_w D_w - 2 B_w D_z^2 + D D_z D_ww
    """
    d, a, b = t.d, t.a_z, t.b_w
    v = _derivs(d)
    r1 = (a * d * v["ww"]).scale(3) - (a * b * v["z"]).scale(2) \
        - (a * v["w"] * v["w"]).scale(2) + d * v["w"] * v["zz"]
    r2 = (b * d * v["zz"]).scale(3) - (a * b * v["w"]).scale(2) \
        - (b * v["z"] * v["z"]).scale(2) + d * v["z"] * v["ww"]
    return r1, r2


def quartic_residual(t: TernaryTriple) -> BiPoly:
    """2 D^2 D_zz D_ww - B_w D D_z D_zz - A_z D D_w D_ww - A_z B_w D_z D_w + A_z^2 B_w^2."""
    d, a, b = t.d, t.a_z, t.b_w
    v = _derivs(d)
    return (
        (d * d * v["zz"] * v["ww"]).scale(2)
        - b * d * v["z"] * v["zz"]
        - a * d * v["w"] * v["ww"]
        - a * b * v["z"] * v["w"]
        + a * a * b * b
    )


def d3_residual(d: BiPoly) -> BiPoly:
    """Residual of the pure-D condition:

        D_z^2 D_ww + D_w^2 D_zz + D_z D_w D_zw
        - D (2 D_zz D_ww + D_z D_wwz + D_w D_zzw + D_zw^2)
    """
    v = _derivs(d)
    lhs = v["z"] * v["z"] * v["ww"] + v["w"] * v["w"] * v["zz"] + v["z"] * v["w"] * v["zw"]
    rhs = d * ((v["zz"] * v["ww"]).scale(2) + v["z"] * v["wwz"]
               + v["w"] * v["zzw"] + v["zw"] * v["zw"])
    return lhs - rhs


def derive_d3_chain(t: TernaryTriple) -> Tuple[BiPoly, BiPoly, BiPoly, BiPoly]:
    """Residuals of the D-condition and its derivative consequences.

    Returns residuals of the base identity, its z- and w-derivative
    forms, and the mixed form:

        D_w D_zz D_zw = D (D_zz D_wwz + D_zw D_zzw)
        D_z D_ww D_zw = D (D_ww D_zzw + D_zw D_wwz)
        D_zz D_zw D_ww = 2 D D_zzw D_wwz

    The chain property diff(base, z) = 3 * (z-form) and
    diff(z-form, w) = (mixed form) holds identically.
    """
    d = t.d
    v = _derivs(d)
    r0 = d3_residual(d)
    rz = v["w"] * v["zz"] * v["zw"] - d * (v["zz"] * v["wwz"] + v["zw"] * v["zzw"])
    rw = v["z"] * v["ww"] * v["zw"] - d * (v["ww"] * v["zzw"] + v["zw"] * v["wwz"])
    rzw = v["zz"] * v["zw"] * v["ww"] - (d * v["zzw"] * v["wwz"]).scale(2)
    return r0, rz, rw, rzw


@dataclass(frozen=True)
class SicReport:
    cubic_residuals: Tuple[BiPoly, BiPoly]
    quartic_residual: BiPoly
    ab3_residuals: Tuple[BiPoly, BiPoly]
    d3_residual: BiPoly
    on_variety: bool
    degenerate: bool

    def to_json(self) -> Dict:
        return {
            "cubic_residuals": [r.sparse_map() for r in self.cubic_residuals],
            "quartic_residual": self.quartic_residual.sparse_map(),
            "ab3_residuals": [r.sparse_map() for r in self.ab3_residuals],
            "d3_residual": self.d3_residual.sparse_map(),
            "on_variety": self.on_variety,
            "degenerate": self.degenerate,
        }


def sic_residuals(t: TernaryTriple) -> SicReport:
    ra, rb = ab3_residuals(t)
    pf = pfaffians(t.pluecker_point())
    on_variety = ra.is_zero() and rb.is_zero() and not any(pf)
    d_zero = t.d.is_zero()
    a30, a03 = t.a_z.coeff(0, 0), t.b_w.coeff(0, 0)
    degenerate = d_zero and (bool(a30) != bool(a03))
    return SicReport(
        cubic_residuals=cubic_residuals(t),
        quartic_residual=quartic_residual(t),
        ab3_residuals=(ra, rb),
        d3_residual=d3_residual(t.d),
        on_variety=on_variety,
        degenerate=degenerate,
    )


def ic_residuals(t: TernaryTriple, sample: Tuple[complex, complex],
                 tol: float = 1e-12) -> Tuple[complex, complex, complex]:
    """Numeric values of the two cubic integrability conditions and the
    quartic consequence, in the C-matrix symbols, at a nonsingular sample.
    """
    z0, w0 = sample
    d = t.d
    dval = d.eval_complex(z0, w0)
    if abs(dval) <= tol:
        raise SingularSample(f"D({z0}, {w0}) = {dval} is (numerically) zero")
    v = _derivs(d)
    dz = v["z"].eval_complex(z0, w0)
    dw = v["w"].eval_complex(z0, w0)
    a = t.a_z.eval_complex(z0, w0)
    b = t.b_w.eval_complex(z0, w0)
    ap = t.a_z.diff("w").eval_complex(z0, w0)
    bp = t.b_w.diff("z").eval_complex(z0, w0)
    c11, c12, c21, c22 = -dz / dval, a / dval, b / dval, -dw / dval
    c122 = (ap * dval - a * dw) / dval**2
    c211 = (bp * dval - b * dz) / dval**2
    ic1 = 3 * c21 * c122 - c11 * c211 - c22 * c12 * c21 - c21 * c11 * c11
    ic2 = 3 * c12 * c211 - c22 * c122 - c11 * c21 * c12 - c12 * c22 * c22
    ic3 = (2 * c122 * c211 - c11 * c21 * c122 - c22 * c12 * c211
           + c12 * c12 * c21 * c21 - c11 * c22 * c12 * c21)
    return ic1, ic2, ic3


# ---------------------------------------------------------------------------
# The lift D -> (a_30, a_03)


@dataclass(frozen=True)
class LiftResult:
    """Recovered constants over a decomposable D.

    status is one of 'unique', 'free_a30', 'free_a03', 'free_both_xor'
    (constant D: both slots free subject to a_30 * a_03 = 0) or 'none'
    (formulas disagree; D not on the variety image).
    """

    status: str
    a_30: Optional[GaussRat]
    a_03: Optional[GaussRat]

    @property
    def free_parameter(self) -> Optional[str]:
        return {"free_a30": "a_30", "free_a03": "a_03",
                "free_both_xor": "a_30/a_03"}.get(self.status)


def _solve_linear_slot(d: BiPoly, known_part: BiPoly, rhs: BiPoly,
                       sq: BiPoly) -> Tuple[bool, Optional[GaussRat]]:
    """Solve (known_part + x) * sq = rhs for a constant x.

    Returns (solvable, value); value None with solvable=True means the
    slot is unconstrained (sq = 0 and the equation is an identity).
    """
    need = rhs - known_part * sq
    if sq.is_zero():
        return need.is_zero(), None
    # need must equal x * sq for a constant x
    if need.is_zero():
        return True, GR_ZERO
    for key, c in sq.coeffs.items():
        x = need.coeff(*key) / c
        break
    if need == sq.scale(x):
        return True, x
    return False, None


def lift(d: BiPoly) -> LiftResult:
    """Recover (a_30, a_03) from D.

    Raises NotReducible when D fails membership in the decomposable
    variety (the pure-D condition has a nonzero residual), and
    ZeroPolynomial for D identically zero.
    """
    if d.is_zero():
        raise ZeroPolynomial("lift of the zero polynomial")
    if d.deg_z() > 2 or d.deg_w() > 2 or d.coeff(2, 2):
        raise ValueError("D must have deg_z <= 2, deg_w <= 2 and no z^2 w^2 term")
    if not d3_residual(d).is_zero():
        raise NotReducible("D violates the decomposability condition")

    v = _derivs(d)

    rhs_a = ((d * v["w"] * v["zz"]).scale(2) - (d * d * v["zzw"]).scale(_THREE_HALVES)
             - v["w"] * v["z"] * v["z"] + d * v["z"] * v["zw"])
    known_a = BiPoly({(0, 2): d.coeff(2, 1), (0, 1): 2 * d.coeff(2, 0)})
    ok_a, a30 = _solve_linear_slot(d, known_a, rhs_a, v["w"] * v["w"])

    rhs_b = ((d * v["z"] * v["ww"]).scale(2) - (d * d * v["wwz"]).scale(_THREE_HALVES)
             - v["z"] * v["w"] * v["w"] + d * v["w"] * v["zw"])
    known_b = BiPoly({(2, 0): d.coeff(1, 2), (1, 0): 2 * d.coeff(0, 2)})
    ok_b, a03 = _solve_linear_slot(d, known_b, rhs_b, v["z"] * v["z"])

    if not (ok_a and ok_b):
        return LiftResult("none", None, None)

    # cross-check all simultaneously defined closed-form quotients
    for val in _a30_formulas(d):
        if a30 is None:
            a30 = val
        elif val != a30:
            return LiftResult("none", None, None)
    for val in _a03_formulas(d):
        if a03 is None:
            a03 = val
        elif val != a03:
            return LiftResult("none", None, None)

    if a30 is None and a03 is None:
        return LiftResult("free_both_xor", None, None)
    if a30 is None:
        return LiftResult("free_a30", None, a03)
    if a03 is None:
        return LiftResult("free_a03", a30, None)
    return LiftResult("unique", a30, a03)


def _coords_of_d(d: BiPoly) -> Dict[str, GaussRat]:
    from .pluecker import D_SLOTS

    return {name: d.coeff(*slot) for name, slot in D_SLOTS.items()}


def _a30_formulas(d: BiPoly) -> List[GaussRat]:
    """Every defined closed-form expression for a_30 over this D.

    Assumes D already satisfies the decomposability condition, so
    a_21 != 0 places D in a component where a_20^2 / a_21 is valid.
    """
    a = _coords_of_d(d)
    out: List[GaussRat] = []
    if a["a12"]:
        out.append((a["a20"] * a["a11"] - a["a21"] * a["a10"]) / a["a12"])
    if a["a02"]:
        out.append((a["a20"] * a["a01"] - a["a21"] * a["a00"]) / a["a02"])
    if a["a01"]:
        # evaluation of the A-condition at the origin
        num = (a["a00"] * (4 * a["a01"] * a["a20"] - 3 * a["a00"] * a["a21"])
               + a["a10"] * (a["a00"] * a["a11"] - a["a10"] * a["a01"]))
        out.append(num / (a["a01"] * a["a01"]))
    if a["a21"]:
        out.append(a["a20"] * a["a20"] / a["a21"])
    if _in_d_11_0_1(a):
        if a["a11"]:
            out.append(a["a10"] * a["a20"] / a["a11"])
        if a["a01"]:
            out.append(a["a00"] * a["a20"] / a["a01"])
    if _in_d_0_11_0(a):
        if a["a02"]:
            out.append(a["a20"] / a["a02"] * a["a01"])
        if a["a01"]:
            out.append((4 * a["a00"] * a["a20"] - a["a10"] * a["a10"]) / a["a01"])
    return out


def _a03_formulas(d: BiPoly) -> List[GaussRat]:
    a = _coords_of_d(d)
    out: List[GaussRat] = []
    if a["a21"]:
        out.append((a["a02"] * a["a11"] - a["a12"] * a["a01"]) / a["a21"])
    if a["a20"]:
        out.append((a["a02"] * a["a10"] - a["a12"] * a["a00"]) / a["a20"])
    if a["a10"]:
        num = (a["a00"] * (4 * a["a10"] * a["a02"] - 3 * a["a00"] * a["a12"])
               + a["a01"] * (a["a00"] * a["a11"] - a["a01"] * a["a10"]))
        out.append(num / (a["a10"] * a["a10"]))
    if a["a12"]:
        out.append(a["a02"] * a["a02"] / a["a12"])
    if _in_d_1_0_11(a):
        if a["a11"]:
            out.append(a["a01"] * a["a02"] / a["a11"])
        if a["a10"]:
            out.append(a["a00"] * a["a02"] / a["a10"])
    if _in_d_0_11_0(a):
        if a["a20"]:
            out.append(a["a02"] / a["a20"] * a["a10"])
        if a["a10"]:
            out.append((4 * a["a00"] * a["a02"] - a["a01"] * a["a01"]) / a["a10"])
    return out


def _in_d_11_0_1(a: Dict[str, GaussRat]) -> bool:
    """D = f(z) * (linear in w): rank-1 coefficient matrix, no w^2 terms."""
    if a["a02"] or a["a12"]:
        return False
    d0 = (a["a00"], a["a10"], a["a20"])
    d1 = (a["a01"], a["a11"], a["a21"])
    return all(d0[i] * d1[j] == d0[j] * d1[i] for i in range(3) for j in range(i + 1, 3))


def _in_d_1_0_11(a: Dict[str, GaussRat]) -> bool:
    if a["a20"] or a["a21"]:
        return False
    d0 = (a["a00"], a["a01"], a["a02"])
    d1 = (a["a10"], a["a11"], a["a12"])
    return all(d0[i] * d1[j] == d0[j] * d1[i] for i in range(3) for j in range(i + 1, 3))


def _in_d_0_11_0(a: Dict[str, GaussRat]) -> bool:
    """Quadric with no zw term whose symmetric matrix is singular."""
    if a["a21"] or a["a12"] or a["a11"]:
        return False
    det = (a["a02"] * (4 * a["a00"] * a["a20"] - a["a10"] * a["a10"])
           - a["a01"] * a["a01"] * a["a20"])
    return not det


def lifted_triple(d: BiPoly, a_30=None, a_03=None) -> TernaryTriple:
    """Triple over D with lifted constants; free slots default to 0."""
    res = lift(d)
    if res.status == "none":
        raise NotOnVariety("lift formulas disagree")
    v30 = res.a_30 if res.a_30 is not None else (a_30 if a_30 is not None else GR_ZERO)
    v03 = res.a_03 if res.a_03 is not None else (a_03 if a_03 is not None else GR_ZERO)
    return triple_from_parts(d, v30, v03)
