"""Exact arithmetic over the Gaussian rationals and sparse polynomials in z, w.

Scalars are elements of Q(i), stored as a pair of ``fractions.Fraction``.
Bivariate polynomials are sparse dictionaries mapping exponent pairs
(i, j) -> coefficient, meaning sum c_ij z^i w^j.  Zero coefficients are
never stored, so equality of dictionaries is equality of polynomials.

All ring operations are exact; complex floats appear only in the
evaluation backend (``BiPoly.eval_complex``) and in certified square
roots used by the factorization code.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Optional, Tuple


class ZeroPolynomial(ValueError):
    """Raised by operations that require a nonzero polynomial."""


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot coerce {x!r} to Fraction")


@dataclass(frozen=True)
class GaussRat:
    """A Gaussian rational re + i*im with exact Fraction parts."""

    re: Fraction
    im: Fraction

    def __new__(cls, re=0, im=0):
        self = super().__new__(cls)
        object.__setattr__(self, "re", _as_fraction(re))
        object.__setattr__(self, "im", _as_fraction(im))
        return self

    def __init__(self, re=0, im=0):  # fields set in __new__
        pass

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __add__(self, other) -> "GaussRat":
        other = as_gauss(other)
        return GaussRat(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> "GaussRat":
        return GaussRat(-self.re, -self.im)

    def __sub__(self, other) -> "GaussRat":
        other = as_gauss(other)
        return GaussRat(self.re - other.re, self.im - other.im)

    def __rsub__(self, other) -> "GaussRat":
        return as_gauss(other) - self

    def __mul__(self, other) -> "GaussRat":
        other = as_gauss(other)
        return GaussRat(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "GaussRat":
        other = as_gauss(other)
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussRat(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other) -> "GaussRat":
        return as_gauss(other) / self

    def conjugate(self) -> "GaussRat":
        return GaussRat(self.re, -self.im)

    def norm(self) -> Fraction:
        """Field norm re^2 + im^2 (a nonnegative rational)."""
        return self.re * self.re + self.im * self.im

    def is_rational(self) -> bool:
        return self.im == 0

    def to_complex(self) -> complex:
        return complex(self.re) + 1j * complex(self.im)

    def sort_key(self) -> Tuple[Fraction, Fraction]:
        return (self.re, self.im)

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    __repr__ = __str__


GR_ZERO = GaussRat(0)
GR_ONE = GaussRat(1)
GR_I = GaussRat(0, 1)


def as_gauss(x) -> GaussRat:
    if isinstance(x, GaussRat):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussRat(x)
    raise TypeError(f"cannot coerce {x!r} to GaussRat")


def parse_gauss(s: str) -> GaussRat:
    """Parse literals like '3', '-1/2', 'i', '2i', '1/2-3/4i'."""
    s = s.strip().replace(" ", "")
    if not s:
        raise ValueError("empty Gaussian rational literal")
    if not s.endswith("i"):
        return GaussRat(Fraction(s))
    body = s[:-1]
    # split off the real part: find a +/- that is not a leading sign
    # and not inside a fraction
    split = -1
    for k in range(1, len(body)):
        if body[k] in "+-" and body[k - 1] not in "+-/":
            split = k
    if split == -1:
        imag = body if body not in ("", "+", "-") else body + "1"
        return GaussRat(0, Fraction(imag))
    re_part = body[:split]
    im_part = body[split:]
    if im_part in ("+", "-"):
        im_part += "1"
    return GaussRat(Fraction(re_part), Fraction(im_part))


def _frac_sqrt(q: Fraction) -> Optional[Fraction]:
    """Exact square root of a nonnegative rational, or None."""
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def gauss_sqrt(x: GaussRat) -> Optional[GaussRat]:
    """A square root of x inside Q(i), or None if there is none.

    The returned root is canonical: re > 0, or re == 0 and im >= 0.
    """
    if not x:
        return GR_ZERO
    if x.im == 0:
        r = _frac_sqrt(x.re)
        if r is not None:
            return GaussRat(r)
        r = _frac_sqrt(-x.re)
        if r is not None:
            return GaussRat(0, r)
        return None
    n = _frac_sqrt(x.norm())
    if n is None:
        return None
    p = _frac_sqrt((x.re + n) / 2)
    if p is None or p == 0:
        return None
    q = x.im / (2 * p)
    root = GaussRat(p, q)
    if root * root == x:
        return root if (root.re > 0 or (root.re == 0 and root.im >= 0)) else -root
    return None


def _frac_cbrt(q: Fraction) -> Optional[Fraction]:
    sign = -1 if q < 0 else 1
    n, d = abs(q.numerator), q.denominator
    rn = round(n ** (1 / 3)) if n < 2**50 else round(n ** (1 / 3))
    rd = round(d ** (1 / 3))
    for cn in (rn - 1, rn, rn + 1):
        for cd in (rd - 1, rd, rd + 1):
            if cn >= 0 and cd > 0 and cn**3 == n and cd**3 == d:
                return Fraction(sign * cn, cd)
    return None


def gauss_cbrt(x: GaussRat) -> Optional[GaussRat]:
    """A cube root of x inside Q(i) when one is easily found, else None.

    Handles the rational axis exactly (including i-multiples); general
    Gaussian arguments fall back to None and callers use floats.
    """
    if not x:
        return GR_ZERO
    if x.im == 0:
        r = _frac_cbrt(x.re)
        return GaussRat(r) if r is not None else None
    if x.re == 0:
        # (ai)^3 = -a^3 i, so cube roots of b*i are -cbrt(b) * i
        r = _frac_cbrt(x.im)
        if r is not None:
            return GaussRat(0, -r)
    return None


# ---------------------------------------------------------------------------
# Bivariate polynomials


Coeffs = Dict[Tuple[int, int], GaussRat]


class BiPoly:
    """Sparse exact polynomial sum c_ij z^i w^j over the Gaussian rationals."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Optional[Coeffs] = None):
        cleaned: Coeffs = {}
        if coeffs:
            for (i, j), c in coeffs.items():
                if i < 0 or j < 0:
                    raise ValueError("negative exponent in BiPoly")
                c = as_gauss(c)
                if c:
                    cleaned[(i, j)] = c
        self.coeffs = cleaned

    # -- constructors -------------------------------------------------
    @staticmethod
    def zero() -> "BiPoly":
        return BiPoly()

    @staticmethod
    def const(c) -> "BiPoly":
        return BiPoly({(0, 0): as_gauss(c)})

    @staticmethod
    def var(name: str) -> "BiPoly":
        if name == "z":
            return BiPoly({(1, 0): GR_ONE})
        if name == "w":
            return BiPoly({(0, 1): GR_ONE})
        raise ValueError("variable must be 'z' or 'w'")

    @staticmethod
    def monomial(i: int, j: int, c=GR_ONE) -> "BiPoly":
        return BiPoly({(i, j): as_gauss(c)})

    # -- basic queries -------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int, j: int) -> GaussRat:
        return self.coeffs.get((i, j), GR_ZERO)

    def deg_z(self) -> int:
        return max((i for i, _ in self.coeffs), default=-1)

    def deg_w(self) -> int:
        return max((j for _, j in self.coeffs), default=-1)

    def total_degree(self) -> int:
        return max((i + j for i, j in self.coeffs), default=-1)

    def is_constant(self) -> bool:
        return all(k == (0, 0) for k in self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other) -> "BiPoly":
        other = _as_poly(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            s = out.get(k, GR_ZERO) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return _raw(out)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return _raw({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other) -> "BiPoly":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "BiPoly":
        return _as_poly(other) - self

    def __mul__(self, other) -> "BiPoly":
        other = _as_poly(other)
        out: Coeffs = {}
        for (i1, j1), c1 in self.coeffs.items():
            for (i2, j2), c2 in other.coeffs.items():
                k = (i1 + i2, j1 + j2)
                s = out.get(k, GR_ZERO) + c1 * c2
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return _raw(out)

    __rmul__ = __mul__

    def scale(self, c) -> "BiPoly":
        c = as_gauss(c)
        if not c:
            return BiPoly()
        return _raw({k: v * c for k, v in self.coeffs.items()})

    def __pow__(self, n: int) -> "BiPoly":
        if n < 0:
            raise ValueError("negative power of BiPoly")
        result = BiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- calculus ------------------------------------------------------
    def diff(self, var: str) -> "BiPoly":
        out: Coeffs = {}
        if var == "z":
            for (i, j), c in self.coeffs.items():
                if i > 0:
                    out[(i - 1, j)] = c * i
        elif var == "w":
            for (i, j), c in self.coeffs.items():
                if j > 0:
                    out[(i, j - 1)] = c * j
        else:
            raise ValueError("variable must be 'z' or 'w'")
        return _raw(out)

    def subs_affine(self, az, bz, aw, bw) -> "BiPoly":
        """Substitute z -> az*z + bz and w -> aw*w + bw (coefficients exact)."""
        az, bz, aw, bw = map(as_gauss, (az, bz, aw, bw))
        zimg = BiPoly({(1, 0): az, (0, 0): bz})
        wimg = BiPoly({(0, 1): aw, (0, 0): bw})
        zpows = _powers(zimg, self.deg_z())
        wpows = _powers(wimg, self.deg_w())
        out = BiPoly()
        for (i, j), c in self.coeffs.items():
            out = out + (zpows[i] * wpows[j]).scale(c)
        return out

    def eval_complex(self, z0: complex, w0: complex) -> complex:
        """Horner evaluation: inner Horner in w for each power of z."""
        if not self.coeffs:
            return 0j
        by_i: Dict[int, Dict[int, GaussRat]] = {}
        for (i, j), c in self.coeffs.items():
            by_i.setdefault(i, {})[j] = c
        total = 0j
        for i in range(self.deg_z(), -1, -1):
            row = by_i.get(i)
            acc = 0j
            if row:
                for j in range(max(row), -1, -1):
                    acc = acc * w0 + (row[j].to_complex() if j in row else 0j)
            total = total * z0 + acc
        return total

    def eval_exact(self, z0: GaussRat, w0: GaussRat) -> GaussRat:
        total = GR_ZERO
        for (i, j), c in self.coeffs.items():
            term = c
            for _ in range(i):
                term = term * z0
            for _ in range(j):
                term = term * w0
            total = total + term
        return total

    # -- univariate views ------------------------------------------------
    def coeff_unipoly(self, var: str, k: int) -> "UniPoly":
        """Coefficient of var^k, as a UniPoly in the other variable."""
        out = {}
        for (i, j), c in self.coeffs.items():
            if var == "w" and j == k:
                out[i] = c
            elif var == "z" and i == k:
                out[j] = c
        if not out:
            return UniPoly([])
        deg = max(out)
        return UniPoly([out.get(t, GR_ZERO) for t in range(deg + 1)])

    def content_in(self, var: str) -> "UniPoly":
        """gcd of the coefficient polynomials of self viewed in ``var``.

        The result is a monic UniPoly in the other variable and divides
        self exactly.
        """
        if self.is_zero():
            raise ZeroPolynomial("content of the zero polynomial")
        top = self.deg_w() if var == "w" else self.deg_z()
        g = UniPoly([])
        for k in range(top + 1):
            g = g.gcd(self.coeff_unipoly(var, k))
        return g

    def div_exact_uni(self, u: "UniPoly", uni_var: str) -> "BiPoly":
        """Exact division by a univariate polynomial in ``uni_var``."""
        other = "w" if uni_var == "z" else "z"
        top = self.deg_w() if other == "w" else self.deg_z()
        out = BiPoly()
        for k in range(top + 1):
            row = self.coeff_unipoly(other, k)
            q, r = row.divmod(u)
            if not r.is_zero():
                raise ValueError("inexact polynomial division")
            for t, c in enumerate(q.coeffs):
                if c:
                    key = (t, k) if uni_var == "z" else (k, t)
                    out = out + BiPoly.monomial(*key, c)
        return out

    # -- presentation ------------------------------------------------------
    def sparse_map(self) -> Dict[str, str]:
        return {f"{i},{j}": str(c) for (i, j), c in sorted(self.coeffs.items())}

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for (i, j) in sorted(self.coeffs, key=lambda k: (-(k[0] + k[1]), -k[0])):
            c = self.coeffs[(i, j)]
            mono = "".join(
                (f"z^{i}" if i > 1 else "z" if i == 1 else "",
                 f"w^{j}" if j > 1 else "w" if j == 1 else "")
            )
            cs = str(c)
            if mono and cs == "1":
                cs = ""
            elif mono and cs == "-1":
                cs = "-"
            elif ("+" in cs[1:]) or ("-" in cs[1:]):
                cs = f"({cs})"
            parts.append(f"{cs}{mono}" if mono else cs)
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


def _raw(coeffs: Coeffs) -> BiPoly:
    p = BiPoly.__new__(BiPoly)
    p.coeffs = coeffs
    return p


def _as_poly(x) -> BiPoly:
    if isinstance(x, BiPoly):
        return x
    if isinstance(x, (int, Fraction, GaussRat)):
        return BiPoly.const(x)
    raise TypeError(f"cannot coerce {x!r} to BiPoly")


def _powers(p: BiPoly, n: int):
    pows = [BiPoly.const(1)]
    for _ in range(max(n, 0)):
        pows.append(pows[-1] * p)
    return pows


class UniPoly:
    """Dense exact univariate polynomial; coeffs[k] multiplies x^k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = [as_gauss(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = cs

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        return UniPoly([c / lead for c in self.coeffs])

    def divmod(self, other: "UniPoly") -> Tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        dn, dd = len(rem) - 1, other.degree()
        if dn < dd:
            return UniPoly([]), UniPoly(rem)
        quot = [GR_ZERO] * (dn - dd + 1)
        lead = other.coeffs[-1]
        for k in range(dn - dd, -1, -1):
            if len(rem) - 1 < k + dd:
                continue
            c = rem[k + dd] / lead
            if not c:
                continue
            quot[k] = c
            for t, oc in enumerate(other.coeffs):
                rem[k + t] = rem[k + t] - c * oc
            while rem and not rem[-1]:
                rem.pop()
        return UniPoly(quot), UniPoly(rem)

    def gcd(self, other: "UniPoly") -> "UniPoly":
        a, b = self, other
        while not b.is_zero():
            _, r = a.divmod(b)
            a, b = b, r
        return a.monic() if not a.is_zero() else a

    def eval(self, x: GaussRat) -> GaussRat:
        acc = GR_ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def as_bipoly(self, var: str) -> BiPoly:
        out: Coeffs = {}
        for k, c in enumerate(self.coeffs):
            if c:
                out[(k, 0) if var == "z" else (0, k)] = c
        return BiPoly(out)

    def __str__(self):
        return str(self.as_bipoly("z")).replace("z", "x")

    __repr__ = __str__


# ---------------------------------------------------------------------------
# Certified complex numbers (value plus an absolute error bound).

_EPS = 2.3e-16


@dataclass(frozen=True)
class CertifiedComplex:
    """A complex float together with an absolute error bound."""

    val: complex
    err: float

    @staticmethod
    def from_gauss(g: GaussRat) -> "CertifiedComplex":
        v = g.to_complex()
        return CertifiedComplex(v, 4 * _EPS * abs(v))

    def __add__(self, other: "CertifiedComplex") -> "CertifiedComplex":
        v = self.val + other.val
        return CertifiedComplex(v, self.err + other.err + _EPS * abs(v))

    def __sub__(self, other: "CertifiedComplex") -> "CertifiedComplex":
        v = self.val - other.val
        return CertifiedComplex(v, self.err + other.err + _EPS * abs(v))

    def __mul__(self, other: "CertifiedComplex") -> "CertifiedComplex":
        v = self.val * other.val
        e = (abs(self.val) * other.err + abs(other.val) * self.err
             + self.err * other.err + _EPS * abs(v))
        return CertifiedComplex(v, e)

    def __truediv__(self, other: "CertifiedComplex") -> "CertifiedComplex":
        if other.val == 0:
            raise ZeroDivisionError("certified division by zero")
        v = self.val / other.val
        rel = (self.err / abs(self.val) if self.val else 0.0) + other.err / abs(other.val)
        return CertifiedComplex(v, abs(v) * rel + _EPS * abs(v))

    def __neg__(self) -> "CertifiedComplex":
        return CertifiedComplex(-self.val, self.err)

    def sqrt(self) -> "CertifiedComplex":
        v = cmath.sqrt(self.val)
        if abs(v) == 0:
            return CertifiedComplex(0j, math.sqrt(self.err))
        return CertifiedComplex(v, self.err / (2 * abs(v)) + _EPS * abs(v))

    def is_certified_nonzero(self) -> bool:
        return abs(self.val) > self.err
