import pytest

from sicplane.exactpoly import BiPoly, GaussRat
from sicplane.killing import sckt
from sicplane.pluecker import (
    COORD_NAMES,
    DependentPair,
    PlueckerPoint,
    extract,
    local_pluecker_residuals,
    pfaffians,
    triple_from_parts,
    wedge,
)

from conftest import rand_gauss, rand_tensor

Z = BiPoly.var("z")
W = BiPoly.var("w")


def point(**kw):
    return PlueckerPoint([kw.get(n, 0) for n in COORD_NAMES])


E1_TENSORS = (sckt(a_zz=1, a_ww=1), sckt(c=1))


class TestWedge:
    def test_dependent_pair(self, rng):
        t = rand_tensor(rng)
        with pytest.raises(DependentPair):
            wedge(t, t)

    def test_e1_point(self):
        p = wedge(*E1_TENSORS)
        assert p == point(a20=1, a02=-1)

    def test_e17_point(self):
        p = wedge(sckt(c=1), sckt(b_z=1))
        assert p == point(a21=-2)
        assert p["a21"] == GaussRat(-2)

    def test_antisymmetry_and_bilinearity(self, rng):
        for _ in range(40):
            t1, t2, t3 = rand_tensor(rng), rand_tensor(rng), rand_tensor(rng)
            s = rand_gauss(rng)
            try:
                p12 = wedge(t1, t2)
                p21 = wedge(t2, t1)
            except DependentPair:
                continue
            assert p21.coords == tuple(-c for c in p12.coords)
            try:
                lhs = wedge(t1 + t3.scale(s), t2)
                p32 = wedge(t3, t2)
            except DependentPair:
                continue
            expect = tuple(a + s * b for a, b in zip(p12.coords, p32.coords))
            assert lhs.coords == expect

    def test_basis_change_scales_by_determinant(self, rng):
        for _ in range(30):
            t1, t2 = rand_tensor(rng), rand_tensor(rng)
            a, b, c, d = (rand_gauss(rng) for _ in range(4))
            det = a * d - b * c
            try:
                base = wedge(t1, t2)
                mixed = wedge(t1.scale(a) + t2.scale(b), t1.scale(c) + t2.scale(d))
            except DependentPair:
                continue
            assert mixed.coords == tuple(det * x for x in base.coords)


class TestPfaffians:
    def test_wedge_output_decomposable(self, rng):
        for _ in range(100):
            t1, t2 = rand_tensor(rng), rand_tensor(rng)
            try:
                p = wedge(t1, t2)
            except DependentPair:
                continue
            assert pfaffians(p) == (GaussRat(0),) * 5

    def test_nondecomposable(self):
        p = point(a30=1, a03=1)
        pf = pfaffians(p)
        assert pf[2] == GaussRat(1)

    def test_single_coordinate_on_grassmannian(self):
        assert pfaffians(point(a30=1)) == (GaussRat(0),) * 5


class TestExtract:
    def test_e1(self):
        t = extract(point(a20=1, a02=-1))
        assert t.d == Z * Z - W * W
        assert t.a_z == W.scale(2)
        assert t.b_w == Z.scale(-2)

    def test_degenerate_point(self):
        t = extract(point(a30=1))
        assert t.d.is_zero()
        assert t.a_z == BiPoly.const(1)
        assert t.b_w.is_zero()

    def test_constant_point(self):
        t = extract(point(a00=1))
        assert t.d == BiPoly.const(1)
        assert t.a_z.is_zero() and t.b_w.is_zero()

    def test_round_trip(self, rng):
        for _ in range(50):
            coords = [rand_gauss(rng) for _ in range(10)]
            if not any(coords):
                continue
            p = PlueckerPoint(coords)
            assert extract(p).pluecker_point().coords == p.coords

    def test_shape_validation(self):
        with pytest.raises(ValueError):
            triple_from_parts(Z**3, 0, 0)


class TestLocalPlueckerResiduals:
    def test_wedge_triples_vanish(self, rng):
        for _ in range(60):
            t1, t2 = rand_tensor(rng), rand_tensor(rng)
            try:
                p = wedge(t1, t2)
            except DependentPair:
                continue
            res = local_pluecker_residuals(extract(p))
            assert all(r.is_zero() for r in res)

    def test_spec_examples(self):
        ok = triple_from_parts(Z + W, 1, 1)
        assert local_pluecker_residuals(ok)[0].is_zero()
        bad = triple_from_parts(BiPoly.const(1), 1, 1)
        assert local_pluecker_residuals(bad)[0] == BiPoly.const(1)

    def test_equivalence_with_coefficient_pfaffians(self, rng):
        # identical vanishing of the polynomial and coefficient Pfaffians
        for _ in range(120):
            coords = [rand_gauss(rng) for _ in range(10)]
            if not any(coords):
                continue
            p = PlueckerPoint(coords)
            coeff_zero = not any(pfaffians(p))
            local_zero = all(r.is_zero() for r in local_pluecker_residuals(extract(p)))
            assert coeff_zero == local_zero
