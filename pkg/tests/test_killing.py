from fractions import Fraction

from sicplane.exactpoly import BiPoly, GaussRat
from sicplane.killing import (
    KillingTensorField,
    killing_residual,
    sckt,
    to_field,
    to_killing,
)
from sicplane.pluecker import D_SLOTS, wedge

from conftest import rand_tensor

Z = BiPoly.var("z")
W = BiPoly.var("w")


class TestToField:
    def test_constant_tensor(self):
        f = to_field(sckt(a_zz=1, a_ww=1))
        assert f.l_zz == BiPoly.const(1)
        assert f.l_ww == BiPoly.const(1)
        assert f.lam_z.is_zero() and f.lam_w.is_zero()

    def test_pure_c(self):
        f = to_field(sckt(c=1))
        assert f.l_zz == W * W
        assert f.l_ww == Z * Z
        assert f.lam_z == W.scale(2)
        assert f.lam_w == Z.scale(2)

    def test_pure_bz(self):
        f = to_field(sckt(b_z=1))
        assert f.l_zz == W.scale(2)
        assert f.l_ww.is_zero()

    def test_field_invariants(self, rng):
        for _ in range(50):
            t = rand_tensor(rng)
            f = to_field(t)
            assert f.l_zz.diff("z").is_zero()
            assert f.l_ww.diff("w").is_zero()
            assert f.l_zz.diff("w") == f.lam_z
            assert f.l_ww.diff("z") == f.lam_w
            assert f.lam.diff("z") == f.lam_z
            assert f.lam.diff("w") == f.lam_w

    def test_wedge_consistency(self, rng):
        # coefficients of L1_zz L2_ww - L1_ww L2_zz are the wedge a_ij,
        # and the z^2 w^2 coefficient vanishes
        for _ in range(60):
            t1, t2 = rand_tensor(rng), rand_tensor(rng)
            f1, f2 = to_field(t1), to_field(t2)
            det = f1.l_zz * f2.l_ww - f1.l_ww * f2.l_zz
            assert det.coeff(2, 2) == GaussRat(0)
            if det.is_zero():
                continue
            p = wedge(t1, t2)
            for name, (i, j) in D_SLOTS.items():
                assert det.coeff(i, j) == p[name]

    def test_d_derivative_identities(self, rng):
        # D_z = L1_zz lam2_w - lam1_w L2_zz and the w-mirror, plus the
        # vanishing third derivatives
        for _ in range(40):
            t1, t2 = rand_tensor(rng), rand_tensor(rng)
            f1, f2 = to_field(t1), to_field(t2)
            det = f1.l_zz * f2.l_ww - f1.l_ww * f2.l_zz
            assert det.diff("z") == f1.l_zz * f2.lam_w - f1.lam_w * f2.l_zz
            assert det.diff("w") == f1.lam_z * f2.l_ww - f1.l_ww * f2.lam_z
            assert det.diff("z").diff("z").diff("z").is_zero()
            assert det.diff("w").diff("w").diff("w").is_zero()
            assert det.diff("z").diff("z").diff("w").diff("w").is_zero()


class TestToKilling:
    def test_zero_tensor(self):
        k = to_killing(sckt())
        assert k.k_zz.is_zero() and k.k_zw.is_zero() and k.k_ww.is_zero()

    def test_metric_maps_to_minus_metric(self):
        # the metric is the zero 5-vector with suppressed a_zw = 1
        k = to_killing(sckt(), a_zw=GaussRat(1))
        g = KillingTensorField.metric()
        assert k.k_zz == g.scale(-1).k_zz
        assert k.k_zw == g.scale(-1).k_zw
        assert k.k_ww == g.scale(-1).k_ww

    def test_identity_tensor(self):
        t = sckt(a_zz=1, a_ww=1)
        k = to_killing(t)
        lam = to_field(t).lam
        assert k.k_zz == BiPoly.const(1)
        assert k.k_ww == BiPoly.const(1)
        # K_zw = -lambda/2 since L_zw = lambda/2
        assert k.k_zw == lam.scale(Fraction(-1, 2))


class TestKillingResidual:
    def test_construction_is_killing(self, rng):
        for _ in range(60):
            t = rand_tensor(rng)
            res = killing_residual(to_killing(t))
            assert all(r.is_zero() for r in res)

    def test_nonkilling_detected(self):
        k = KillingTensorField(Z, BiPoly.zero(), BiPoly.zero())
        res = killing_residual(k)
        assert res[0] == BiPoly.const(3)
        assert not all(r.is_zero() for r in res)

    def test_metric_is_killing(self):
        assert all(r.is_zero() for r in killing_residual(KillingTensorField.metric()))
