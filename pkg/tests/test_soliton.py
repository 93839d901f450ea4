import unittest

import numpy as np
from numpy.testing import assert_allclose

from nil_rym import moment
from nil_rym.actions import act_glq
from nil_rym.catalogue import basis_matrix, build
from nil_rym.errors.structure_errors import DegenerateTupleError
from nil_rym.models import CertificateMode, FamilySpec, Group, StructureTuple
from nil_rym.soliton import (best_r, certify, certify_gfi, certify_ricci, certify_ricci_gfi, certify_rym, classify,
                             expander_bound, soliton_kind, stabilizer_part)

GOLDEN_A_SQ = (np.sqrt(5) - 1) / 2


def padded_j(q):
    out = np.zeros((q, q))
    out[:2, :2] = basis_matrix("J")
    return StructureTuple(q, 1, [out])


def random_orthogonal(rng, n):
    q, r = np.linalg.qr(rng.normal(size=(n, n)))
    return q * np.sign(np.diag(r))


class TestHeisenberg(unittest.TestCase):
    def setUp(self):
        self.c = StructureTuple(2, 1, [basis_matrix("J")])

    def test_best_r(self):
        self.assertAlmostEqual(best_r(self.c, Group.GLQ), 4.0, places=14)
        self.assertAlmostEqual(best_r(self.c, Group.FULL), 6.0, places=14)

    def test_all_certificates(self):
        rym = certify_rym(self.c)
        self.assertTrue(rym.verdict)
        self.assertAlmostEqual(rym.lam, 1.0, places=14)
        assert_allclose(rym.D, np.zeros((2, 2)), atol=1e-12)
        self.assertLess(rym.residual, 1e-12)

        ricci = certify_ricci(self.c)
        self.assertTrue(ricci.verdict)
        self.assertAlmostEqual(ricci.r, 6.0, places=14)
        self.assertIsNone(ricci.lam)
        self.assertIsNone(ricci.D)
        self.assertLess(ricci.residual, 1e-12)

        gfi = certify_gfi(self.c)
        self.assertTrue(gfi.verdict)
        self.assertLess(gfi.residual, 1e-12)

        both = certify_ricci_gfi(self.c)
        self.assertTrue(both.verdict)
        self.assertAlmostEqual(both.r, 2.0, places=14)
        self.assertAlmostEqual(both.s, 2.0, places=14)
        self.assertLess(both.residual, 1e-12)

    def test_certify_dispatch(self):
        self.assertIs(certify(self.c, "gfi").mode, CertificateMode.GFI)
        self.assertIs(certify(self.c, CertificateMode.RICCI).mode, CertificateMode.RICCI)


class TestWill(unittest.TestCase):
    def setUp(self):
        self.soliton = build(FamilySpec("will", {"a_sq": GOLDEN_A_SQ}))
        self.original = build(FamilySpec("will", {"a": 1.0}))

    def test_best_r(self):
        self.assertAlmostEqual(best_r(self.soliton), 2 * (1 + np.sqrt(5)), places=12)

    def test_trivial_soliton(self):
        certificate = certify_rym(self.soliton)
        self.assertTrue(certificate.verdict)
        self.assertLess(certificate.residual, 1e-10)
        self.assertLess(np.linalg.norm(certificate.D), 1e-10)
        self.assertGreater(certificate.lam, 0)

    def test_not_a_ricci_soliton(self):
        certificate = certify_ricci(self.soliton)
        self.assertFalse(certificate.verdict)
        self.assertGreater(certificate.residual, 1e-3)

    def test_original_basis_not_distinguished(self):
        certificate = certify_rym(self.original)
        self.assertFalse(certificate.verdict)
        self.assertGreater(certificate.residual, 1e-3)
        self.assertIsNone(certificate.lam)
        self.assertIsNone(certificate.D)


class TestOtherCriteria(unittest.TestCase):
    def test_b123(self):
        c = StructureTuple(4, 3, [basis_matrix(f"B{i}") for i in range(1, 4)])
        self.assertTrue(certify_ricci(c).verdict)
        both = certify_ricci_gfi(c)
        self.assertTrue(both.verdict)
        self.assertAlmostEqual(both.r, 6.0, places=13)
        self.assertAlmostEqual(both.s, 4.0, places=13)

    def test_padded_heisenberg(self):
        c = padded_j(4)
        self.assertFalse(certify_gfi(c).verdict)
        self.assertFalse(certify_ricci_gfi(c).verdict)

    def test_a1_blocks_are_minimal(self):
        for k in (1, 2, 3):
            with self.subTest(k=k):
                self.assertTrue(certify_gfi(build(FamilySpec("a1", {"k": k}))).verdict)

    def test_zero_tuple(self):
        zero = StructureTuple.zeros(3, 2)
        for check in (certify_rym, certify_ricci, certify_gfi, certify_ricci_gfi):
            with self.subTest(check=check.__name__):
                with self.assertRaises(DegenerateTupleError):
                    check(zero)
        with self.assertRaises(DegenerateTupleError):
            best_r(zero)
        with self.assertRaises(DegenerateTupleError):
            expander_bound(zero)


class TestCertificateProperties(unittest.TestCase):
    def setUp(self):
        self.c = build(FamilySpec("example3", {"a1": 1.0, "ell_sq": 2.0 / 3.0, "b": (1.0,)}))

    def test_scale_equivariance(self):
        base = certify_rym(self.c)
        for scale in (0.5, 3.0):
            scaled = certify_rym(scale * self.c)
            self.assertEqual(scaled.verdict, base.verdict)
            self.assertAlmostEqual(scaled.r, scale**2 * base.r, places=10)
            self.assertAlmostEqual(scaled.lam, scale**2 * base.lam, places=10)
            assert_allclose(scaled.D, scale**2 * base.D, atol=1e-10)

    def test_orthogonal_invariance(self):
        rng = np.random.default_rng(3)
        base = certify_rym(self.c)
        for _ in range(10):
            k = random_orthogonal(rng, self.c.q)
            moved = certify_rym(act_glq(k, self.c))
            self.assertTrue(moved.verdict)
            self.assertAlmostEqual(moved.r, base.r, places=10)
            self.assertAlmostEqual(moved.lam, base.lam, places=10)
            assert_allclose(moved.D, k @ base.D @ k.T, atol=1e-10)

    def test_metric_equation_holds(self):
        certificate = certify_rym(self.c)
        self.assertLess(certificate.residuals["metric_equation"], 1e-12)
        self.assertLess(certificate.residuals["derivation"], 1e-12)
        assert_allclose(certificate.D, certificate.D.T, atol=1e-12)

    def test_stabilizer_part(self):
        stabilizer, residual = stabilizer_part(self.c)
        self.assertLess(residual, 1e-12)
        assert_allclose(stabilizer, 4 * certify_rym(self.c).D, atol=1e-12)
        _, off = stabilizer_part(self.c, r=1.0)
        self.assertGreater(off, 1e-3)


class TestClassify(unittest.TestCase):
    def test_consistent_on_catalogue(self):
        specs = [
            FamilySpec("heisenberg"),
            FamilySpec("a1", {"k": 2}),
            FamilySpec("b_basis", {"b": (1.0, 1.0, 1.0)}),
            FamilySpec("will", {"a_sq": GOLDEN_A_SQ}),
            FamilySpec("example2", {"a1": 1.0, "k": 1, "pairs": ((0.6, 0.8),), "d": (1.0,)}),
        ]
        for spec in specs:
            with self.subTest(family=spec.name):
                result = classify(build(spec))
                self.assertTrue(result.consistent)
                if result.ricci_and_gfi.verdict:
                    self.assertTrue(result.rym.verdict and result.ricci.verdict and result.gfi.verdict)
                if result.rym.verdict:
                    self.assertGreater(result.rym.lam, 0)

    def test_expander_bound(self):
        specs = [
            FamilySpec("heisenberg"),
            FamilySpec("a1", {"k": 3, "a1": 0.4}),
            FamilySpec("b_basis", {"b": (1.0, 1.0, 1.0)}),
            FamilySpec("will", {"a_sq": GOLDEN_A_SQ}),
            FamilySpec("example2", {"a1": 1.0, "k": 1, "pairs": ((0.6, 0.8),), "d": (1.0,)}),
            FamilySpec("example3", {"a1": 1.0, "ell_sq": 2.0 / 3.0, "b": (1.0,)}),
        ]
        for spec in specs:
            with self.subTest(family=spec.name):
                c = build(spec)
                certificate = certify_rym(c)
                self.assertTrue(certificate.verdict)
                bound = expander_bound(c)
                self.assertGreater(bound, 0)
                self.assertGreaterEqual(certificate.r, bound)
                first = moment.m1(c)
                self.assertAlmostEqual(certificate.r, np.sum(first * first) / c.norm**2, places=10)
                self.assertGreater(certificate.lam, 0)

    def test_soliton_kind(self):
        self.assertEqual(soliton_kind(1.0), "expander")
        self.assertEqual(soliton_kind(0.0), "steady")
        self.assertEqual(soliton_kind(-1.0), "shrinker")
        self.assertEqual(soliton_kind(None), "none")


if __name__ == "__main__":
    unittest.main()
