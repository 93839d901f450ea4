import unittest

import numpy as np
from numpy.testing import assert_allclose
from scipy.linalg import expm

from nil_rym.actions import act, act_glp, act_glq, act_lie, fingerprint
from nil_rym.catalogue import basis_matrix, build
from nil_rym.errors.structure_errors import InvalidGroupElementError, StructureShapeError
from nil_rym.models import FamilySpec, GroupElement, StructureTuple, TangentElement


def random_tuple(rng, q, p):
    a = rng.normal(size=(p, q, q))
    return StructureTuple(q, p, a - np.transpose(a, (0, 2, 1)))


def random_orthogonal(rng, n):
    q, r = np.linalg.qr(rng.normal(size=(n, n)))
    return q * np.sign(np.diag(r))


class TestGroupActions(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(7)
        self.c = random_tuple(self.rng, 4, 3)

    def test_glq_is_left_action(self):
        g1 = np.eye(4) + 0.3 * self.rng.normal(size=(4, 4))
        g2 = np.eye(4) + 0.3 * self.rng.normal(size=(4, 4))
        assert_allclose(act_glq(g1, act_glq(g2, self.c)).matrices, act_glq(g1 @ g2, self.c).matrices, atol=1e-12)

    def test_glp_composition(self):
        h1 = np.eye(3) + 0.3 * self.rng.normal(size=(3, 3))
        h2 = np.eye(3) + 0.3 * self.rng.normal(size=(3, 3))
        assert_allclose(act_glp(h1, act_glp(h2, self.c)).matrices, act_glp(h2 @ h1, self.c).matrices, atol=1e-12)

    def test_factors_commute(self):
        g = np.eye(4) + 0.3 * self.rng.normal(size=(4, 4))
        h = np.eye(3) + 0.3 * self.rng.normal(size=(3, 3))
        both = act(GroupElement(g=g, h=h), self.c)
        assert_allclose(both.matrices, act_glq(g, act_glp(h, self.c)).matrices, atol=1e-12)
        self.assertEqual(act(GroupElement(), self.c), self.c)

    def test_result_stays_skew(self):
        g = self.rng.normal(size=(4, 4))
        self.assertLess(act_glq(g, self.c).skew_defect, 1e-12)

    def test_singular_element(self):
        with self.assertRaises(InvalidGroupElementError):
            act_glq(np.zeros((4, 4)), self.c)
        with self.assertRaises(InvalidGroupElementError):
            act_glp(np.ones((3, 3)), self.c)

    def test_wrong_size(self):
        with self.assertRaises(StructureShapeError):
            act_glq(np.eye(3), self.c)


class TestLieAction(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(8)
        self.c = random_tuple(self.rng, 5, 2)

    def test_heisenberg(self):
        j = StructureTuple(2, 1, [basis_matrix("J")])
        out = act_lie(TangentElement(X=2 * np.eye(2)), j)
        assert_allclose(out.matrices, 4 * j.matrices)
        out = act_lie(TangentElement(Y=[[2.0]]), j)
        assert_allclose(out.matrices, 2 * j.matrices)

    def test_derivative_of_group_action(self):
        x = self.rng.normal(size=(5, 5))
        y = self.rng.normal(size=(2, 2))
        t = 1e-6
        forward = act(GroupElement(g=expm(t * x), h=expm(t * y)), self.c).matrices
        backward = act(GroupElement(g=expm(-t * x), h=expm(-t * y)), self.c).matrices
        numeric = (forward - backward) / (2 * t)
        assert_allclose(act_lie(TangentElement(X=x, Y=y), self.c).matrices, numeric, atol=1e-6)

    def test_linear_in_generator(self):
        x1, x2 = self.rng.normal(size=(5, 5)), self.rng.normal(size=(5, 5))
        total = act_lie(TangentElement(X=x1 + x2), self.c).matrices
        parts = act_lie(TangentElement(X=x1), self.c).matrices + act_lie(TangentElement(X=x2), self.c).matrices
        assert_allclose(total, parts, atol=1e-12)


class TestFingerprint(unittest.TestCase):
    def test_orthogonal_invariance(self):
        rng = np.random.default_rng(99)
        for _ in range(100):
            q, p = int(rng.integers(2, 7)), int(rng.integers(1, 4))
            c = random_tuple(rng, q, p)
            moved = act(GroupElement(g=random_orthogonal(rng, q), h=random_orthogonal(rng, p)), c)
            self.assertLessEqual(fingerprint(c).distance(fingerprint(moved)), 1e-10)

    def test_distinguishes_will_members(self):
        first = fingerprint(build(FamilySpec("will", {"a": 1.0})))
        second = fingerprint(build(FamilySpec("will", {"a": 0.8})))
        self.assertGreater(first.distance(second), 1e-3)

    def test_contents(self):
        fp = fingerprint(StructureTuple(2, 1, [basis_matrix("J")]))
        self.assertEqual(tuple(fp.type), (1, 2))
        assert_allclose(fp.m1_spectrum, [2.0, 2.0])
        assert_allclose(fp.m2_spectrum, [2.0])
        self.assertEqual(fp.as_dict()["type"], [1, 2])


if __name__ == "__main__":
    unittest.main()
