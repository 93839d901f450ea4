import itertools
import unittest

import numpy as np
from numpy.testing import assert_allclose, assert_array_equal

from nil_rym.algebra import (algebra_type, bracket, coefficient_matrix, effective_p, regular_closed_orbit_bound,
                             structure_constants, validate)
from nil_rym.catalogue import basis_matrix
from nil_rym.errors.structure_errors import StructureShapeError
from nil_rym.models import AlgebraType, StructureTuple

J = basis_matrix("J")


class TestValidate(unittest.TestCase):
    def test_clean_tuple(self):
        report = validate(StructureTuple(2, 1, [J]))
        self.assertTrue(report.ok)
        self.assertEqual(report.is_skew, (True,))
        self.assertEqual(report.effective_p, 1)
        self.assertEqual(report.messages, ())

    def test_non_skew_is_reported(self):
        bad = np.array([[0.0, 1.0], [1.0, 0.0]])
        report = validate(StructureTuple(2, 2, [J, bad]))
        self.assertEqual(report.is_skew, (True, False))
        self.assertFalse(report.ok)
        self.assertTrue(any("matrix 1" in m for m in report.messages))

    def test_dependent_matrices_are_flagged(self):
        with self.assertLogs(level="WARNING"):
            report = validate(StructureTuple(2, 2, [J, 2 * J]))
        self.assertFalse(report.is_regular)
        self.assertEqual(report.effective_p, 1)
        self.assertTrue(any("exceeds dim so(2)" in m for m in report.messages))

    def test_requires_structure_tuple(self):
        with self.assertRaises(StructureShapeError):
            validate([J])


class TestRank(unittest.TestCase):
    def test_coefficient_matrix(self):
        coeffs = coefficient_matrix(StructureTuple(4, 1, [basis_matrix("B1")]))
        # Upper triangle in row order: (0,1) (0,2) (0,3) (1,2) (1,3) (2,3).
        assert_array_equal(coeffs, [[1, 0, 0, 0, 0, 1]])

    def test_effective_p(self):
        b = [basis_matrix(f"B{i}") for i in range(1, 4)]
        self.assertEqual(effective_p(StructureTuple(4, 3, b)), 3)
        self.assertEqual(effective_p(StructureTuple(4, 3, [b[0], b[1], b[0] + b[1]])), 2)
        self.assertEqual(effective_p(StructureTuple.zeros(4, 2)), 0)
        self.assertEqual(effective_p(StructureTuple.zeros(1, 1)), 0)

    def test_algebra_type(self):
        self.assertEqual(algebra_type(StructureTuple(2, 1, [J])), AlgebraType(1, 2))


class TestBracket(unittest.TestCase):
    def setUp(self):
        self.c = StructureTuple(4, 2, [basis_matrix("B1"), basis_matrix("B2")])

    def test_basis_brackets(self):
        e = np.eye(6)
        assert_array_equal(bracket(self.c, e[0], e[1]), [0, 0, 0, 0, 1, 0])
        assert_array_equal(bracket(self.c, e[0], e[3]), [0, 0, 0, 0, 0, 1])
        assert_array_equal(bracket(self.c, e[0], e[4]), np.zeros(6))

    def test_skew_and_central(self):
        rng = np.random.default_rng(5)
        u, v = rng.normal(size=6), rng.normal(size=6)
        assert_allclose(bracket(self.c, u, v), -bracket(self.c, v, u))
        w = bracket(self.c, u, v)
        assert_array_equal(bracket(self.c, w, u), np.zeros(6))

    def test_bilinear(self):
        rng = np.random.default_rng(8)
        for _ in range(20):
            u, u2, v, v2 = rng.normal(size=(4, 6))
            a, b = rng.normal(size=2)
            assert_allclose(
                bracket(self.c, a * u + b * u2, v),
                a * bracket(self.c, u, v) + b * bracket(self.c, u2, v),
                atol=1e-12,
            )
            assert_allclose(
                bracket(self.c, u, a * v + b * v2),
                a * bracket(self.c, u, v) + b * bracket(self.c, u, v2),
                atol=1e-12,
            )

    def test_jacobi_on_basis_triples(self):
        rng = np.random.default_rng(9)
        a = rng.normal(size=(3, 4, 4))
        c = StructureTuple(4, 3, a - np.transpose(a, (0, 2, 1)))
        e = np.eye(c.n)
        for i, j, k in itertools.product(range(c.n), repeat=3):
            total = (
                bracket(c, e[i], bracket(c, e[j], e[k]))
                + bracket(c, e[j], bracket(c, e[k], e[i]))
                + bracket(c, e[k], bracket(c, e[i], e[j]))
            )
            assert_array_equal(total, np.zeros(c.n))

    def test_commutator_dimension_is_effective_p(self):
        tuples = [
            StructureTuple(2, 2, [J, J]),
            StructureTuple(4, 3, [basis_matrix(f"B{i}") for i in range(1, 4)]),
        ]
        for c in tuples:
            with self.subTest(p=c.p, q=c.q):
                e = np.eye(c.n)
                outputs = np.array([bracket(c, e[i], e[j]) for i in range(c.q) for j in range(i + 1, c.q)])
                self.assertEqual(np.linalg.matrix_rank(outputs), effective_p(c))
        self.assertEqual(effective_p(tuples[0]), 1)
        self.assertEqual(effective_p(tuples[1]), 3)

    def test_length_check(self):
        with self.assertRaises(StructureShapeError):
            bracket(self.c, np.ones(4), np.ones(6))


class TestStructureConstants(unittest.TestCase):
    def test_heisenberg(self):
        self.assertEqual(structure_constants(StructureTuple(2, 1, [J])), {(1, 2, 1): 1.0})

    def test_b_basis(self):
        constants = structure_constants(StructureTuple(4, 1, [basis_matrix("B2")]))
        self.assertEqual(constants, {(1, 4, 1): 1.0, (2, 3, 1): 1.0})


class TestClosedOrbitBound(unittest.TestCase):
    def test_values(self):
        self.assertEqual(regular_closed_orbit_bound(4), 4)
        self.assertEqual(regular_closed_orbit_bound(6), 13)


if __name__ == "__main__":
    unittest.main()
