"""
Tests for test functions, δ-kernel pairings and time averages
"""
import math
import unittest

import numpy

from pydantic import ValidationError

from anticipation_lab.exceptions import DomainError
from anticipation_lab.kernels import KernelProbe
from anticipation_lab.kernels import TEST_FUNCTIONS
from anticipation_lab.kernels import convergence_table
from anticipation_lab.kernels import dirichlet_kernel
from anticipation_lab.kernels import dirichlet_pairing
from anticipation_lab.kernels import dirichlet_series_pairing
from anticipation_lab.kernels import error_slope
from anticipation_lab.kernels import get_test_function
from anticipation_lab.kernels import scaled_test_pairing
from anticipation_lab.kernels import time_average
from anticipation_lab.kernels import two_atom_average
from anticipation_lab.measures import ReducedMeasure
from anticipation_lab.measures import gapped_spectrum
from anticipation_lab.utilities.common import trial_generator

from tests.mocks import SEED
from tests.mocks import equidistant_raw
from tests.mocks import two_atoms


class TestProbes(unittest.TestCase):
    def test_bump(self):
        bump = get_test_function("bump")

        self.assertEqual(bump(0.0), 1.0)
        self.assertEqual(bump(0.5), 0.0)
        self.assertEqual(bump(-0.7), 0.0)
        self.assertAlmostEqual(bump(0.25), 0.421875)
        self.assertAlmostEqual(bump.integral, 16 / 35)
        numpy.testing.assert_allclose(bump(numpy.array([-0.25, 0.25])), [0.421875, 0.421875])

        self.assertAlmostEqual(TEST_FUNCTIONS["wide_bump"](0.5), 0.421875)

    def test_unknown_test_function(self):
        self.assertRaises(DomainError, get_test_function, "gauss")

    def test_probe_validation(self):
        self.assertEqual(KernelProbe(alpha=0.5).N_list[0], 17)
        self.assertEqual(KernelProbe(alpha=0.0).phi_at_zero, 1.0)

        self.assertRaises(ValidationError, KernelProbe, alpha=1.5)
        self.assertRaises(ValidationError, KernelProbe, alpha=0.5, N_list=[])
        self.assertRaises(ValidationError, KernelProbe, alpha=0.5, N_list=[9, 9])
        self.assertRaises(ValidationError, KernelProbe, alpha=0.5, psi="wide_bump")
        self.assertRaises(ValidationError, KernelProbe, alpha=0.5, phi="gauss")


class TestPairings(unittest.TestCase):
    def test_dirichlet_kernel(self):
        self.assertEqual(float(dirichlet_kernel(5, 0.0)), 5.0)
        self.assertEqual(float(dirichlet_kernel(5, 1.0)), 5.0)
        self.assertEqual(float(dirichlet_kernel(4, 1.0)), -4.0)
        self.assertAlmostEqual(float(dirichlet_kernel(5, 0.5)), 1.0)

    def test_series_matches_closed_form(self):
        probe = KernelProbe(alpha=0.5)

        for trial_index in range(5):
            measure = gapped_spectrum(trial_generator(SEED, trial_index), 6, 0.2)

            for N in (1, 17, 65):
                with self.subTest(trial=trial_index, N=N):
                    self.assertAlmostEqual(
                        dirichlet_pairing(measure, probe, N),
                        dirichlet_series_pairing(measure, probe, N),
                        delta=1e-10
                    )

    def test_even_orders_are_rejected(self):
        probe = KernelProbe(alpha=0.0)

        self.assertRaises(DomainError, dirichlet_pairing, two_atoms(1.0), probe, 16)
        self.assertRaises(DomainError, dirichlet_series_pairing, two_atoms(1.0), probe, 0)
        self.assertRaises(DomainError, scaled_test_pairing, two_atoms(1.0), probe, 0)

    def test_scaled_pairing(self):
        probe = KernelProbe(alpha=0.0)
        measure = ReducedMeasure.from_atoms([0.0, 0.3], [0.4, 0.6])

        self.assertAlmostEqual(scaled_test_pairing(measure, probe, 64), 0.4)
        self.assertAlmostEqual(scaled_test_pairing(measure, KernelProbe(alpha=1.0), 64), 64 * 0.4)

    def test_isolated_atom(self):
        measure = ReducedMeasure.from_atoms([-math.pi / 2, 0.0, math.pi / 2], [0.35, 0.3, 0.35])
        probe = KernelProbe(alpha=0.0)

        table = convergence_table(measure, probe, kind="dirichlet", target=0.3)

        self.assertFalse(table.diverging)
        self.assertLessEqual(table.slope, -0.9)
        self.assertEqual(len(table.rows()), len(probe.N_list))
        self.assertLess(table.errors[-1], table.errors[0])

        document = table.to_document()
        self.assertEqual(document.kind, "dirichlet")
        self.assertEqual(len(document.rows), len(probe.N_list))

    def test_divergence(self):
        measure = ReducedMeasure.from_atoms([0.0], [1.0])
        table = convergence_table(measure, KernelProbe(alpha=1.0, N_list=[3, 2 ** 21 + 1]))

        self.assertTrue(table.diverging)
        self.assertIsNone(table.slope)
        self.assertEqual(table.errors, [None, None])

    def test_unknown_pairing(self):
        self.assertRaises(DomainError, convergence_table, two_atoms(1.0), KernelProbe(alpha=0.0), "fejer")

    def test_error_slope(self):
        self.assertAlmostEqual(error_slope([1, 10, 100], [1.0, 0.1, 0.01]), -1.0)
        self.assertAlmostEqual(error_slope([1, 10, 100, 1000], [1.0, None, 0.01, 0.0]), -1.0)
        self.assertIsNone(error_slope([1, 10], [1.0, None]))


class TestTimeAverages(unittest.TestCase):
    def test_two_atoms(self):
        result = time_average(two_atoms(0.7), 1.0, 5.0, dt=0.01, tolerance=1e-8)

        self.assertAlmostEqual(result.value, two_atom_average(0.7, 5.0, alpha=1.0), places=7)
        self.assertLess(result.error_estimate, 1e-8)
        self.assertAlmostEqual(result.quad_step, 0.01 / 2 ** (result.halvings + 1))

    def test_closed_form(self):
        self.assertAlmostEqual(two_atom_average(0.0, 2.0), 1.0)
        self.assertAlmostEqual(two_atom_average(math.pi, 2.0, alpha=1.0), 1.0)
        self.assertAlmostEqual(two_atom_average(0.0, 4.0, alpha=1.0, weight=0.25), 1.0)
        self.assertRaises(DomainError, two_atom_average, 1.0, 0.0)

    def test_orthogonal_equidistant(self):
        for p in (4, 8):
            with self.subTest(p=p):
                result = time_average(equidistant_raw(p), 1.0, p - 1.0, tolerance=1e-6)

                self.assertLessEqual(result.value, 1.0 + 1e-6)
                self.assertLess(result.error_estimate, 1e-6)

    def test_invalid_arguments(self):
        self.assertRaises(DomainError, time_average, two_atoms(0.5), 1.0, 0.0)
        self.assertRaises(DomainError, time_average, two_atoms(0.5), 1.0, 1.0, dt=-0.1)
        self.assertRaises(DomainError, time_average, two_atoms(0.5), 1.0, 1.0, tolerance=0.0)

    def test_document(self):
        document = time_average(two_atoms(0.5), 0.5, 2.0, dt=0.1).to_document()

        self.assertEqual(document.T, 2.0)
        self.assertEqual(document.alpha, 0.5)
        self.assertEqual(document.halvings, 0)


if __name__ == '__main__':
    unittest.main()
