"""
Tests for the reconstruction of ν and F from amplitudes and for the localization of atoms
"""
import math
import unittest

import numpy

from anticipation_lab.exceptions import DomainError
from anticipation_lab.inversion import cumulative_oracle
from anticipation_lab.inversion import integrated_error
from anticipation_lab.inversion import point_spectrum_consistency
from anticipation_lab.inversion import reconstruct_F
from anticipation_lab.inversion import reconstruct_nu
from anticipation_lab.inversion import tail_bound
from anticipation_lab.inversion import uniform_grid
from anticipation_lab.measures import AmplitudeSequence
from anticipation_lab.measures import ReducedMeasure
from anticipation_lab.measures import amplitudes
from anticipation_lab.measures import gapped_spectrum
from anticipation_lab.utilities.common import trial_generator

from tests.mocks import SEED
from tests.mocks import equidistant_reduced
from tests.mocks import periodic_amplitudes


def away_from(atoms: numpy.ndarray, points: numpy.ndarray, distance: float) -> numpy.ndarray:
    gaps = numpy.abs(numpy.angle(numpy.exp(1j * numpy.subtract.outer(points, atoms))))
    return points[numpy.min(gaps, axis=1) >= distance]


class TestSeries(unittest.TestCase):
    def test_uniform_grid(self):
        numpy.testing.assert_allclose(uniform_grid(4), [-math.pi, -math.pi / 2, 0.0, math.pi / 2])
        self.assertRaises(DomainError, uniform_grid, 0)

    def test_tail_bound(self):
        expected = 2 * (math.pi ** 2 / 6 - math.fsum(1 / n ** 2 for n in range(1, 11)))

        self.assertAlmostEqual(tail_bound(1.0, 10), expected, places=12)
        self.assertAlmostEqual(tail_bound(0.5j, 10), expected / 2, places=12)

    def test_flat_measure(self):
        grid = uniform_grid(64)

        nu = reconstruct_nu(AmplitudeSequence.delta(16), 16, 64)
        numpy.testing.assert_allclose(nu.nu_samples, (1 + grid / math.pi) / 2, atol=1e-14)

        F = reconstruct_F(AmplitudeSequence.delta(16), 16, 64)
        numpy.testing.assert_allclose(
            F.F_samples,
            (-1 - 2 * grid / math.pi - grid ** 2 / math.pi ** 2) / 8,
            atol=1e-14
        )
        numpy.testing.assert_allclose(F.nu_samples, nu.nu_samples, atol=1e-14)
        self.assertEqual(F.quad_coeff, 1)

    def test_fft_matches_direct_summation(self):
        measure = gapped_spectrum(trial_generator(SEED, 0), 4, 0.3)
        beta = amplitudes(measure, 100)

        for smoothing in ("none", "cesaro"):
            with self.subTest(smoothing=smoothing):
                fast = reconstruct_F(beta, 100, 128, smoothing)
                direct = reconstruct_F(beta, 100, uniform_grid(128), smoothing)

                numpy.testing.assert_allclose(fast.nu_samples, direct.nu_samples, atol=1e-10)
                numpy.testing.assert_allclose(fast.F_samples, direct.F_samples, atol=1e-10)

    def test_boundary_conditions(self):
        measure = gapped_spectrum(trial_generator(SEED, 1), 5, 0.2)
        result = reconstruct_F(amplitudes(measure, 50), 50, 256)

        self.assertLess(abs(result.nu_samples[0]), 1e-12)
        self.assertLess(abs(result.F_samples[0]), 1e-12)
        self.assertLess(float(numpy.max(numpy.abs(result.nu_samples.imag))), 1e-10)

    def test_linearity(self):
        first = amplitudes(gapped_spectrum(trial_generator(SEED, 2), 3, 0.3), 40)
        second = amplitudes(gapped_spectrum(trial_generator(SEED, 3), 2, 0.3), 40)
        grid = numpy.linspace(-math.pi, 3.0, 33)

        numpy.testing.assert_allclose(
            reconstruct_nu(first + second, 40, grid).nu_samples,
            reconstruct_nu(first, 40, grid).nu_samples + reconstruct_nu(second, 40, grid).nu_samples,
            atol=1e-12
        )

    def test_periodic_staircase(self):
        atoms = equidistant_reduced(4)
        points = away_from(atoms.kappas, numpy.linspace(-math.pi, math.pi, 400, endpoint=False), 0.1)

        result = reconstruct_nu(periodic_amplitudes(4, 4096), 4096, points, "cesaro")
        expected = cumulative_oracle(atoms, points, split_boundary=True)

        self.assertLess(float(numpy.max(numpy.abs(result.nu_samples - expected))), 0.01)
        numpy.testing.assert_allclose(numpy.unique(numpy.round(expected.real, 12)), [0.125, 0.375, 0.625, 0.875])

    def test_integrated_error_shrinks(self):
        measure = gapped_spectrum(trial_generator(SEED, 4), 3, 0.5)
        beta = amplitudes(measure, 8192)

        coarse = integrated_error(reconstruct_nu(beta, 256, 1 << 14), measure)
        fine = integrated_error(reconstruct_nu(beta, 8192, 1 << 14), measure)

        self.assertLess(fine, coarse)
        self.assertLess(fine, 1e-3)

    def test_invalid_arguments(self):
        beta = AmplitudeSequence.delta(8)

        self.assertRaises(DomainError, reconstruct_nu, beta, 0, 16)
        self.assertRaises(DomainError, reconstruct_nu, beta, 9, 16)
        self.assertRaises(DomainError, reconstruct_nu, beta, 8, 16, "lanczos")
        self.assertRaises(DomainError, reconstruct_nu, beta, 8, [math.pi])
        self.assertRaises(DomainError, reconstruct_F, beta, 8, [])
        self.assertRaises(DomainError, integrated_error, reconstruct_nu(beta, 8, 1), equidistant_reduced(2))

    def test_document_and_rows(self):
        result = reconstruct_F(AmplitudeSequence.delta(4), 4, 8)
        document = result.to_document()

        self.assertEqual(document.grid_size, 8)
        self.assertAlmostEqual(document.grid_min, -math.pi)
        self.assertEqual(len(result.to_csv_rows()), 8)
        self.assertIsNone(reconstruct_nu(AmplitudeSequence.delta(4), 4, 8).to_csv_rows()[0][3])


class TestOracle(unittest.TestCase):
    def test_cumulative_oracle(self):
        measure = ReducedMeasure.from_atoms([-1.0, 0.5, 2.0], [0.2, 0.3, 0.5], probability=True)

        self.assertEqual(cumulative_oracle(measure, -math.pi), 0)
        self.assertAlmostEqual(cumulative_oracle(measure, math.pi).real, 1.0)
        numpy.testing.assert_allclose(cumulative_oracle(measure, [0.0, 1.0, 2.0, 2.5]), [0.2, 0.5, 0.5, 1.0])

    def test_split_boundary(self):
        atoms = equidistant_reduced(4)

        self.assertEqual(cumulative_oracle(atoms, -math.pi, split_boundary=True), 0)
        self.assertAlmostEqual(cumulative_oracle(atoms, -3.0, split_boundary=True).real, 0.125)
        self.assertAlmostEqual(cumulative_oracle(atoms, -3.0).real, 0.25)


class TestPointSpectrum(unittest.TestCase):
    def test_single_atom(self):
        beta = amplitudes(ReducedMeasure.from_atoms([0.0], probability=True), 1024)
        report = point_spectrum_consistency(beta, 1024)

        self.assertEqual(report.count, 1)
        self.assertAlmostEqual(float(report.kappas[0]), 0.0, places=12)
        self.assertGreater(float(report.masses[0]), 0.97)
        self.assertLessEqual(float(report.masses[0]), 1.0 + 1e-9)

    def test_periodic_measure(self):
        report = point_spectrum_consistency(periodic_amplitudes(4, 1024), 1024)

        self.assertEqual(report.count, 4)
        numpy.testing.assert_allclose(report.kappas, equidistant_reduced(4).kappas, atol=1e-9)
        numpy.testing.assert_allclose(report.masses, numpy.full(4, 0.25), atol=0.01)

    def test_random_atoms(self):
        measure = gapped_spectrum(trial_generator(SEED, 5), 3, 0.5)
        report = point_spectrum_consistency(amplitudes(measure, 2048), 2048)
        step = 2 * math.pi / (1 << 15)

        self.assertEqual(report.count, 3)

        gaps = numpy.abs(numpy.angle(numpy.exp(1j * (report.kappas - measure.kappas))))
        self.assertLessEqual(float(numpy.max(gaps)), step)
        self.assertEqual(report.to_document().peaks[0].kappa, float(report.kappas[0]))

    def test_invalid_arguments(self):
        beta = AmplitudeSequence.delta(8)

        self.assertRaises(DomainError, point_spectrum_consistency, beta, 0)
        self.assertRaises(DomainError, point_spectrum_consistency, beta, 16)
        self.assertRaises(DomainError, point_spectrum_consistency, beta, 8, resolution=4.0)


if __name__ == '__main__':
    unittest.main()
