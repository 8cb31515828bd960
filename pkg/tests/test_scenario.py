"""
Tests for duality systems, scenarios, spectrum recovery and the positivity experiments
"""
import math
import unittest

import numpy

from anticipation_lab.exceptions import ContractError
from anticipation_lab.exceptions import DomainError
from anticipation_lab.exceptions import IllConditioned
from anticipation_lab.exceptions import PartitionDegenerate
from anticipation_lab.measures import RawPointMeasure
from anticipation_lab.measures import ReducedMeasure
from anticipation_lab.measures import amplitudes
from anticipation_lab.measures import gapped_spectrum
from anticipation_lab.measures import reduce
from anticipation_lab.measures import reduced_positions
from anticipation_lab.scenario import Scenario
from anticipation_lab.scenario import admissible_partition
from anticipation_lab.scenario import build_scenario
from anticipation_lab.scenario import char_poly_from_spectrum
from anticipation_lab.scenario import classify_spectrum
from anticipation_lab.scenario import clustered_positivity
from anticipation_lab.scenario import construct_nu_q_from_nu_s
from anticipation_lab.scenario import duality_matrix
from anticipation_lab.scenario import duality_residuals
from anticipation_lab.scenario import find_roots
from anticipation_lab.scenario import homogeneous_basis
from anticipation_lab.scenario import lift_joint_measure
from anticipation_lab.scenario import order1_criterion
from anticipation_lab.scenario import probe_positivity_domain
from anticipation_lab.scenario import recover_from_amplitudes
from anticipation_lab.scenario import solve_rho
from anticipation_lab.scenario import solve_rho_nonneg
from anticipation_lab.scenario import spectrum_round_trip_error
from anticipation_lab.scenario import support_span
from anticipation_lab.utilities.common import trial_generator

from tests.mocks import SEED
from tests.mocks import equidistant_reduced
from tests.mocks import orthogonal_scenario
from tests.mocks import random_raw_measure
from tests.mocks import two_atoms


def narrow_spectrum() -> ReducedMeasure:
    """
    Three atoms on an arc shorter than π; the unique order 1 solution goes negative at 0
    """
    return ReducedMeasure.from_atoms([-1.0, 0.0, 1.0], probability=True)


class TestDuality(unittest.TestCase):
    def test_matrix_shape(self):
        matrix, right_hand_side = duality_matrix(equidistant_reduced(5), 2)

        self.assertEqual(matrix.shape, (5, 5))
        numpy.testing.assert_array_equal(right_hand_side, [1, 0, 0, 0, 0])

    def test_minimum_norm_over_equidistant_atoms(self):
        rho = solve_rho(equidistant_reduced(4), 1)
        numpy.testing.assert_allclose(rho, numpy.ones(4), atol=1e-12)

    def test_minimum_norm_matches_the_normal_equations(self):
        for trial_index in range(8):
            nu_q = reduce(random_raw_measure(trial_index, d=9))
            kappas, weights = nu_q.kappas, nu_q.real_weights

            for L in range(1, (nu_q.size - 1) // 2 + 1):
                with self.subTest(trial=trial_index, L=L):
                    waves = numpy.exp(1j * numpy.multiply.outer(numpy.arange(L + 1), kappas)) * weights
                    constraints = numpy.vstack((waves.real, waves.imag[1:]))
                    target = numpy.eye(2 * L + 1)[0]

                    # minimizing Σ ρ²·w under Aρ = e_0 gives ρ = W⁻¹Aᵀ(AW⁻¹Aᵀ)⁻¹e_0
                    scaled = constraints / weights
                    expected = scaled.T @ numpy.linalg.solve(scaled @ constraints.T, target)

                    rho = solve_rho(nu_q, L)

                    numpy.testing.assert_allclose(rho, expected, atol=1e-8)
                    self.assertLessEqual(duality_residuals(nu_q, L, rho), 1e-8)

    def test_order_zero_is_constant(self):
        for trial_index in range(8):
            nu_q = reduce(random_raw_measure(trial_index))

            with self.subTest(trial=trial_index):
                numpy.testing.assert_allclose(solve_rho(nu_q, 0), numpy.ones(nu_q.size), atol=1e-12)

    def test_partition_solver(self):
        rho = solve_rho(equidistant_reduced(3), 1, solver="partition")
        numpy.testing.assert_allclose(rho, numpy.ones(3), atol=1e-12)

        rho = solve_rho(equidistant_reduced(4), 1, solver="partition")
        self.assertLessEqual(duality_residuals(equidistant_reduced(4), 1, rho), 1e-10)

    def test_partition_with_empty_interval(self):
        nu_q = ReducedMeasure.from_atoms([-3.0, -2.9, 3.0], probability=True)
        self.assertRaises(PartitionDegenerate, solve_rho, nu_q, 1, "partition")

    def test_unknown_solver(self):
        self.assertRaises(DomainError, solve_rho, equidistant_reduced(4), 1, "guess")

    def test_order_must_stay_below_d(self):
        self.assertRaises(DomainError, solve_rho, equidistant_reduced(3), 3)
        self.assertRaises(DomainError, solve_rho_nonneg, equidistant_reduced(3), 3)

    def test_non_probability_measures_are_rejected(self):
        nu_q = ReducedMeasure.from_atoms([-1.0, 1.0], [2.0, 3.0])
        self.assertRaises(DomainError, solve_rho, nu_q, 1)
        self.assertRaises(DomainError, order1_criterion, nu_q)

    def test_homogeneous_basis(self):
        generator = trial_generator(SEED, 0)
        nu_q = gapped_spectrum(generator, 5, 0.2)

        rho, basis = solve_rho(nu_q, 1, with_basis=True)
        matrix, _ = duality_matrix(nu_q, 1)

        self.assertEqual(basis.shape, (5, 2))
        numpy.testing.assert_allclose(matrix @ basis, numpy.zeros((3, 2)), atol=1e-12)

        shifted = rho + basis @ numpy.array([0.3, -0.7])
        self.assertLessEqual(duality_residuals(nu_q, 1, shifted), 1e-10)
        self.assertEqual(homogeneous_basis(nu_q, 1).shape, basis.shape)

    def test_residuals_need_one_value_per_atom(self):
        self.assertRaises(DomainError, duality_residuals, equidistant_reduced(4), 1, [1.0, 1.0])

    def test_linear_program(self):
        rho, margin = solve_rho_nonneg(equidistant_reduced(4), 1)

        self.assertAlmostEqual(margin, 1.0, places=7)
        self.assertLessEqual(duality_residuals(equidistant_reduced(4), 1, rho), 1e-8)

        _, margin = solve_rho_nonneg(narrow_spectrum(), 1)
        self.assertLess(margin, 0)

    def test_support_span(self):
        self.assertAlmostEqual(support_span(ReducedMeasure.from_atoms([-3.0, 3.0], probability=True)), 2 * math.pi - 6.0)
        self.assertEqual(support_span(ReducedMeasure.from_atoms([0.5], probability=True)), 0.0)

    def test_order1_criterion(self):
        self.assertTrue(order1_criterion(equidistant_reduced(3)))
        self.assertFalse(order1_criterion(narrow_spectrum()))
        self.assertFalse(order1_criterion(ReducedMeasure.from_atoms([-2.0, 2.0], probability=True)))

    def test_classify_spectrum(self):
        self.assertEqual(classify_spectrum(equidistant_reduced(3), 1), "positive")
        self.assertEqual(classify_spectrum(narrow_spectrum(), 1), "negative")
        self.assertEqual(classify_spectrum(ReducedMeasure.from_atoms([-2.0, 2.0], probability=True), 1), "infeasible")
        self.assertEqual(classify_spectrum(narrow_spectrum(), 0), "positive")


class TestScenario(unittest.TestCase):
    def test_orthogonal_scenario(self):
        scenario, _ = orthogonal_scenario(4)

        self.assertTrue(scenario.positive)
        self.assertAlmostEqual(scenario.norm1, 1.0, places=12)
        self.assertAlmostEqual(scenario.zeta, 1.0, places=12)
        numpy.testing.assert_array_equal(scenario.sign_fn, numpy.ones(4, dtype=int))
        numpy.testing.assert_allclose(scenario.nu_s.real_weights, scenario.nu_q.real_weights)
        numpy.testing.assert_allclose(scenario.nu_r.real_weights, scenario.nu_q.real_weights)
        numpy.testing.assert_allclose(scenario.sigma, numpy.full(4, 0.25))

    def test_scenarios_are_frozen(self):
        scenario, _ = orthogonal_scenario(3)

        with self.assertRaises(ValueError):
            scenario.rho[0] = 2.0

        with self.assertRaises(TypeError):
            scenario.zeta = 0.5

    def test_rho_must_solve_the_system(self):
        self.assertRaises(ContractError, build_scenario, equidistant_reduced(4), 1, [2.0, 0.0, 0.0, 0.0])

    def test_non_positive_scenario(self):
        nu_q = narrow_spectrum()
        scenario = build_scenario(nu_q, 1, solve_rho(nu_q, 1))

        self.assertFalse(scenario.positive)
        self.assertGreater(scenario.norm1, 1.0)
        numpy.testing.assert_array_equal(scenario.sign_fn, [1, -1, 1])
        self.assertTrue(0 < scenario.zeta <= 1)
        self.assertTrue(scenario.nu_s.probability)

    def test_document_round_trip(self):
        scenario, _ = orthogonal_scenario(5, L=2)
        restored = Scenario.from_document(scenario.to_document())

        self.assertEqual(restored.L, 2)
        self.assertAlmostEqual(restored.zeta, scenario.zeta)
        numpy.testing.assert_allclose(restored.rho, scenario.rho)
        self.assertEqual(restored.nu_q, scenario.nu_q)

    def test_lift_onto_the_raw_measure(self):
        scenario, raw = orthogonal_scenario(4)
        lifted = lift_joint_measure(scenario, raw)

        numpy.testing.assert_allclose(lifted.positions, raw.positions)
        numpy.testing.assert_allclose(lifted.real_weights, raw.real_weights)

        # Atoms 2π apart reduce onto the same atom of ν_q and share its factor
        shifted = RawPointMeasure.from_atoms(
            numpy.concatenate((raw.positions, raw.positions + 2 * math.pi)),
            numpy.full(8, 1 / 8),
            probability=True
        )
        numpy.testing.assert_allclose(lift_joint_measure(scenario, shifted).real_weights, numpy.full(8, 1 / 8))

    def test_lift_rejects_foreign_atoms(self):
        scenario, _ = orthogonal_scenario(4)
        stranger = RawPointMeasure.from_atoms([0.3, 1.1], probability=True)

        self.assertRaises(DomainError, lift_joint_measure, scenario, stranger)

    def test_construct_nu_q(self):
        nu_s = equidistant_reduced(4)
        zeta = 0.9

        self.assertTrue(admissible_partition(nu_s, zeta, [0, 1]))

        nu_q = construct_nu_q_from_nu_s(nu_s, zeta, [0, 1])

        x = zeta - math.sqrt(1 - zeta ** 2)
        y = zeta + math.sqrt(1 - zeta ** 2)
        scales = numpy.array([x, x, y, y])

        self.assertTrue(nu_q.probability)
        numpy.testing.assert_allclose(nu_q.real_weights, scales ** 2 / 4)

        # ρ = 1/v² gives back ν_s and ζ
        scenario = build_scenario(nu_q, 3, 1 / scales ** 2)

        self.assertTrue(scenario.positive)
        self.assertAlmostEqual(scenario.zeta, zeta, places=10)
        numpy.testing.assert_allclose(scenario.nu_s.real_weights, nu_s.real_weights)

    def test_construct_nu_q_limits(self):
        nu_s = equidistant_reduced(4)

        self.assertFalse(admissible_partition(nu_s, 0.6, [0, 1]))
        self.assertRaises(DomainError, construct_nu_q_from_nu_s, nu_s, 0.6, [0, 1])
        self.assertRaises(DomainError, construct_nu_q_from_nu_s, nu_s, 0.9, [0, 1, 2, 3])
        self.assertRaises(DomainError, construct_nu_q_from_nu_s, nu_s, 0.9, [7])
        self.assertRaises(DomainError, construct_nu_q_from_nu_s, nu_s, 1.5, [0])
        self.assertIs(construct_nu_q_from_nu_s(nu_s, 1.0, [0]), nu_s)


class TestRecovery(unittest.TestCase):
    def test_characteristic_polynomial(self):
        generator = trial_generator(SEED, 1)
        kappas = numpy.sort(generator.uniform(-math.pi, math.pi, size=5))

        polynomial = char_poly_from_spectrum(kappas)

        self.assertEqual(polynomial.degree, 5)
        self.assertLess(polynomial.symmetry_defect(), 1e-12)
        self.assertEqual(polynomial.a(0), -1)
        numpy.testing.assert_allclose(numpy.abs(polynomial(numpy.exp(-1j * kappas))), numpy.zeros(5), atol=1e-12)

        recovered = numpy.sort(reduced_positions(-numpy.angle(find_roots(polynomial))))
        numpy.testing.assert_allclose(recovered, kappas, atol=1e-10)

    def test_repeated_positions(self):
        self.assertRaises(DomainError, char_poly_from_spectrum, [0.5, 0.5 + 2 * math.pi])
        self.assertRaises(DomainError, char_poly_from_spectrum, [])

    def test_round_trip(self):
        for d in (1, 2, 3, 4):
            with self.subTest(d=d):
                measure = gapped_spectrum(trial_generator(SEED, d), d, 0.3)
                recovered = recover_from_amplitudes(amplitudes(measure, 2 * d - 1), d)

                position_error, weight_error = spectrum_round_trip_error(
                    measure.kappas,
                    measure.real_weights,
                    recovered
                )

                self.assertLess(position_error, 1e-8)
                self.assertLess(weight_error, 1e-8)
                self.assertTrue(recovered.to_measure().probability)
                self.assertLess(recovered.condition_report.max_unit_deviation, 1e-8)

    def test_too_few_amplitudes(self):
        beta = amplitudes(equidistant_reduced(3), 3)
        self.assertRaises(DomainError, recover_from_amplitudes, beta, 3)

    def test_more_atoms_than_the_measure_holds(self):
        beta = amplitudes(two_atoms(1.0, probability=True), 5)
        self.assertRaises(IllConditioned, recover_from_amplitudes, beta, 3)

    def test_mismatched_sizes(self):
        measure = gapped_spectrum(trial_generator(SEED, 9), 2, 0.5)
        recovered = recover_from_amplitudes(amplitudes(measure, 3), 2)

        self.assertEqual(spectrum_round_trip_error(numpy.zeros(3), numpy.zeros(3), recovered), (math.inf, math.inf))


class TestPositivityExperiments(unittest.TestCase):
    def test_probe_positivity_domain(self):
        report = probe_positivity_domain(d=4, L=2, trials=12, seed=SEED, threads=1)

        self.assertEqual(
            report.positive + report.boundary + report.negative + report.infeasible,
            12
        )
        self.assertEqual(report.nesting_violations, 0)
        self.assertGreaterEqual(report.positive_lower_order, report.positive)
        self.assertTrue(0 <= report.positive_fraction <= 1)

    def test_probe_does_not_depend_on_threads(self):
        single = probe_positivity_domain(d=5, L=2, trials=10, seed=SEED, threads=1)
        several = probe_positivity_domain(d=5, L=2, trials=10, seed=SEED, threads=3)

        self.assertEqual(single.dict(), several.dict())

    def test_top_order_needs_a_periodic_spectrum(self):
        report = probe_positivity_domain(d=4, L=3, trials=20, seed=SEED, threads=1)

        self.assertEqual(report.positive, 0)
        self.assertEqual(report.nesting_violations, 0)

    def test_part_of_the_domain_is_positive(self):
        report = probe_positivity_domain(d=5, L=2, trials=100, seed=SEED, threads=2)

        self.assertGreater(report.positive, 0)
        self.assertLess(report.positive, report.trials)
        self.assertTrue(0 < report.positive_fraction < 1)
        self.assertEqual(report.nesting_violations, 0)

    def test_probe_limits(self):
        self.assertRaises(DomainError, probe_positivity_domain, 3, 3, 5, SEED)
        self.assertRaises(DomainError, probe_positivity_domain, 3, 0, 5, SEED)
        self.assertRaises(DomainError, probe_positivity_domain, 3, 1, 0, SEED)

    def test_narrow_clusters_stay_positive(self):
        report = clustered_positivity(d=4, L=1, half_width=0.05, cluster_size=3)

        self.assertEqual(report.classification, "positive")
        self.assertTrue(report.feasible)
        self.assertGreater(report.margin, 0)

        report = clustered_positivity(d=4, L=1, half_width=0.05, cluster_size=3, seed=SEED)
        self.assertTrue(report.feasible)


if __name__ == '__main__':
    unittest.main()
