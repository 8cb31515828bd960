"""
Tests for spectral differences, anticipation amplitudes, strength bounds and model measures
"""
import math
import unittest

import numpy

from anticipation_lab.anticipation import AnticipationReport
from anticipation_lab.anticipation import StochasticDifferenceModel
from anticipation_lab.anticipation import anticipation_amplitudes
from anticipation_lab.anticipation import difference_transform
from anticipation_lab.anticipation import equidistant_probabilities
from anticipation_lab.anticipation import expected_strength
from anticipation_lab.anticipation import half_integer_transform
from anticipation_lab.anticipation import lemma2_sum
from anticipation_lab.anticipation import lookahead_growth
from anticipation_lab.anticipation import model_measure
from anticipation_lab.anticipation import spectral_difference
from anticipation_lab.anticipation import statistics
from anticipation_lab.anticipation import strength_bound_check
from anticipation_lab.exceptions import ContractError
from anticipation_lab.exceptions import DomainError
from anticipation_lab.measures import RawPointMeasure
from anticipation_lab.measures import reduce
from anticipation_lab.scenario import build_scenario
from anticipation_lab.scenario import lift_joint_measure
from anticipation_lab.scenario import solve_rho
from anticipation_lab.utilities.common import trial_generator

from tests.mocks import SEED
from tests.mocks import equidistant_reduced
from tests.mocks import orthogonal_scenario


def folded_equidistant_raw() -> RawPointMeasure:
    """
    Four equidistant atoms, two of them moved into odd periods
    """
    return RawPointMeasure.from_atoms(
        [-math.pi, -math.pi / 2 + 2 * math.pi, 0.0, math.pi / 2 - 2 * math.pi],
        probability=True
    )


class TestSpectralDifference(unittest.TestCase):
    def test_parity_split(self):
        difference = spectral_difference(folded_equidistant_raw())

        numpy.testing.assert_allclose(difference.kappas, equidistant_reduced(4).kappas)
        numpy.testing.assert_allclose(difference.g0, [0.25, 0.0, 0.25, 0.0])
        numpy.testing.assert_allclose(difference.g1, [0.0, 0.25, 0.0, 0.25])
        numpy.testing.assert_allclose(difference.y, [1, -1, 1, -1])
        self.assertAlmostEqual(difference.y_norm_squared(), 1.0)
        self.assertAlmostEqual(difference.total_mass, 1.0)

    def test_even_periods_cancel(self):
        raw = RawPointMeasure.from_atoms([0.5, 0.5 + 4 * math.pi], probability=True)
        difference = spectral_difference(raw)

        self.assertEqual(difference.size, 1)
        numpy.testing.assert_allclose(difference.y, [1.0])

    def test_transforms_agree(self):
        raw = folded_equidistant_raw()
        n = numpy.arange(-6, 7)

        numpy.testing.assert_allclose(
            difference_transform(spectral_difference(raw), n),
            half_integer_transform(raw, n),
            atol=1e-12
        )
        self.assertIsInstance(difference_transform(spectral_difference(raw), 2), complex)

    def test_reduced_measures_are_rejected(self):
        self.assertRaises(DomainError, spectral_difference, equidistant_reduced(3))


class TestAnticipationAmplitudes(unittest.TestCase):
    def test_lemma2(self):
        for p in range(2, 21):
            with self.subTest(p=p):
                self.assertAlmostEqual(lemma2_sum(p), 1.0, places=12)
                self.assertAlmostEqual(math.fsum(equidistant_probabilities(p)), 1.0, places=12)

        self.assertRaises(DomainError, lemma2_sum, 1)

    def test_orthogonal_equidistant(self):
        scenario, raw = orthogonal_scenario(5)
        lifted = lift_joint_measure(scenario, raw)

        report = anticipation_amplitudes(scenario, lifted, 9)

        self.assertEqual(len(report.probs), 10)
        numpy.testing.assert_allclose(report.probs[:5], equidistant_probabilities(5), atol=1e-12)
        numpy.testing.assert_allclose(report.probs[5:], report.probs[:5], atol=1e-12)
        self.assertAlmostEqual(report.P(5), 1.0, places=12)
        self.assertAlmostEqual(report.P_N, math.fsum(report.probs[:9]), places=12)
        self.assertLess(report.route_agreement, 1e-10)

        retrospective = anticipation_amplitudes(scenario, lifted, 9, retrospective=True)

        self.assertTrue(retrospective.retrospective)
        numpy.testing.assert_allclose(retrospective.probs, report.probs, atol=1e-12)

    def test_folded_lift(self):
        raw = folded_equidistant_raw()
        scenario = build_scenario(reduce(raw), 3, numpy.ones(4))

        report = anticipation_amplitudes(scenario, raw, 7)

        numpy.testing.assert_allclose(report.alphas, half_integer_transform(raw, numpy.arange(8)), atol=1e-12)
        self.assertLess(report.route_agreement, 1e-10)

    def test_non_positive_scenarios_are_rejected(self):
        raw = RawPointMeasure.from_atoms([-1.0, 0.0, 1.0], probability=True)
        nu_q = reduce(raw)
        scenario = build_scenario(nu_q, 1, solve_rho(nu_q, 1))

        self.assertFalse(scenario.positive)
        self.assertRaises(ContractError, anticipation_amplitudes, scenario, raw, 3)

    def test_foreign_lift_is_rejected(self):
        scenario, _ = orthogonal_scenario(4)
        stranger = RawPointMeasure.from_atoms([0.1, 0.2], probability=True)

        self.assertRaises(DomainError, anticipation_amplitudes, scenario, stranger, 3)
        self.assertRaises(DomainError, anticipation_amplitudes, scenario, orthogonal_scenario(4)[1], -1)

    def test_statistics(self):
        report = AnticipationReport.from_probabilities([0.5, 0.25, 0.25])

        self.assertEqual(report.N, 3)
        self.assertAlmostEqual(report.P_N, 1.0)
        self.assertAlmostEqual(report.moments[1.0], 0.75)
        self.assertAlmostEqual(report.moments[2.0], 1.25)
        self.assertRaises(DomainError, report.P, 4)

        shortened = statistics(report.copy(update={"N": 1}), [1.0])
        self.assertAlmostEqual(shortened.P_N, 0.5)
        self.assertEqual(shortened.moments, {1.0: 0.0})

    def test_document(self):
        scenario, raw = orthogonal_scenario(3)
        document = anticipation_amplitudes(scenario, raw, 2).to_document()

        self.assertEqual(document.N, 2)
        self.assertEqual(len(document.alphas), 3)
        self.assertEqual(set(document.moments), {"1", "2"})


class TestStrengthBounds(unittest.TestCase):
    def test_orthogonal_chain(self):
        scenario, raw = orthogonal_scenario(4)
        report = anticipation_amplitudes(scenario, raw, 3)

        bounds = strength_bound_check(scenario, spectral_difference(raw), report)

        self.assertAlmostEqual(bounds.PL, 1.0, places=12)
        self.assertAlmostEqual(bounds.zeta2_y2, 1.0, places=12)
        self.assertAlmostEqual(bounds.zeta2, 1.0, places=12)
        self.assertGreaterEqual(bounds.slack, -1e-9)

    def test_short_reports_are_rejected(self):
        scenario, raw = orthogonal_scenario(4)
        report = anticipation_amplitudes(scenario, raw, 2)

        self.assertRaises(DomainError, strength_bound_check, scenario, spectral_difference(raw), report)

    def test_broken_chain(self):
        scenario, raw = orthogonal_scenario(4)
        report = AnticipationReport(N=4, alphas=numpy.ones(5), probs=numpy.ones(5))

        self.assertRaises(ContractError, strength_bound_check, scenario, spectral_difference(raw), report)

    def test_two_point_sampler(self):
        model = StochasticDifferenceModel.create(0.5, 0.25, size=4, seed=SEED)
        upper = 0.5 + 0.5 * math.sqrt(0.5 / 1.5)
        lower = 0.5 - 0.5 * math.sqrt(1.5 / 0.5)

        draws = numpy.concatenate([model.sample(trial_generator(SEED, index)) for index in range(2000)])

        self.assertTrue(numpy.all(numpy.isclose(draws, upper) | numpy.isclose(draws, lower)))
        self.assertAlmostEqual(float(numpy.mean(draws)), 0.5, delta=0.05)
        self.assertAlmostEqual(float(numpy.var(draws)), 0.25, delta=0.05)

        certain = StochasticDifferenceModel.create(1.0, 0.0, size=3, seed=SEED)
        numpy.testing.assert_array_equal(certain.sample(trial_generator(SEED, 0)), numpy.ones(3))

    def test_invalid_models(self):
        self.assertRaises(DomainError, StochasticDifferenceModel.create, 0.5, 0.9, 4, SEED)
        self.assertRaises(DomainError, StochasticDifferenceModel.create, 1.5, 0.0, 4, SEED)
        self.assertRaises(DomainError, StochasticDifferenceModel.create, 0.0, -0.1, 4, SEED)
        self.assertRaises(DomainError, StochasticDifferenceModel.create, 0.0, 0.5, 4, SEED, "gaussian")

    def test_expected_strength(self):
        scenario, _ = orthogonal_scenario(4)
        model = StochasticDifferenceModel.create(0.5, 0.25, size=4, seed=SEED)

        result = expected_strength(scenario, model, trials=400, threads=1)

        self.assertAlmostEqual(result.bound, 0.4375)
        self.assertTrue(result.holds)
        self.assertLess(result.estimate, result.bound)
        self.assertTrue(result.concentration_holds)
        self.assertEqual(result.trials, 400)

        threaded = expected_strength(scenario, model, trials=400, threads=4)
        self.assertEqual(threaded.estimate, result.estimate)

    def test_strength_sums_differ_by_one_term(self):
        scenario, raw = orthogonal_scenario(4)
        diff = spectral_difference(raw)
        report = anticipation_amplitudes(scenario, raw, scenario.L)

        numpy.testing.assert_allclose(diff.kappas, scenario.nu_s.kappas)

        bounds = strength_bound_check(scenario, diff, report)
        self.assertEqual(bounds.PL, report.P(scenario.L + 1))
        self.assertAlmostEqual(bounds.PL, math.fsum(report.probs[:scenario.L + 1]), places=15)

        # y fixed at the actual difference, so every trial reproduces the deterministic amplitudes
        model = StochasticDifferenceModel.create(diff.y, 0.0, size=diff.size, seed=SEED)
        result = expected_strength(scenario, model, trials=2, threads=1)

        self.assertAlmostEqual(result.estimate, report.P(scenario.L), places=12)
        self.assertAlmostEqual(result.standard_error, 0.0, places=12)
        self.assertAlmostEqual(bounds.PL - result.estimate, float(report.probs[scenario.L]), places=12)
        self.assertGreater(float(report.probs[scenario.L]), 1e-6)

    def test_expected_strength_limits(self):
        scenario, _ = orthogonal_scenario(4)

        self.assertRaises(
            DomainError,
            expected_strength,
            scenario,
            StochasticDifferenceModel.create(0.0, 0.5, size=3, seed=SEED),
            10
        )
        self.assertRaises(
            DomainError,
            expected_strength,
            scenario,
            StochasticDifferenceModel.create(0.0, 0.5, size=4, seed=SEED),
            1
        )


class TestModelMeasures(unittest.TestCase):
    def test_equal_signs(self):
        report = model_measure("b", 64, N=2048, eps=0.1)

        self.assertEqual(report.M, 205)
        self.assertEqual(len(report.probs), 64)
        numpy.testing.assert_allclose(report.probs, report.predicted_probs, rtol=1e-3)
        self.assertEqual(report.argmax, report.predictions.argmax)
        self.assertAlmostEqual(report.maximum, report.predictions.maximum, delta=1e-3)
        self.assertAlmostEqual(report.P_L, report.predictions.P_L, delta=0.05)
        self.assertAlmostEqual(math.fsum(report.measure.real_weights), 1.0)

    def test_alternating_signs(self):
        report = model_measure("c", 64, N=2048, eps=0.1)

        numpy.testing.assert_allclose(report.probs, report.predicted_probs, rtol=1e-3)
        self.assertLessEqual(abs(report.argmax - 32), 1)
        self.assertAlmostEqual(report.maximum, report.predictions.maximum, delta=1e-2)
        self.assertIsNone(report.predictions.minimum)
        self.assertAlmostEqual(math.fsum(report.measure.real_weights), 0.0)

    def test_document_and_rows(self):
        report = model_measure("b", 8, M=3, N=64, c=0.5)
        document = report.to_document()

        self.assertEqual(document.M, 3)
        self.assertAlmostEqual(document.eps, 3 / 64)
        self.assertAlmostEqual(document.log_L, math.log(8))
        self.assertEqual(len(report.to_csv_rows()), 8)
        self.assertEqual(len(report.to_csv_rows()[0]), 5)

    def test_invalid_models(self):
        self.assertRaises(DomainError, model_measure, "a", 4)
        self.assertRaises(DomainError, model_measure, "b", 0)
        self.assertRaises(DomainError, model_measure, "b", 4, eps=1.0)
        self.assertRaises(DomainError, model_measure, "b", 4, c=1.5)
        self.assertRaises(DomainError, model_measure, "b", 4, M=100, N=64)

    def test_lookahead_growth(self):
        rows = lookahead_growth("b", orders=(16, 32), N=256)

        self.assertEqual([row[0] for row in rows], [16, 32])
        self.assertAlmostEqual(rows[1][2], math.log(32))
        self.assertTrue(all(row[1] > 0 for row in rows))


if __name__ == '__main__':
    unittest.main()
