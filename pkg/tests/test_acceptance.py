"""
Tests for the acceptance suite and its registry
"""
import unittest

from unittest import mock

from anticipation_lab import acceptance
from anticipation_lab.exceptions import Infeasible


def criterion(name: str):
    return dict(acceptance.CRITERIA)[name]


class TestRegistry(unittest.TestCase):
    def test_every_criterion_is_registered_once(self):
        names = [name for name, _ in acceptance.CRITERIA]

        self.assertEqual(len(names), 13)
        self.assertEqual(len(set(names)), len(names))
        self.assertIn("uniform_inversion", names)
        self.assertIn("expected_strength", names)

    def test_trials(self):
        self.assertEqual(acceptance._trials(500, False), 500)
        self.assertEqual(acceptance._trials(500, True), 50)
        self.assertEqual(acceptance._trials(5, True), 1)


class TestCriteria(unittest.TestCase):
    def assertPasses(self, name: str):
        passed, details = criterion(name)(None, True)
        self.assertTrue(passed, f"{name} failed: {details}")
        return details

    def test_lemma2_identity(self):
        details = self.assertPasses("lemma2_identity")
        self.assertLess(details["max_deviation"], 1e-10)

    def test_orthogonal_equidistant(self):
        details = self.assertPasses("orthogonal_equidistant")
        self.assertEqual(set(details), {"p=4", "p=8", "p=16"})

    def test_uniform_inversion(self):
        self.assertPasses("uniform_inversion")

    def test_isolated_atom(self):
        details = self.assertPasses("isolated_atom_dirichlet")
        self.assertEqual(len(details["errors"]), 7)

    def test_difference_routes(self):
        self.assertPasses("spectral_difference_routes")

    def test_model_b(self):
        details = self.assertPasses("model_b")
        self.assertEqual(len(details["relative_errors"]), 3)

    def test_model_c(self):
        details = self.assertPasses("model_c")
        self.assertLessEqual(abs(details["argmax"] - 32), 1)

    def test_order1_against_linear_program(self):
        details = self.assertPasses("order1_against_linear_program")
        self.assertGreater(details["compared"], 0)
        self.assertEqual(details["disagreements"], 0)

    def test_prony_round_trip(self):
        details = self.assertPasses("prony_round_trip")
        self.assertLess(details["position_error"], 1e-6)

    def test_periodic_inversion(self):
        details = self.assertPasses("periodic_inversion")
        self.assertEqual(details["peaks"], 4)

    def test_orthogonal_time_average(self):
        details = self.assertPasses("orthogonal_time_average")
        self.assertEqual(set(details), {"p=4", "p=8", "p=16"})

    def test_positive_evolutions(self):
        details = self.assertPasses("positive_evolutions")
        self.assertEqual(details["scenarios"], 50)
        self.assertEqual(details["nesting_violations"], 0)

    def test_expected_strength(self):
        details = self.assertPasses("expected_strength")
        self.assertTrue(details["holds"])


class TestRunAcceptance(unittest.TestCase):
    def test_whole_suite_passes(self):
        results = acceptance.run_acceptance(threads=2, quick=True)

        self.assertEqual([result.name for result in results], [name for name, _ in acceptance.CRITERIA])

        for result in results:
            with self.subTest(criterion=result.name):
                self.assertTrue(result.passed, f"{result.name} failed: {result.details}")

        self.assertTrue(acceptance.selftest_document(results, quick=True).passed)

    def test_errors_fail_their_criterion(self):
        def broken(threads, quick):
            raise Infeasible("nothing to solve")

        def fine(threads, quick):
            return True, {"threads": threads}

        with mock.patch.object(acceptance, "CRITERIA", [("broken", broken), ("fine", fine)]):
            results = acceptance.run_acceptance(threads=2, quick=True)

        self.assertEqual([result.name for result in results], ["broken", "fine"])
        self.assertFalse(results[0].passed)
        self.assertEqual(results[0].details, {"error": "nothing to solve"})
        self.assertTrue(results[1].passed)
        self.assertEqual(results[1].details, {"threads": 2})

        document = acceptance.selftest_document(results, quick=True)

        self.assertFalse(document.passed)
        self.assertTrue(document.quick)
        self.assertEqual(len(document.criteria), 2)
        self.assertEqual(document.criteria[1].name, "fine")

    def test_all_passing(self):
        with mock.patch.object(acceptance, "CRITERIA", [("fine", lambda threads, quick: (1, {}))]):
            results = acceptance.run_acceptance()

        self.assertIs(results[0].passed, True)
        self.assertTrue(acceptance.selftest_document(results).passed)


if __name__ == '__main__':
    unittest.main()
