"""
Runs the command line end to end inside a temporary directory
"""
import contextlib
import io
import json
import pathlib
import tempfile
import unittest

from anticipation_lab.application import EXIT_FAILURE
from anticipation_lab.application import EXIT_SUCCESS
from anticipation_lab.application import EXIT_USAGE
from anticipation_lab.application import main
from anticipation_lab.configuration import REQUIRED_FIELDS
from anticipation_lab.configuration import missing_flags
from anticipation_lab.documents import ScenarioDocument
from anticipation_lab.documents.measure import MeasureDocument
from anticipation_lab.handlers import get_command_handlers
from anticipation_lab.measures import ReducedMeasure
from anticipation_lab.utilities.constants import INVERSION_CSV_HEADER

from tests.mocks import write_measure_file


class TestApplication(unittest.TestCase):
    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.root = pathlib.Path(self.directory.name)

    def tearDown(self):
        self.directory.cleanup()

    def path(self, name: str) -> str:
        return str(self.root / name)

    def run_command(self, *arguments: str) -> int:
        return main(list(arguments))

    def equidistant_file(self, d: int = 4) -> str:
        path = self.path(f"equidistant_{d}.json")
        self.assertEqual(
            self.run_command("spectrum", "gen", "--kind", "equidistant", "--d", str(d), "-o", path),
            EXIT_SUCCESS
        )
        return path

    def test_every_command_has_a_handler(self):
        self.assertEqual(set(get_command_handlers()), set(REQUIRED_FIELDS))

    def test_generate_hydrogen(self):
        path = self.path("hydrogen.json")

        self.assertEqual(
            self.run_command("spectrum", "gen", "--kind", "hydrogen", "--d", "8", "--scale", "100", "-o", path),
            EXIT_SUCCESS
        )

        document = MeasureDocument.parse(pathlib.Path(path))
        self.assertEqual(len(document.atoms), 8)
        self.assertFalse(document.is_reduced)
        self.assertAlmostEqual(document.atoms[0].lambda_, -100.0)
        self.assertAlmostEqual(document.atoms[1].lambda_, -25.0)

    def test_stdout(self):
        output = io.StringIO()

        with contextlib.redirect_stdout(output):
            code = self.run_command("spectrum", "gen", "--kind", "equidistant", "--d", "3")

        self.assertEqual(code, EXIT_SUCCESS)
        self.assertEqual(len(json.loads(output.getvalue())["atoms"]), 3)

    def test_reruns_are_identical(self):
        first, second = self.path("first.json"), self.path("second.json")

        for path in (first, second):
            self.assertEqual(
                self.run_command("spectrum", "gen", "--kind", "random", "--d", "5", "--seed", "7", "-o", path),
                EXIT_SUCCESS
            )

        self.assertEqual(pathlib.Path(first).read_bytes(), pathlib.Path(second).read_bytes())

    def test_solve_and_anticipate(self):
        measure = self.equidistant_file(4)
        scenario = self.path("scenario.json")
        report = self.path("report.json")

        self.assertEqual(
            self.run_command("evolve", "solve", "--measure", measure, "--order", "3", "-o", scenario),
            EXIT_SUCCESS
        )

        document = ScenarioDocument.parse(pathlib.Path(scenario))
        self.assertTrue(document.positive)
        self.assertEqual(document.L, 3)
        self.assertAlmostEqual(document.zeta, 1.0, places=10)

        self.assertEqual(
            self.run_command("anticipate", "--scenario", scenario, "--raw", measure, "--N", "3", "-o", report),
            EXIT_SUCCESS
        )

        written = json.loads(pathlib.Path(report).read_text())
        self.assertEqual(len(written["probs"]), 4)
        self.assertAlmostEqual(sum(written["probs"]), 1.0, places=10)
        self.assertEqual(set(written["moments"]), {"1", "2"})
        self.assertIn("bounds", written)

    def test_linear_program_solver(self):
        scenario = self.path("scenario.json")

        self.assertEqual(
            self.run_command(
                "evolve", "solve", "--measure", self.equidistant_file(3), "--order", "1", "--solver", "lp", "-o", scenario
            ),
            EXIT_SUCCESS
        )

        document = ScenarioDocument.parse(pathlib.Path(scenario))
        self.assertEqual(document.condition_report.classification, "positive")

    def test_non_positive_scenario_is_rejected(self):
        measure = str(write_measure_file(
            self.root,
            "narrow.json",
            ReducedMeasure.from_atoms([-1.0, 0.0, 1.0], probability=True)
        ))
        scenario = self.path("scenario.json")

        self.assertEqual(
            self.run_command("evolve", "solve", "--measure", measure, "--order", "1", "-o", scenario),
            EXIT_SUCCESS
        )
        self.assertFalse(ScenarioDocument.parse(pathlib.Path(scenario)).positive)

        self.assertEqual(
            self.run_command("anticipate", "--scenario", scenario, "--raw", measure, "--N", "2"),
            EXIT_FAILURE
        )

    def test_invert_to_csv(self):
        beta = self.path("beta.json")
        table = self.path("nu.csv")

        self.assertEqual(
            self.run_command("spectrum", "amplitudes", "--measure", self.equidistant_file(4), "--n-max", "16", "-o", beta),
            EXIT_SUCCESS
        )
        self.assertEqual(
            self.run_command("invert", "nu", "--beta", beta, "--N", "16", "--grid", "8", "-o", table),
            EXIT_SUCCESS
        )

        lines = pathlib.Path(table).read_text().splitlines()
        self.assertEqual(lines[0], ",".join(INVERSION_CSV_HEADER))
        self.assertEqual(len(lines), 9)
        self.assertEqual(lines[1].split(",")[3], "")

    def test_model_measure(self):
        path = self.path("model.json")

        self.assertEqual(
            self.run_command("anticipate", "model", "--kind", "b", "--L", "8", "--N", "128", "-o", path),
            EXIT_SUCCESS
        )

        written = json.loads(pathlib.Path(path).read_text())
        self.assertEqual(written["kind"], "b")
        self.assertEqual(len(written["probs"]), 8)

    def test_usage_errors(self):
        with contextlib.redirect_stderr(io.StringIO()):
            self.assertEqual(self.run_command("spectrum"), EXIT_USAGE)
            self.assertEqual(self.run_command("teleport"), EXIT_USAGE)
            self.assertEqual(self.run_command("spectrum", "gen", "--d", "four"), EXIT_USAGE)
            self.assertEqual(self.run_command("spectrum", "gen", "--kind", "random", "--d", "4"), EXIT_USAGE)
            self.assertEqual(self.run_command("invert", "nu", "--beta", "beta.json"), EXIT_USAGE)
            self.assertEqual(self.run_command("delta-kernel", "--pairing", "fejer"), EXIT_USAGE)

    def test_missing_flags_print_the_synopsis(self):
        errors = io.StringIO()

        with contextlib.redirect_stderr(errors):
            code = self.run_command("spectrum", "amplitudes", "--n-max", "4")

        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("usage:", errors.getvalue())
        self.assertIn("--measure", errors.getvalue())

    def test_unknown_solver_prints_the_synopsis(self):
        errors = io.StringIO()

        with contextlib.redirect_stderr(errors):
            code = self.run_command(
                "evolve", "solve", "--measure", self.equidistant_file(4), "--order", "3", "--solver", "qr"
            )

        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("usage:", errors.getvalue())

    def test_missing_flags(self):
        self.assertEqual(missing_flags("spectrum gen", {"kind": "random", "d": 4}), ["--seed"])
        self.assertEqual(missing_flags("spectrum gen", {"kind": "file"}), ["--path"])
        self.assertEqual(missing_flags("evolve solve", {"measure": "m.json"}), ["--order"])
        self.assertEqual(missing_flags("selftest", {}), [])

        self.assertEqual(
            self.run_command(
                "evolve", "solve", "--measure", self.equidistant_file(4), "--order", "3", "--solver", "min-norm",
                "-o", self.path("scenario.json")
            ),
            EXIT_SUCCESS
        )

    def test_rejected_arguments(self):
        measure = self.equidistant_file(4)

        self.assertEqual(
            self.run_command("spectrum", "amplitudes", "--measure", self.path("missing.json"), "--n-max", "4"),
            EXIT_FAILURE
        )
        self.assertEqual(
            self.run_command("evolve", "solve", "--measure", measure, "--order", "3", "-o", self.path("scenario.csv")),
            EXIT_FAILURE
        )


class TestSchemas(unittest.TestCase):
    def test_document_schemas(self):
        from generate_schema import document_schemas

        schemas = document_schemas()

        self.assertEqual(set(schemas), {"measure", "amplitudes", "scenario"})
        self.assertIn("atoms", schemas["measure"]["properties"])
        self.assertIn("rho", schemas["scenario"]["properties"])

        everything = document_schemas(include_outputs=True)
        self.assertEqual(len(everything), 11)
        self.assertIn("criteria", everything["selftest"]["properties"])

        self.assertEqual(set(document_schemas(only="inversion")), {"inversion"})


if __name__ == '__main__':
    unittest.main()
