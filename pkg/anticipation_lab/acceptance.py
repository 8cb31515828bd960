"""
The acceptance suite: closed form results and property checks that a correct build reproduces

Every criterion is a function of (threads, quick) returning whether it passed along with the numbers it
looked at. `quick` cuts the trial counts of the sampling criteria for use inside unit tests
"""
import math
import time
import typing

import numpy

from pydantic import BaseModel
from pydantic import Field

from anticipation_lab.exceptions import AnticipationLabError
from anticipation_lab.exceptions import ContractError
from anticipation_lab.exceptions import Infeasible
from anticipation_lab.documents.acceptance import CriterionDocument
from anticipation_lab.documents.acceptance import SelfTestDocument
from anticipation_lab.anticipation import StochasticDifferenceModel
from anticipation_lab.anticipation import anticipation_amplitudes
from anticipation_lab.anticipation import difference_transform
from anticipation_lab.anticipation import equidistant_probabilities
from anticipation_lab.anticipation import expected_strength
from anticipation_lab.anticipation import half_integer_transform
from anticipation_lab.anticipation import lemma2_sum
from anticipation_lab.anticipation import model_measure
from anticipation_lab.anticipation import model_predictions
from anticipation_lab.anticipation import spectral_difference
from anticipation_lab.anticipation import strength_bound_check
from anticipation_lab.inversion import cumulative_oracle
from anticipation_lab.inversion import point_spectrum_consistency
from anticipation_lab.inversion import reconstruct_F
from anticipation_lab.inversion import reconstruct_nu
from anticipation_lab.inversion import uniform_grid
from anticipation_lab.kernels import KernelProbe
from anticipation_lab.kernels import convergence_table
from anticipation_lab.kernels import time_average
from anticipation_lab.measures import AmplitudeSequence
from anticipation_lab.measures import RawPointMeasure
from anticipation_lab.measures import ReducedMeasure
from anticipation_lab.measures import amplitudes
from anticipation_lab.measures import gapped_spectrum
from anticipation_lab.measures import gen_spectrum
from anticipation_lab.measures import reduce
from anticipation_lab.scenario import build_scenario
from anticipation_lab.scenario import lift_joint_measure
from anticipation_lab.scenario import order1_criterion
from anticipation_lab.scenario import recover_from_amplitudes
from anticipation_lab.scenario import solve_rho_nonneg
from anticipation_lab.scenario import spectrum_round_trip_error
from anticipation_lab.scenario import support_span
from anticipation_lab.scenario.positivity import classify_spectrum
from anticipation_lab.scenario.positivity import random_ordered_spectrum
from anticipation_lab.system import logging
from anticipation_lab.system import settings
from anticipation_lab.utilities.common import map_trials
from anticipation_lab.utilities.common import trial_generator

ACCEPTANCE_SEED = 20240601
"""The seed of every sampling criterion"""

CRITERION = typing.Callable[[typing.Optional[int], bool], typing.Tuple[bool, typing.Dict[str, typing.Any]]]

CRITERIA: typing.List[typing.Tuple[str, CRITERION]] = []


def acceptance_criterion(name: str):
    """
    Add a function to the acceptance suite under the given name
    """
    def register(function: CRITERION) -> CRITERION:
        CRITERIA.append((name, function))
        return function

    return register


class CriterionResult(BaseModel):
    name: str
    passed: bool
    details: typing.Dict[str, typing.Any] = Field(default_factory=dict)
    elapsed: float

    def to_document(self) -> CriterionDocument:
        return CriterionDocument(name=self.name, passed=self.passed, elapsed=self.elapsed, details=self.details)


def _trials(full: int, quick: bool, share: int = 10) -> int:
    return max(1, full // share) if quick else full


def _equidistant_reduction(p: int) -> typing.Tuple[RawPointMeasure, ReducedMeasure]:
    raw = gen_spectrum("equidistant", d=p)
    return raw, reduce(raw)


@acceptance_criterion("lemma2_identity")
def check_lemma2_identity(threads: typing.Optional[int], quick: bool):
    worst = max(abs(lemma2_sum(p) - 1.0) for p in range(2, 129))
    return worst < 1e-10, {"max_deviation": worst}


@acceptance_criterion("orthogonal_equidistant")
def check_orthogonal_equidistant(threads: typing.Optional[int], quick: bool):
    details = {}
    passed = True

    for p in (4, 8, 16):
        raw, nu_q = _equidistant_reduction(p)
        scenario = build_scenario(nu_q, p - 1, numpy.ones(p))
        report = anticipation_amplitudes(scenario, lift_joint_measure(scenario, raw), p - 1)

        deviation = float(numpy.max(numpy.abs(report.probs - equidistant_probabilities(p))))
        total = math.fsum(report.probs)

        details[f"p={p}"] = {"max_deviation": deviation, "total": total}
        passed = passed and deviation < 1e-10 and abs(total - 1.0) < 1e-10

    return passed, details


@acceptance_criterion("model_b")
def check_model_b(threads: typing.Optional[int], quick: bool):
    L, eps = 64, 0.1
    report = model_measure("b", L, N=2048, c=1.0, eps=eps)
    predictions = model_predictions("b", L, 1.0, eps)
    middle = math.ceil(L / 2)

    maximum_error = abs(report.maximum - predictions.maximum) / predictions.maximum
    strength_error = abs(report.P_L - predictions.P_L) / predictions.P_L
    middle_error = abs(report.probs[middle] - predictions.minimum) / predictions.minimum

    details = {
        "maximum": report.maximum,
        "P_L": report.P_L,
        "p_middle": float(report.probs[middle]),
        "relative_errors": [maximum_error, strength_error, middle_error]
    }
    return maximum_error < 0.05 and strength_error < 0.03 and middle_error < 0.25, details


@acceptance_criterion("model_c")
def check_model_c(threads: typing.Optional[int], quick: bool):
    L, eps = 64, 0.1
    report = model_measure("c", L, N=2048, c=1.0, eps=eps)
    predictions = model_predictions("c", L, 1.0, eps)

    strength_error = abs(report.P_L - predictions.P_L) / predictions.P_L
    details = {"P_L": report.P_L, "predicted_P_L": predictions.P_L, "argmax": report.argmax}

    return strength_error < 0.05 and abs(report.argmax - math.ceil(L / 2)) <= 1, details


@acceptance_criterion("order1_against_linear_program")
def check_order1_against_lp(threads: typing.Optional[int], quick: bool):
    trials = _trials(1000, quick)

    def run_trial(trial_index: int) -> typing.Optional[bool]:
        generator = trial_generator(ACCEPTANCE_SEED, trial_index)
        nu_q = random_ordered_spectrum(generator, int(generator.integers(3, 9)))

        if abs(support_span(nu_q) - math.pi) <= 1e-6:
            return None

        return order1_criterion(nu_q) == (classify_spectrum(nu_q, 1) == "positive")

    outcomes = map_trials(run_trial, trials, threads)
    compared = [outcome for outcome in outcomes if outcome is not None]
    disagreements = sum(1 for outcome in compared if not outcome)

    return disagreements == 0, {"compared": len(compared), "disagreements": disagreements}


@acceptance_criterion("prony_round_trip")
def check_prony_round_trip(threads: typing.Optional[int], quick: bool):
    trials = _trials(100, quick, share=5)

    def run_trial(trial_index: int) -> typing.Tuple[float, float]:
        generator = trial_generator(ACCEPTANCE_SEED + 1, trial_index)
        d = int(generator.integers(2, 9))
        nu = gapped_spectrum(generator, d, 0.3)
        recovered = recover_from_amplitudes(amplitudes(nu, 2 * d - 1), d)
        return spectrum_round_trip_error(nu.kappas, nu.real_weights, recovered)

    errors = numpy.asarray(map_trials(run_trial, trials, threads))
    worst_position, worst_weight = float(numpy.max(errors[:, 0])), float(numpy.max(errors[:, 1]))

    return max(worst_position, worst_weight) < 1e-6, {"position_error": worst_position, "weight_error": worst_weight}


@acceptance_criterion("uniform_inversion")
def check_uniform_inversion(threads: typing.Optional[int], quick: bool):
    grid = uniform_grid(1001)
    result = reconstruct_F(AmplitudeSequence.delta(64), 64, 1001)

    expected_nu = 0.5 * (1.0 + grid / math.pi)
    expected_F = (-1.0 - 2.0 * grid / math.pi - grid ** 2 / math.pi ** 2) / 8.0

    nu_error = float(numpy.max(numpy.abs(result.nu_samples - expected_nu)))
    F_error = float(numpy.max(numpy.abs(result.F_samples - expected_F)))

    return max(nu_error, F_error) < 1e-12, {"nu_error": nu_error, "F_error": F_error}


@acceptance_criterion("periodic_inversion")
def check_periodic_inversion(threads: typing.Optional[int], quick: bool):
    N = 4096
    beta = AmplitudeSequence.from_function(lambda n: (n % 4 == 0).astype(float), N)
    atoms = ReducedMeasure.from_atoms(-math.pi + math.pi / 2.0 * numpy.arange(4), probability=True)

    result = reconstruct_nu(beta, N, 2001, smoothing="cesaro")
    distances = numpy.abs(numpy.angle(numpy.exp(1j * numpy.subtract.outer(result.grid, atoms.kappas))))
    away = numpy.min(distances, axis=1) >= 0.1

    staircase = cumulative_oracle(atoms, result.grid, split_boundary=True)
    staircase_error = float(numpy.max(numpy.abs(result.nu_samples[away] - staircase[away])))

    peaks = point_spectrum_consistency(beta, N)
    mass_error = float(numpy.max(numpy.abs(peaks.masses - 0.25))) if peaks.count else float("inf")

    details = {"staircase_error": staircase_error, "peaks": peaks.count, "mass_error": mass_error}
    return staircase_error < 0.01 and peaks.count == 4 and mass_error <= 0.02, details


@acceptance_criterion("isolated_atom_dirichlet")
def check_isolated_atom(threads: typing.Optional[int], quick: bool):
    measure = ReducedMeasure.from_atoms([-math.pi / 2.0, 0.0, math.pi / 2.0], [0.35, 0.3, 0.35])
    probe = KernelProbe(alpha=0.0, N_list=[2 ** k + 1 for k in range(4, 11)])
    table = convergence_table(measure, probe, kind="dirichlet", target=0.3 * probe.phi_at_zero)

    return table.slope is not None and table.slope <= -0.9, {"slope": table.slope, "errors": table.errors}


@acceptance_criterion("orthogonal_time_average")
def check_orthogonal_time_average(threads: typing.Optional[int], quick: bool):
    details = {}
    passed = True

    for p in (4, 8, 16):
        raw, _ = _equidistant_reduction(p)
        result = time_average(raw, 1.0, float(p - 1), tolerance=1e-6)

        details[f"p={p}"] = {"value": result.value, "error_estimate": result.error_estimate}
        passed = passed and result.value <= 1.0 + 1e-6 and result.error_estimate < 1e-6

    return passed, details


def _random_positive_scenario(generator: numpy.random.Generator, attempts: int = 200):
    for _ in range(attempts):
        d = int(generator.integers(2, 9))
        L = int(generator.integers(1, min(3, d - 1) + 1))
        kappas = random_ordered_spectrum(generator, d).kappas
        raw = RawPointMeasure.from_atoms(
            kappas + 2.0 * math.pi * generator.integers(-3, 4, size=d),
            numpy.full(d, 1.0 / d),
            probability=True
        )
        nu_q = reduce(raw)

        try:
            rho, margin = solve_rho_nonneg(nu_q, L)
        except Infeasible:
            continue

        if margin > settings.positivity_threshold:
            return raw, nu_q, L, rho

    raise Infeasible(f"No positive scenario was found in {attempts} attempts")


@acceptance_criterion("positive_evolutions")
def check_positive_evolutions(threads: typing.Optional[int], quick: bool):
    trials = _trials(500, quick)

    def run_trial(trial_index: int) -> typing.Dict[str, typing.Any]:
        raw, nu_q, L, rho = _random_positive_scenario(trial_generator(ACCEPTANCE_SEED + 2, trial_index))
        scenario = build_scenario(nu_q, L, rho)
        mu_s_raw = lift_joint_measure(scenario, raw)
        report = anticipation_amplitudes(scenario, mu_s_raw, L)

        try:
            bounds = strength_bound_check(scenario, spectral_difference(mu_s_raw), report)
            slack = bounds.slack
        except ContractError:
            slack = -math.inf

        in_support = all(numpy.any(numpy.isclose(nu_q.kappas, kappa, rtol=0, atol=1e-12)) for kappa in scenario.nu_s.kappas)
        sigma = scenario.nu_s.real_weights

        return {
            "slack": slack,
            "norm_error": abs(scenario.norm1 - 1.0),
            "in_support": in_support,
            "nested": L < 2 or classify_spectrum(nu_q, L - 1) == "positive",
            "concentrated": (L + 1) * math.fsum(sigma ** 2) <= math.fsum(sigma) ** 2 + 1e-12
        }

    outcomes = map_trials(run_trial, trials, threads)

    details = {
        "scenarios": len(outcomes),
        "smallest_slack": min(outcome["slack"] for outcome in outcomes),
        "largest_norm_error": max(outcome["norm_error"] for outcome in outcomes),
        "support_violations": sum(1 for outcome in outcomes if not outcome["in_support"]),
        "nesting_violations": sum(1 for outcome in outcomes if not outcome["nested"]),
        "concentration_violations": sum(1 for outcome in outcomes if not outcome["concentrated"])
    }

    passed = (
        details["smallest_slack"] >= -1e-9
        and details["largest_norm_error"] <= 1e-8
        and details["support_violations"] == 0
        and details["nesting_violations"] == 0
        and details["concentration_violations"] == 0
    )
    return passed, details


@acceptance_criterion("spectral_difference_routes")
def check_difference_routes(threads: typing.Optional[int], quick: bool):
    trials = _trials(200, quick, share=5)
    looks = numpy.arange(65)

    def run_trial(trial_index: int) -> float:
        generator = trial_generator(ACCEPTANCE_SEED + 3, trial_index)
        d = int(generator.integers(1, 9))
        weights = generator.uniform(0.5, 1.5, size=d)
        raw = RawPointMeasure.from_atoms(
            generator.uniform(-20.0, 20.0, size=d),
            weights / math.fsum(weights),
            probability=True
        )
        difference = spectral_difference(raw)
        return float(numpy.max(numpy.abs(half_integer_transform(raw, looks) - difference_transform(difference, looks))))

    worst = max(map_trials(run_trial, trials, threads))
    return worst <= 1e-10, {"max_route_gap": worst}


@acceptance_criterion("expected_strength")
def check_expected_strength(threads: typing.Optional[int], quick: bool):
    _, nu_q = _equidistant_reduction(8)
    scenario = build_scenario(nu_q, 3, numpy.ones(8))
    model = StochasticDifferenceModel.create(0.0, 1.0, scenario.nu_s.size, ACCEPTANCE_SEED + 4)

    result = expected_strength(scenario, model, _trials(10_000, quick, share=5), threads)

    return result.holds and result.concentration_holds, result.dict()


def run_acceptance(threads: int = None, quick: bool = False) -> typing.List[CriterionResult]:
    """
    Run every acceptance criterion

    A criterion that raises one of the toolkit's errors fails with the error as its details

    Args:
        threads: Worker threads for the sampling criteria
        quick: Cut the trial counts of the sampling criteria

    Returns:
        One result per criterion in suite order
    """
    results = []

    for name, criterion in CRITERIA:
        started = time.perf_counter()

        try:
            passed, details = criterion(threads, quick)
        except AnticipationLabError as error:
            passed, details = False, {"error": str(error)}

        result = CriterionResult(name=name, passed=bool(passed), details=details, elapsed=time.perf_counter() - started)
        results.append(result)

        logging.info({"criterion": name, "passed": result.passed, "elapsed": result.elapsed})

    return results


def selftest_document(results: typing.Sequence[CriterionResult], quick: bool = False) -> SelfTestDocument:
    return SelfTestDocument(
        passed=all(result.passed for result in results),
        quick=quick,
        criteria=[result.to_document() for result in results]
    )
