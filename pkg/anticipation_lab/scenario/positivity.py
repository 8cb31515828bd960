"""
Sampling experiments on the domain of positivity: the reduced spectra that admit strictly positive
solutions of the duality system of a given order
"""
import math
import typing

import numpy

from pydantic import BaseModel
from pydantic import Field

from anticipation_lab.exceptions import DomainError
from anticipation_lab.exceptions import Infeasible
from anticipation_lab.measures import ReducedMeasure
from anticipation_lab.measures import cluster_fattening
from anticipation_lab.measures import reduced_positions
from anticipation_lab.measures import shift
from anticipation_lab.system import logging
from anticipation_lab.utilities.common import map_trials
from anticipation_lab.utilities.common import trial_generator
from anticipation_lab.utilities.constants import TWO_PI

from .duality import classify_margin
from .duality import solve_rho_nonneg


class PositivityDomainReport(BaseModel):
    """
    Counts of sampled spectra by how their positivity program ended
    """
    d: int
    L: int
    trials: int
    seed: int
    positive: int = Field(description="Samples with a strictly positive solution of order L")
    boundary: int = Field(description="Samples whose best solution of order L touches zero")
    negative: int = Field(description="Samples whose best solution of order L goes negative")
    infeasible: int = Field(description="Samples without any solution of order L")
    positive_lower_order: int = Field(description="Samples with a strictly positive solution of order L - 1")
    nesting_violations: int = Field(description="Samples positive at order L but not at order L - 1")

    @property
    def positive_fraction(self) -> float:
        return self.positive / self.trials if self.trials else 0.0


class ClusteredPositivityReport(BaseModel):
    """
    The positivity program over an equidistant spectrum whose atoms were spread into clusters
    """
    d: int
    L: int
    half_width: float
    cluster_size: int
    margin: typing.Optional[float] = Field(default=None, description="None when the program was infeasible")
    classification: str

    @property
    def feasible(self) -> bool:
        return self.classification == "positive"


def classify_spectrum(nu_q: ReducedMeasure, L: int) -> str:
    """
    'positive', 'boundary', 'negative' or 'infeasible' depending on the positivity program of order L
    """
    if L == 0:
        return "positive"

    try:
        _, margin = solve_rho_nonneg(nu_q, L)
    except Infeasible:
        return "infeasible"

    return classify_margin(margin)


def random_ordered_spectrum(generator: numpy.random.Generator, d: int) -> ReducedMeasure:
    """
    A uniformly drawn ordered d-tuple of positions on the circle with equal weights
    """
    raw = numpy.sort(generator.uniform(0.0, TWO_PI, size=d))
    return ReducedMeasure.from_atoms(shift(raw), probability=True)


def probe_positivity_domain(
    d: int,
    L: int,
    trials: int,
    seed: int,
    threads: int = None
) -> PositivityDomainReport:
    """
    Estimate the share of d point spectra that admit strictly positive solutions of order L

    Every sample is classified at orders L and L - 1; a sample that is positive at L but not at L - 1 is a
    nesting violation

    Args:
        d: The number of atoms per sample
        L: The order, 1 <= L < d
        trials: The number of samples
        seed: Seed of the run; sample i draws from a generator seeded with (seed, i)
        threads: Worker threads; results do not depend on it

    Returns:
        The counts
    """
    if not 1 <= L < d:
        raise DomainError(f"Probing positivity needs 1 <= L < d, not L = {L} and d = {d}")

    if trials < 1:
        raise DomainError(f"At least one trial is needed, not {trials}")

    def run_trial(trial_index: int) -> typing.Tuple[str, str]:
        nu_q = random_ordered_spectrum(trial_generator(seed, trial_index), d)
        return classify_spectrum(nu_q, L), classify_spectrum(nu_q, L - 1)

    outcomes = map_trials(run_trial, trials, threads)

    counts = {
        name: sum(1 for outcome, _ in outcomes if outcome == name)
        for name in ("positive", "boundary", "negative", "infeasible")
    }
    positive_lower_order = sum(1 for _, lower in outcomes if lower == "positive")
    violations = sum(1 for outcome, lower in outcomes if outcome == "positive" and lower != "positive")

    if violations:
        logging.warning(f"{violations} samples of order {L} were positive without being positive at order {L - 1}")

    return PositivityDomainReport(
        d=d,
        L=L,
        trials=trials,
        seed=seed,
        positive_lower_order=positive_lower_order,
        nesting_violations=violations,
        **counts
    )


def clustered_positivity(
    d: int,
    L: int,
    half_width: float,
    cluster_size: int,
    seed: int = None
) -> ClusteredPositivityReport:
    """
    Spread every atom of the equidistant d point spectrum into a cluster and rerun the positivity program

    Args:
        d: The number of atoms of the equidistant core
        L: The order
        half_width: Half of the width of each cluster
        cluster_size: Atoms per cluster
        seed: When given, cluster atoms are drawn uniformly within each cluster instead of evenly spaced

    Returns:
        The margin of the clustered spectrum and its classification
    """
    core_positions = reduced_positions(TWO_PI * numpy.arange(d) / d - math.pi)
    core = ReducedMeasure.from_atoms(core_positions, probability=True)

    if seed is None:
        clustered = cluster_fattening(core, half_width, cluster_size)
    else:
        generator = numpy.random.default_rng(seed)
        offsets = generator.uniform(-half_width, half_width, size=(d, cluster_size))
        positions = reduced_positions((core.kappas[:, None] + offsets).reshape(-1))
        clustered = ReducedMeasure.from_atoms(positions, probability=True)

    try:
        _, margin = solve_rho_nonneg(clustered, L)
    except Infeasible:
        margin = None

    classification = "infeasible" if margin is None else classify_margin(margin)
    logging.debug({"d": d, "L": L, "half_width": half_width, "margin": margin, "classification": classification})

    return ClusteredPositivityReport(
        d=d,
        L=L,
        half_width=half_width,
        cluster_size=cluster_size,
        margin=margin,
        classification=classification
    )
