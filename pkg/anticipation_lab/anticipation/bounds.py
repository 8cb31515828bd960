"""
Bounds on the strength of anticipation, deterministic and under a stochastic model of the spectral difference
"""
from __future__ import annotations

import math
import typing

import numpy
import typing_extensions

from pydantic import BaseModel
from pydantic import Field
from pydantic import ValidationError
from pydantic import root_validator

from anticipation_lab.exceptions import ContractError
from anticipation_lab.exceptions import DomainError
from anticipation_lab.documents.anticipation import BoundsDocument
from anticipation_lab.scenario import Scenario
from anticipation_lab.system import logging
from anticipation_lab.utilities.common import map_trials
from anticipation_lab.utilities.common import trial_generator

from .amplitudes import AnticipationReport
from .difference import SpectralDifference

BOUND_SLACK = 1e-9
"""How far a bound may be exceeded before it counts as broken"""

SAMPLERS = ("two_point",)


def strength_bound_check(scenario: Scenario, diff: SpectralDifference, report: AnticipationReport) -> BoundsDocument:
    """
    Check P_L <= ζ²‖y‖² <= ζ² <= 1, where P_L = Σ_{n≤L} p_n sums the L + 1 terms p_0..p_L

    This is one term more than the sum `expected_strength` estimates

    Args:
        scenario: A positive scenario of order L
        diff: The spectral difference of the lift of ν_s
        report: Anticipation amplitudes up to at least n = L

    Returns:
        The three terms of the chain and its smallest gap
    """
    if not scenario.positive:
        raise ContractError("Strength bounds only hold for positive evolutions")

    L = scenario.L

    if len(report.probs) < L + 1:
        raise DomainError(f"The bound of order {L} needs p_0..p_{L}; the report stops at n = {len(report.probs) - 1}")

    strength_through_L = report.P(L + 1)
    zeta2 = scenario.zeta ** 2
    zeta2_y2 = zeta2 * diff.y_norm_squared()

    slack = min(zeta2_y2 - strength_through_L, zeta2 - zeta2_y2, 1.0 - zeta2)
    bounds = BoundsDocument(PL=strength_through_L, zeta2_y2=zeta2_y2, zeta2=zeta2, slack=slack)

    logging.debug(bounds.dict())

    if slack < -BOUND_SLACK:
        raise ContractError(f"The strength bound chain is broken by {-slack:.3e}: {bounds.dict()}")

    return bounds


class StochasticDifferenceModel(BaseModel):
    """
    Independent random y at every atom of ν_s, with mean y1 and variance y2
    """
    y1: numpy.ndarray = Field(description="The mean of y at every atom")
    y2: numpy.ndarray = Field(description="The variance of y at every atom")
    sampler: str = Field(default="two_point")
    seed: int = Field(description="Trial i draws from a generator seeded with (seed, i)")

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    @root_validator(pre=True)
    def _check_moments(cls, values):
        y1 = numpy.array(values.get("y1"), dtype=float).reshape(-1)
        y2 = numpy.array(values.get("y2"), dtype=float).reshape(-1)

        if y1.shape != y2.shape:
            raise ValueError(f"{len(y1)} means were given with {len(y2)} variances")

        if numpy.any(numpy.abs(y1) > 1):
            raise ValueError("The mean of y must lie in [-1, 1]")

        if numpy.any(y2 < 0):
            raise ValueError("The variance of y must not be negative")

        if numpy.any(y2 > 1.0 - y1 ** 2 + 1e-12):
            raise ValueError("y is bounded by 1, so its variance may not exceed 1 - y1²")

        if values.get("sampler", "two_point") not in SAMPLERS:
            raise ValueError(f"'{values.get('sampler')}' is not a sampler. Choose one of {', '.join(SAMPLERS)}")

        y1.setflags(write=False)
        y2.setflags(write=False)
        values["y1"] = y1
        values["y2"] = y2
        return values

    @classmethod
    def create(
        cls,
        y1: typing.Union[float, typing.Sequence[float]],
        y2: typing.Union[float, typing.Sequence[float]],
        size: int,
        seed: int,
        sampler: str = "two_point"
    ) -> typing_extensions.Self:
        """
        Build a model, broadcasting scalar moments to `size` atoms and reporting invalid moments as a `DomainError`
        """
        try:
            return cls(
                y1=numpy.broadcast_to(numpy.asarray(y1, dtype=float), (size,)),
                y2=numpy.broadcast_to(numpy.asarray(y2, dtype=float), (size,)),
                seed=seed,
                sampler=sampler
            )
        except (ValidationError, ValueError) as error:
            raise DomainError(f"Invalid stochastic difference model: {error}") from error

    @property
    def size(self) -> int:
        return len(self.y1)

    def sample(self, generator: numpy.random.Generator) -> numpy.ndarray:
        """
        Draw y at every atom from the two point distribution with the model's mean and variance

        The upper value y1 + s·sqrt((1 - y1)/(1 + y1)) is drawn with probability (1 + y1)/2 and the lower
        value y1 - s·sqrt((1 + y1)/(1 - y1)) otherwise, with s = sqrt(y2)
        """
        spread = numpy.sqrt(self.y2)
        upper_chance = (1.0 + self.y1) / 2.0
        varying = self.y2 > 0

        # Atoms with |y1| = 1 have no variance and never use the undefined values
        with numpy.errstate(divide="ignore", invalid="ignore"):
            upper = self.y1 + spread * numpy.sqrt((1.0 - self.y1) / (1.0 + self.y1))
            lower = self.y1 - spread * numpy.sqrt((1.0 + self.y1) / (1.0 - self.y1))

        draws = generator.random(self.size) < upper_chance
        values = numpy.where(draws, upper, lower)

        return numpy.where(varying, values, self.y1)


class ExpectedStrength(BaseModel):
    """
    The Monte Carlo estimate of E(Σ_{n<L} p_n), the L terms p_0..p_{L-1}, against its bound ζ²(‖y1‖² + L·Σ y2·σ²)
    """
    estimate: float
    standard_error: float
    bound: float
    trials: int
    holds: bool = Field(description="Whether the estimate stays below the bound plus three standard errors")
    concentration: float = Field(description="(L + 1)·Σσ²")
    squared_mass: float = Field(description="(Σσ)²")

    @property
    def concentration_holds(self) -> bool:
        return self.concentration <= self.squared_mass + BOUND_SLACK


def expected_strength(
    scenario: Scenario,
    model: StochasticDifferenceModel,
    trials: int,
    threads: int = None
) -> ExpectedStrength:
    """
    Estimate the expected strength Σ_{n<L} p_n when y is random

    The sum stops at p_{L-1}, one term short of the P_L checked by `strength_bound_check`

    Args:
        scenario: A positive scenario
        model: The distribution of y at every atom of ν_s
        trials: The number of Monte Carlo trials
        threads: Worker threads; results do not depend on it

    Returns:
        The estimate, its standard error and the bound
    """
    if not scenario.positive:
        raise ContractError("Strength bounds only hold for positive evolutions")

    nu_s = scenario.nu_s

    if model.size != nu_s.size:
        raise DomainError(f"The model describes {model.size} atoms, but ν_s has {nu_s.size}")

    if trials < 2:
        raise DomainError(f"At least two trials are needed for a standard error, not {trials}")

    L = scenario.L
    sigma = nu_s.real_weights
    zeta = scenario.zeta

    # Row n holds σ·exp(-i(n + ½)κ) for n < L
    transform = numpy.exp(-1j * numpy.multiply.outer(numpy.arange(L) + 0.5, nu_s.kappas)) * sigma

    def run_trial(trial_index: int) -> float:
        y = model.sample(trial_generator(model.seed, trial_index))
        alphas = zeta * (transform @ y)
        return math.fsum(numpy.abs(alphas) ** 2)

    strengths = numpy.asarray(map_trials(run_trial, trials, threads))

    estimate = float(numpy.mean(strengths))
    standard_error = float(numpy.std(strengths, ddof=1) / math.sqrt(trials))
    bound = zeta ** 2 * (math.fsum(model.y1 ** 2 * sigma) + L * math.fsum(model.y2 * sigma ** 2))

    result = ExpectedStrength(
        estimate=estimate,
        standard_error=standard_error,
        bound=bound,
        trials=trials,
        holds=estimate <= bound + 3 * standard_error + BOUND_SLACK,
        concentration=(L + 1) * math.fsum(sigma ** 2),
        squared_mass=math.fsum(sigma) ** 2
    )

    logging.debug(result.dict())

    return result
