"""
Anticipation amplitudes α_n = ζ·Σ σ·exp(-i·(n + ½)·λ), their probabilities and look-ahead statistics
"""
from __future__ import annotations

import math
import typing

import numpy
import typing_extensions

from pydantic import BaseModel
from pydantic import Field
from pydantic import validator

from anticipation_lab.exceptions import ContractError
from anticipation_lab.exceptions import DomainError
from anticipation_lab.documents.anticipation import AnticipationDocument
from anticipation_lab.documents.anticipation import BoundsDocument
from anticipation_lab.documents.base import complex_pair
from anticipation_lab.measures import RawPointMeasure
from anticipation_lab.measures import reduce
from anticipation_lab.scenario import Scenario
from anticipation_lab.system import logging
from anticipation_lab.system import settings
from anticipation_lab.utilities.constants import DEFAULT_MOMENT_ORDERS

from .difference import SpectralDifference
from .difference import spectral_difference


class AnticipationReport(BaseModel):
    """
    α_n and p_n = |α_n|² for n = 0..N, with P_N = Σ_{n<N} p_n and the moments ⟨|n|^r⟩_N
    """
    N: int = Field(ge=0)
    alphas: numpy.ndarray
    probs: numpy.ndarray
    P_N: float = Field(default=0.0)
    moments: typing.Dict[float, float] = Field(default_factory=dict)
    retrospective: bool = Field(default=False)
    route_agreement: typing.Optional[float] = Field(default=None)
    bounds: typing.Optional[BoundsDocument] = Field(default=None)

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    @validator("alphas", pre=True)
    def _freeze_alphas(cls, value):
        array = numpy.array(value, dtype=complex).reshape(-1)
        array.setflags(write=False)
        return array

    @validator("probs", pre=True)
    def _freeze_probabilities(cls, value):
        array = numpy.array(value, dtype=float).reshape(-1)

        if numpy.any(array < 0):
            raise ValueError("Probabilities may not be negative")

        array.setflags(write=False)
        return array

    @classmethod
    def from_probabilities(cls, probs: typing.Sequence[float], alphas: typing.Sequence[complex] = None) -> typing_extensions.Self:
        """
        A report over given probabilities with N = len(probs), for look-ahead statistics of distributions that
        did not come from amplitudes
        """
        probs = numpy.asarray(probs, dtype=float)
        alphas = numpy.sqrt(probs).astype(complex) if alphas is None else alphas

        report = cls(N=len(probs), alphas=alphas, probs=probs)
        return statistics(report, DEFAULT_MOMENT_ORDERS)

    def P(self, count: int) -> float:
        """
        Σ_{n<count} p_n
        """
        if count > len(self.probs):
            raise DomainError(f"Only {len(self.probs)} probabilities are known; {count} were asked for")

        return math.fsum(self.probs[:count])

    def to_document(self) -> AnticipationDocument:
        return AnticipationDocument(
            N=self.N,
            alphas=[complex_pair(alpha) for alpha in self.alphas],
            probs=[float(probability) for probability in self.probs],
            P_N=self.P_N,
            moments={format(order, "g"): value for order, value in self.moments.items()},
            retrospective=self.retrospective,
            route_agreement=self.route_agreement,
            bounds=self.bounds
        )

    def to_csv_rows(self) -> typing.List[typing.Tuple[int, float, float, float]]:
        return [
            (index, float(alpha.real), float(alpha.imag), float(probability))
            for index, (alpha, probability) in enumerate(zip(self.alphas, self.probs))
        ]


def statistics(report: AnticipationReport, r_list: typing.Iterable[float] = DEFAULT_MOMENT_ORDERS) -> AnticipationReport:
    """
    Compute P_N = Σ_{n<N} p_n and ⟨|n|^r⟩_N = Σ_{n<N} |n|^r·p_n by direct summation

    Examples:
        >>> statistics(AnticipationReport(N=2, alphas=[1, 0, 0], probs=[1, 0, 0]), [1.0]).moments
        {1.0: 0.0}

    Args:
        report: The report holding the probabilities
        r_list: The moment orders

    Returns:
        A copy of the report with the statistics filled in
    """
    count = min(report.N, len(report.probs))
    probabilities = report.probs[:count]
    looks = numpy.arange(count, dtype=float)

    total = math.fsum(probabilities)

    if total > 1.0 + 1e-9:
        logging.warning(f"The anticipation probabilities add up to {total!r}, more than 1")

    moments = {
        float(order): math.fsum(looks ** float(order) * probabilities)
        for order in r_list
    }

    return report.copy(update={"P_N": total, "moments": moments})


def _check_lift(scenario: Scenario, mu_s_raw: RawPointMeasure):
    reduced = reduce(mu_s_raw)
    nu_s = scenario.nu_s

    if reduced.size != nu_s.size:
        raise DomainError(f"The raw measure reduces onto {reduced.size} atoms, but ν_s has {nu_s.size}")

    position_gap = numpy.max(numpy.abs(numpy.angle(numpy.exp(1j * (reduced.kappas - nu_s.kappas)))))
    weight_gap = numpy.max(numpy.abs(reduced.weights - nu_s.weights))

    if position_gap > 1e3 * settings.merge_tolerance or weight_gap > 1e-9:
        raise DomainError(
            f"The raw measure is not a lift of ν_s (positions differ by {position_gap:.3e}, "
            f"weights by {weight_gap:.3e})"
        )


def anticipation_amplitudes(
    scenario: Scenario,
    mu_s_raw: RawPointMeasure,
    N: int,
    retrospective: bool = False,
    moment_orders: typing.Iterable[float] = DEFAULT_MOMENT_ORDERS
) -> AnticipationReport:
    """
    Compute α_n for 0 <= n <= N through the raw half integer transform and through the spectral difference

    Args:
        scenario: A positive scenario
        mu_s_raw: The raw lift of the scenario's ν_s
        N: The largest n
        retrospective: Evaluate at -(n + ½) instead of n + ½
        moment_orders: The orders r of the moments ⟨|n|^r⟩_N

    Returns:
        The report; the largest gap between both routes is kept as `route_agreement`
    """
    if not scenario.positive:
        raise ContractError("Anticipation is only defined for positive evolutions")

    if N < 0:
        raise DomainError(f"N must not be negative, not {N}")

    _check_lift(scenario, mu_s_raw)

    times = numpy.arange(N + 1, dtype=float) + 0.5
    if retrospective:
        times = -times

    raw_alphas = scenario.zeta * mu_s_raw.fourier(times)

    difference: SpectralDifference = spectral_difference(mu_s_raw)
    difference_alphas = scenario.zeta * (
        numpy.exp(-1j * numpy.multiply.outer(times, difference.kappas)) @ (difference.g0 - difference.g1)
    )

    agreement = float(numpy.max(numpy.abs(raw_alphas - difference_alphas)))

    if agreement > settings.route_agreement_tolerance:
        raise ContractError(
            f"The raw and the spectral difference amplitudes differ by {agreement:.3e}, beyond "
            f"{settings.route_agreement_tolerance:.1e}"
        )

    logging.debug({"N": N, "retrospective": retrospective, "route_agreement": agreement})

    report = AnticipationReport(
        N=N,
        alphas=raw_alphas,
        probs=numpy.abs(raw_alphas) ** 2,
        retrospective=retrospective,
        route_agreement=agreement
    )

    return statistics(report, moment_orders)


def equidistant_probabilities(p: int, count: int = None) -> numpy.ndarray:
    """
    p_n = p⁻²·sin⁻²(π(n + ½)/p): the anticipation probabilities of the orthogonal evolution over p equidistant atoms
    """
    count = p if count is None else count
    return 1.0 / (p ** 2 * numpy.sin(math.pi * (numpy.arange(count) + 0.5) / p) ** 2)


def lemma2_sum(p: int) -> float:
    """
    Σ_{n=0}^{p-1} p⁻²·sin⁻²(π(n - ½)/p), which is 1 for every p >= 2

    Examples:
        >>> round(lemma2_sum(2), 12)
        1.0
    """
    if p < 2:
        raise DomainError(f"The sum needs p >= 2, not {p}")

    return math.fsum(1.0 / (p ** 2 * math.sin(math.pi * (n - 0.5) / p) ** 2) for n in range(p))
