"""
Time averages T^{α-1}·∫_{-T/2}^{T/2} |Σ w·exp(-i·λ·t)|² dt of the return amplitude of a measure
"""
import math
import typing

import numpy

from pydantic import BaseModel
from pydantic import Field

from anticipation_lab.exceptions import DomainError
from anticipation_lab.documents.kernels import TimeAverageDocument
from anticipation_lab.measures import PointMeasure
from anticipation_lab.system import logging
from anticipation_lab.system import settings

MAXIMUM_HALVINGS = 12

_BLOCK_SIZE = 1 << 22


class TimeAverageResult(BaseModel):
    T: float = Field(gt=0)
    alpha: float
    quad_step: float = Field(gt=0, description="The step of the final trapezoidal sum")
    value: float = Field(ge=0)
    error_estimate: float = Field(description="|value(2·step) - value(step)|")
    halvings: int = Field(default=0, description="How often the starting step was halved")

    class Config:
        allow_mutation = False

    def to_document(self) -> TimeAverageDocument:
        return TimeAverageDocument(**self.dict())


def _return_probability(m: PointMeasure, times: numpy.ndarray) -> numpy.ndarray:
    values = numpy.empty(len(times))
    chunk = max(1, _BLOCK_SIZE // m.size)

    for start in range(0, len(times), chunk):
        values[start:start + chunk] = numpy.abs(m.fourier(times[start:start + chunk])) ** 2

    return values


def _trapezoid_sums(m: PointMeasure, T: float, panels: int) -> typing.Iterator[typing.Tuple[int, float]]:
    """
    Trapezoidal sums of |μ(t)|² over [-T/2, T/2] with `panels`, 2·`panels`, 4·`panels`, ... panels

    Each refinement only evaluates the new midpoints
    """
    times = numpy.linspace(-T / 2.0, T / 2.0, panels + 1)
    values = _return_probability(m, times)
    step = T / panels
    total = step * (math.fsum(values) - (values[0] + values[-1]) / 2.0)

    while True:
        yield panels, total

        midpoints = -T / 2.0 + step * (numpy.arange(panels) + 0.5)
        total = total / 2.0 + (step / 2.0) * math.fsum(_return_probability(m, midpoints))
        panels *= 2
        step /= 2.0


def time_average(
    m: PointMeasure,
    alpha: float,
    T: float,
    dt: float = None,
    tolerance: float = None
) -> TimeAverageResult:
    """
    T^{α-1}·∫_{-T/2}^{T/2} |fourier(m, t)|² dt by the composite trapezoidal rule

    The integral is taken with steps dt and dt/2; the difference of both is the error estimate. With a tolerance,
    the step keeps halving until the estimate falls below it

    Examples:
        >>> from anticipation_lab.measures import ReducedMeasure
        >>> round(time_average(ReducedMeasure.from_atoms([0.0], [1.0]), 0.0, 3.0, dt=0.01).value, 12)
        1.0

    Args:
        m: The measure
        alpha: The exponent of the normalization
        T: The length of the time window
        dt: The starting step; the configured default when omitted
        tolerance: The largest accepted error estimate

    Returns:
        The average taken with the finest step used
    """
    dt = settings.default_time_step if dt is None else dt

    if not T > 0 or not dt > 0:
        raise DomainError(f"Time averages need T > 0 and dt > 0, not T = {T!r} and dt = {dt!r}")

    if tolerance is not None and not tolerance > 0:
        raise DomainError(f"The tolerance must be positive, not {tolerance!r}")

    scale = T ** (alpha - 1.0)
    sums = _trapezoid_sums(m, T, max(1, math.ceil(T / dt - 1e-9)))

    _, previous = next(sums)
    panels, current = next(sums)
    halvings = 0

    while tolerance is not None and scale * abs(current - previous) >= tolerance and halvings < MAXIMUM_HALVINGS:
        previous = current
        panels, current = next(sums)
        halvings += 1

    error_estimate = scale * abs(current - previous)

    if tolerance is not None and error_estimate >= tolerance:
        logging.warning(
            f"The time average did not reach a step halving error below {tolerance:.1e} "
            f"after {halvings} halvings; the estimate is {error_estimate:.3e}"
        )

    result = TimeAverageResult(
        T=T,
        alpha=alpha,
        quad_step=T / panels,
        value=max(scale * current, 0.0),
        error_estimate=error_estimate,
        halvings=halvings
    )

    logging.debug(result.dict())

    return result


def two_atom_average(a: float, T: float, alpha: float = 0.0, weight: float = 0.5) -> float:
    """
    The exact average for two atoms of equal weight w at ±a: 4w²·T^{α-1}·(T/2)·(1 + sin(aT)/(aT))

    Examples:
        >>> two_atom_average(0.0, 2.0)
        1.0
    """
    if not T > 0:
        raise DomainError(f"T must be positive, not {T!r}")

    return 4.0 * weight ** 2 * T ** (alpha - 1.0) * (T / 2.0) * (1.0 + float(numpy.sinc(a * T / math.pi)))
