"""
Pairings of measures with scaled test functions and with Dirichlet kernels
"""
import math
import typing

import numpy

from pydantic import BaseModel
from pydantic import Field

from anticipation_lab.exceptions import DomainError
from anticipation_lab.documents.base import complex_pair
from anticipation_lab.documents.kernels import ConvergenceDocument
from anticipation_lab.documents.kernels import ConvergenceRowDocument
from anticipation_lab.measures import PointMeasure
from anticipation_lab.system import logging
from anticipation_lab.system import settings
from anticipation_lab.utilities.constants import TWO_PI

from .probes import KernelProbe


def scaled_test_pairing(m: PointMeasure, probe: KernelProbe, N: int) -> complex:
    """
    N^α·Σ w·Ψ(N·κ)·φ(κ)

    Examples:
        >>> from anticipation_lab.measures import ReducedMeasure
        >>> scaled_test_pairing(ReducedMeasure.from_atoms([0.0], [1.0]), KernelProbe(alpha=0), 64)
        (1+0j)
    """
    if N < 1:
        raise DomainError(f"N must be positive, not {N}")

    positions = m.positions
    kernel = probe.psi_function(N * positions) * probe.phi_function(positions)

    return complex(N ** probe.alpha * numpy.sum(m.weights * kernel))


def dirichlet_kernel(N: int, x: typing.Union[float, numpy.ndarray]) -> numpy.ndarray:
    """
    D_N(x) = sin(πNx)/sin(πx), continued by N·(-1)^{k(N - 1)} at every integer k
    """
    x = numpy.asarray(x, dtype=float)
    nearest = numpy.rint(x)
    at_zero = numpy.abs(x - nearest) < 1e-15

    with numpy.errstate(divide="ignore", invalid="ignore"):
        values = numpy.sin(math.pi * N * x) / numpy.sin(math.pi * x)

    limits = N * numpy.where(numpy.mod(nearest * (N - 1), 2) == 0, 1.0, -1.0)
    return numpy.where(at_zero, limits, values)


def _check_odd(N: int):
    if N < 1 or N % 2 == 0:
        raise DomainError(f"Dirichlet kernels are taken with odd N, not {N}")


def dirichlet_pairing(m: PointMeasure, probe: KernelProbe, N: int) -> complex:
    """
    N^{α-1}·Σ w·D_N(x)·φ(x) after rescaling K = [-π, π) onto I = [-½, ½) with x = κ/2π

    Examples:
        >>> from anticipation_lab.measures import ReducedMeasure
        >>> value = dirichlet_pairing(ReducedMeasure.from_atoms([0.0], [0.3]), KernelProbe(alpha=0), 17)
        >>> abs(value - 0.3) < 1e-15
        True

    Args:
        m: A measure on K
        probe: Supplies α and φ
        N: An odd order

    Returns:
        The pairing
    """
    _check_odd(N)

    x = m.positions / TWO_PI
    kernel = dirichlet_kernel(N, x) * probe.phi_function(x)

    return complex(N ** (probe.alpha - 1.0) * numpy.sum(m.weights * kernel))


def dirichlet_series_pairing(m: PointMeasure, probe: KernelProbe, N: int) -> complex:
    """
    The same pairing written as N^{α-1}·Σ_{|n|<N/2} Σ w·φ(x)·exp(i·n·κ)
    """
    _check_odd(N)

    x = m.positions / TWO_PI
    indices = numpy.arange(-(N - 1) // 2, (N - 1) // 2 + 1)
    weighted = m.weights * probe.phi_function(x)

    total = numpy.sum(numpy.exp(1j * numpy.multiply.outer(indices, m.positions)) @ weighted)
    return complex(N ** (probe.alpha - 1.0) * total)


PAIRINGS: typing.Dict[str, typing.Callable[[PointMeasure, KernelProbe, int], complex]] = {
    "scaled": scaled_test_pairing,
    "dirichlet": dirichlet_pairing,
}


class ConvergenceTable(BaseModel):
    """
    Values of a pairing over the ladder of N, their distance from a target, and the fitted decay of that distance
    """
    kind: str
    probe: KernelProbe
    target: typing.Optional[complex] = None
    N_list: typing.List[int]
    values: typing.List[complex]
    errors: typing.List[typing.Optional[float]]
    slope: typing.Optional[float] = Field(default=None, description="Slope of log(error) against log(N)")
    diverging: bool = False

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    def rows(self) -> typing.List[typing.Tuple[int, float, float, typing.Optional[float]]]:
        return [
            (N, value.real, value.imag, error)
            for N, value, error in zip(self.N_list, self.values, self.errors)
        ]

    def to_document(self) -> ConvergenceDocument:
        return ConvergenceDocument(
            kind=self.kind,
            alpha=self.probe.alpha,
            phi=self.probe.phi,
            psi=self.probe.psi,
            target=None if self.target is None else complex_pair(self.target),
            rows=[
                ConvergenceRowDocument(N=N, value=complex_pair(value), error=error)
                for N, value, error in zip(self.N_list, self.values, self.errors)
            ],
            slope=self.slope,
            diverging=self.diverging
        )


def error_slope(N_list: typing.Sequence[int], errors: typing.Sequence[typing.Optional[float]]) -> typing.Optional[float]:
    """
    The least squares slope of log(error) against log(N) over the positive errors
    """
    points = [(N, error) for N, error in zip(N_list, errors) if error is not None and error > 0]

    if len(points) < 2:
        return None

    logs = numpy.log(numpy.asarray(points, dtype=float))
    slope, _ = numpy.polyfit(logs[:, 0], logs[:, 1], 1)
    return float(slope)


def convergence_table(
    m: PointMeasure,
    probe: KernelProbe,
    kind: str = "dirichlet",
    target: complex = None
) -> ConvergenceTable:
    """
    Evaluate a pairing for every N of the probe

    Args:
        m: The measure to pair with
        probe: α, the ladder of N and the test functions
        kind: 'scaled' or 'dirichlet'
        target: The limit the values are compared against, if known

    Returns:
        The table; `diverging` is set once a value exceeds the configured ceiling
    """
    if kind not in PAIRINGS:
        raise DomainError(f"'{kind}' is not a pairing. Choose one of {', '.join(PAIRINGS)}")

    pairing = PAIRINGS[kind]
    target = None if target is None else complex(target)
    values = [pairing(m, probe, N) for N in probe.N_list]
    errors = [None if target is None else abs(value - target) for value in values]

    ceiling = settings.kernel_divergence_ceiling
    diverging = any(abs(value) > ceiling for value in values)

    if diverging:
        logging.warning(f"The {kind} pairing passed the divergence ceiling of {ceiling:.1e}")

    table = ConvergenceTable(
        kind=kind,
        probe=probe,
        target=target,
        N_list=list(probe.N_list),
        values=values,
        errors=errors,
        slope=error_slope(probe.N_list, errors),
        diverging=diverging
    )

    logging.debug({"kind": kind, "alpha": probe.alpha, "slope": table.slope, "diverging": diverging})

    return table
