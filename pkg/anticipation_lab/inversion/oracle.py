"""
Ground truth for reconstructions and the localization of atoms in the Fejér smoothed density
"""
import math
import typing

import numpy
import scipy.integrate
import scipy.signal

from pydantic import BaseModel
from pydantic import Field

from anticipation_lab.exceptions import DomainError
from anticipation_lab.documents.inversion import PeakDocument
from anticipation_lab.documents.inversion import PointSpectrumDocument
from anticipation_lab.measures import AmplitudeSequence
from anticipation_lab.measures import ReducedMeasure
from anticipation_lab.system import logging
from anticipation_lab.utilities.constants import TWO_PI

from .series import InversionResult
from .series import evaluate_series
from .series import series_terms
from .series import uniform_grid


def cumulative_oracle(
    m: ReducedMeasure,
    kappa: typing.Union[float, numpy.ndarray],
    split_boundary: bool = False
) -> typing.Union[complex, numpy.ndarray]:
    """
    ν([-π, κ)): the total weight of the atoms strictly below κ

    Args:
        m: A reduced measure
        kappa: One or more points
        split_boundary: Count an atom at -π with half of its weight, the way the Fourier series sees it

    Returns:
        The cumulative weight at every point
    """
    points = numpy.asarray(kappa, dtype=float)
    below = numpy.less.outer(m.kappas, points)
    weights = m.weights

    values = numpy.tensordot(weights, below.astype(float), axes=(0, 0))

    if split_boundary:
        at_boundary = numpy.isclose(m.kappas, -math.pi, rtol=0.0, atol=1e-12)
        values = values - 0.5 * numpy.sum(weights[at_boundary]) * (points > -math.pi)

    return complex(values) if points.ndim == 0 else values


def integrated_error(result: InversionResult, m: ReducedMeasure) -> float:
    """
    ∫|ν_N - ν| dκ over the grid of a reconstruction by the trapezoidal rule
    """
    if result.grid_size < 2:
        raise DomainError("An integrated error needs at least two grid points")

    oracle = cumulative_oracle(m, result.grid, split_boundary=True)
    return float(scipy.integrate.trapezoid(numpy.abs(result.nu_samples - oracle), result.grid))


class PointSpectrumReport(BaseModel):
    """
    Peaks of the Fejér smoothed density Σ (1 - |n|/(N + 1))·β_n·exp(i·n·κ) and the masses around them
    """
    N_trunc: int
    resolution: float = Field(description="The smallest distance between reported peaks")
    kappas: numpy.ndarray
    masses: numpy.ndarray
    heights: numpy.ndarray

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    @property
    def count(self) -> int:
        return len(self.kappas)

    @property
    def total_mass(self) -> float:
        return math.fsum(self.masses)

    def to_measure(self) -> ReducedMeasure:
        return ReducedMeasure.from_atoms(self.kappas, self.masses)

    def to_document(self) -> PointSpectrumDocument:
        return PointSpectrumDocument(
            N_trunc=self.N_trunc,
            resolution=self.resolution,
            peaks=[
                PeakDocument(kappa=float(kappa), mass=float(mass), height=float(height))
                for kappa, mass, height in zip(self.kappas, self.masses, self.heights)
            ],
            total_mass=self.total_mass
        )


def _window_masses(
    indices: numpy.ndarray,
    amplitudes: numpy.ndarray,
    beta_0: complex,
    centres: numpy.ndarray,
    half_width: float
) -> numpy.ndarray:
    # (1/2π)∫ over [κ - h, κ + h] of the smoothed density, term by term
    kernel = amplitudes * 2.0 * numpy.sin(indices * half_width) / indices
    values = numpy.exp(1j * numpy.multiply.outer(centres, indices)) @ kernel
    return ((values + beta_0 * 2.0 * half_width) / TWO_PI).real


def _drop_side_lobes(kappas: numpy.ndarray, heights: numpy.ndarray, N: int, threshold: float) -> numpy.ndarray:
    """
    Keep the peaks that clear `threshold` after removing the Fejér envelope H/((N + 1)²·sin²(Δκ/2)) of every
    taller peak already kept

    Returns:
        A mask over the peaks, which stay in ascending order of position
    """
    kept = numpy.zeros(len(kappas), dtype=bool)

    for index in numpy.argsort(-heights, kind="stable"):
        taller = numpy.flatnonzero(kept)
        gaps = numpy.sin((kappas[index] - kappas[taller]) / 2.0) ** 2
        leakage = math.fsum(heights[taller] / ((N + 1) ** 2 * gaps))

        kept[index] = heights[index] - leakage >= threshold

    return kept


def point_spectrum_consistency(
    beta: AmplitudeSequence,
    N: int,
    resolution: float = 0.05,
    min_mass: float = 1e-3,
    grid_size: int = None
) -> PointSpectrumReport:
    """
    Locate the atoms of a measure from its amplitudes

    The Fejér sum rises to about (N + 1)·w at an atom of weight w; local maxima at least half of
    (N + 1)·`min_mass` high and `resolution` apart are reported, each with the smoothed mass within `resolution`
    of it. Side lobes of taller peaks are not counted as atoms

    Args:
        beta: β_n for at least |n| <= N
        N: The truncation of the Fejér sum
        resolution: The smallest distance between two atoms that are told apart
        min_mass: The lightest atom to look for
        grid_size: Samples of the smoothed density; the next power of two above 8(N + 1) by default

    Returns:
        Peak positions, masses and heights in ascending order of position
    """
    if N < 1:
        raise DomainError(f"The Fejér sum needs N >= 1, not {N}")

    if not beta.covers(N):
        raise DomainError(f"The Fejér sum up to N = {N} needs β_n for |n| <= {N}")

    if not 0 < resolution < math.pi:
        raise DomainError(f"The resolution must lie in (0, π), not {resolution!r}")

    if grid_size is None:
        grid_size = 1 << int(math.ceil(math.log2(8 * (N + 1))))

    grid = uniform_grid(grid_size)
    indices, amplitudes = series_terms(beta, N, "cesaro")
    beta_0 = beta.beta_0

    density = (evaluate_series(indices, amplitudes, grid, uniform=True) + beta_0).real

    step = TWO_PI / grid_size
    distance = max(1, int(resolution / step))

    # Pad circularly so that peaks at the seam of the circle are found once
    padded = numpy.concatenate((density[-distance:], density, density[:distance]))
    found, properties = scipy.signal.find_peaks(padded, height=0.5 * min_mass * (N + 1), distance=distance)

    found = found - distance
    inside = (found >= 0) & (found < grid_size)
    positions = found[inside]
    heights = properties["peak_heights"][inside]

    kept = _drop_side_lobes(grid[positions], heights, N, 0.5 * min_mass * (N + 1))
    kappas = grid[positions][kept]
    heights = heights[kept]
    masses = _window_masses(indices, amplitudes, beta_0, kappas, resolution)

    logging.debug({"operation": "point_spectrum_consistency", "N": N, "peaks": len(kappas)})

    return PointSpectrumReport(
        N_trunc=N,
        resolution=resolution,
        kappas=kappas,
        masses=masses,
        heights=heights
    )
