"""
Model spectra: equidistant, random, hydrogen-like, from file, and clustered versions of reduced spectra
"""
import math
import pathlib
import typing

import numpy

from anticipation_lab.exceptions import DomainError
from anticipation_lab.system import logging
from anticipation_lab.utilities.constants import TWO_PI

from .atoms import PointMeasure
from .atoms import RawPointMeasure
from .atoms import ReducedMeasure
from .files import read_measure
from .operations import reduced_positions

SPECTRUM_KINDS = ("equidistant", "random", "hydrogen", "file")


def _as_probability(measure: PointMeasure) -> PointMeasure:
    if measure.probability:
        return measure

    weights = measure.weights
    if numpy.all(weights.imag == 0) and numpy.all(weights.real > 0) and abs(math.fsum(weights.real) - 1) <= 1e-12:
        return type(measure).from_atoms(measure.positions, weights, probability=True, **measure._shape_fields())

    return measure


def gen_spectrum(
    kind: str,
    d: int = None,
    seed: int = None,
    scale: float = 1.0,
    path: typing.Union[str, pathlib.Path] = None
) -> PointMeasure:
    """
    Generate a spectrum with equal weights 1/d

    * equidistant: λ_m = scale·(-π + 2πm/d)
    * random: λ uniform in scale·[-π, π) drawn from `numpy.random.default_rng(seed)`
    * hydrogen: λ_n = -scale/n², n = 1..d
    * file: the measure stored at `path`; flagged as a probability measure when its weights allow it

    Args:
        kind: One of 'equidistant', 'random', 'hydrogen', 'file'
        d: The number of atoms (levels for 'hydrogen')
        seed: The seed for 'random'; required there
        scale: Multiplies every generated position
        path: The file for 'file'

    Returns:
        The generated measure
    """
    if kind not in SPECTRUM_KINDS:
        raise DomainError(f"'{kind}' is not a kind of spectrum. Choose one of {', '.join(SPECTRUM_KINDS)}")

    if kind == "file":
        if path is None:
            raise DomainError("A path is required to read a spectrum from a file")

        measure = _as_probability(read_measure(path))

        if d is not None and measure.size != d:
            logging.warning(f"'{path}' holds {measure.size} atoms, not the {d} that were asked for")

        return measure

    if d is None or d < 1:
        raise DomainError(f"A spectrum needs at least one atom, not {d!r}")

    if not (math.isfinite(scale) and scale != 0):
        raise DomainError(f"The scale of a spectrum must be finite and non-zero, not {scale!r}")

    if kind == "equidistant":
        positions = scale * (-math.pi + TWO_PI * numpy.arange(d) / d)
    elif kind == "random":
        if seed is None:
            raise DomainError("Random spectra need a seed")
        positions = scale * numpy.random.default_rng(seed).uniform(-math.pi, math.pi, size=d)
    else:
        positions = -scale / numpy.arange(1, d + 1, dtype=float) ** 2

    return RawPointMeasure.from_atoms(positions, numpy.full(d, 1.0 / d), probability=True)


def cluster_fattening(base: ReducedMeasure, half_width: float, cluster_size: int) -> ReducedMeasure:
    """
    Replace every atom of a reduced measure with a cluster of equally weighted atoms

    The cluster of an atom at κ spreads `cluster_size` atoms evenly over [κ - half_width, κ + half_width]
    and shares the atom's weight among them

    Args:
        base: The measure to fatten
        half_width: Half of the width of each cluster
        cluster_size: The number of atoms per cluster

    Returns:
        The clustered measure, folded back onto K
    """
    if cluster_size < 1:
        raise DomainError(f"A cluster needs at least one atom, not {cluster_size}")

    if half_width < 0:
        raise DomainError(f"The half width of a cluster must not be negative, not {half_width!r}")

    offsets = numpy.linspace(-half_width, half_width, cluster_size) if cluster_size > 1 else numpy.zeros(1)
    positions = numpy.add.outer(base.positions, offsets).reshape(-1)
    weights = numpy.repeat(base.weights / cluster_size, cluster_size)

    return ReducedMeasure.from_atoms(
        reduced_positions(positions),
        weights,
        probability=base.probability
    )


def gapped_spectrum(generator: numpy.random.Generator, d: int, min_gap: float) -> ReducedMeasure:
    """
    A random reduced probability measure whose atoms lie at least `min_gap` apart on the circle

    Gaps are `min_gap` plus a uniformly distributed share of the remaining length; the whole pattern is rotated
    by a uniform angle. Weights are drawn from [½, 3/2) and normalized

    Args:
        generator: The source of randomness
        d: The number of atoms
        min_gap: The smallest circular distance between two atoms

    Returns:
        The measure
    """
    if d < 1:
        raise DomainError(f"A spectrum needs at least one atom, not {d}")

    spare = TWO_PI - d * min_gap

    if min_gap < 0 or spare <= 0:
        raise DomainError(f"{d} atoms do not fit on the circle {min_gap!r} apart")

    gaps = min_gap + spare * generator.dirichlet(numpy.ones(d))
    positions = generator.uniform(0.0, TWO_PI) + numpy.concatenate(([0.0], numpy.cumsum(gaps[:-1])))
    weights = generator.uniform(0.5, 1.5, size=d)

    return ReducedMeasure.from_atoms(reduced_positions(positions), weights / math.fsum(weights), probability=True)
