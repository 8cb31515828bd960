"""
Reduction of measures modulo a period, Fourier transforms and amplitude sequences
"""
import math
import typing

import numpy

from anticipation_lab.exceptions import DomainError
from anticipation_lab.system import logging
from anticipation_lab.utilities.constants import TWO_PI
from anticipation_lab.utilities.types import TIME

from .atoms import PointMeasure
from .atoms import ReducedMeasure
from .amplitudes import AmplitudeSequence


def shift(kappa_raw: typing.Union[float, numpy.ndarray]) -> typing.Union[float, numpy.ndarray]:
    """
    Map [0, 2π) onto [-π, π): values below π are kept, the rest move down by 2π

    Examples:
        >>> shift(0.0)
        0.0
        >>> shift(math.pi)
        -3.141592653589793

    Args:
        kappa_raw: A value or an array of values in [0, 2π)

    Returns:
        The shifted value(s)
    """
    values = numpy.asarray(kappa_raw, dtype=float)

    if not numpy.all(numpy.isfinite(values)) or numpy.any(values < 0) or numpy.any(values >= TWO_PI):
        raise DomainError(f"shift is only defined on [0, 2π); received {kappa_raw!r}")

    shifted = numpy.where(values < math.pi, values, values - TWO_PI)

    return float(shifted) if shifted.ndim == 0 else shifted


def reduced_positions(positions: numpy.ndarray, modulus: float = TWO_PI) -> numpy.ndarray:
    """
    The representative of every position in [-modulus/2, modulus/2)

    Args:
        positions: Raw positions
        modulus: The period to fold with

    Returns:
        One representative per position, congruent to it modulo `modulus`
    """
    if not modulus > 0:
        raise DomainError(f"The modulus of a reduction must be positive, not {modulus!r}")

    remainders = numpy.mod(numpy.asarray(positions, dtype=float), modulus)

    # numpy.mod may round tiny negative values up to the modulus itself
    remainders[remainders >= modulus] = 0.0

    if modulus == TWO_PI:
        return shift(remainders)

    # r - modulus is exact for r in [modulus/2, modulus), so nothing can round onto the upper end
    return numpy.where(remainders < modulus / 2.0, remainders, remainders - modulus)


def reduce(m: PointMeasure, modulus: float = TWO_PI) -> ReducedMeasure:
    """
    Fold a measure modulo `modulus`; weights of congruent atoms are summed

    Args:
        m: The measure to fold
        modulus: The period; 2π gives the reduced measure on K = [-π, π)

    Returns:
        The reduced measure
    """
    representatives = reduced_positions(m.positions, modulus)
    reduced = ReducedMeasure.from_atoms(representatives, m.weights, probability=m.probability, modulus=modulus)

    if reduced.size < m.size:
        logging.debug(f"Reduction modulo {modulus!r} merged {m.size} atoms into {reduced.size}")

    return reduced


def fourier(m: PointMeasure, t: TIME) -> typing.Union[complex, numpy.ndarray]:
    """
    Σ weight · exp(-i · position · t) for a single time or an array of times
    """
    return m.fourier(t)


def amplitudes(m: PointMeasure, n_max: int) -> AmplitudeSequence:
    """
    β_n = fourier(m, n) for |n| <= n_max

    Args:
        m: A probability measure
        n_max: The largest |n| to compute

    Returns:
        The amplitude sequence
    """
    if not m.probability:
        raise DomainError("Amplitudes are only defined for probability measures")

    if n_max < 0:
        raise DomainError(f"n_max must not be negative, got {n_max}")

    # Computing n >= 0 only keeps β_{-n} = conj(β_n) exact for real weights
    return AmplitudeSequence.from_nonnegative(m.fourier(numpy.arange(0, n_max + 1)))


def essentially_periodic(nu: ReducedMeasure, tolerance: float = 1e-8) -> bool:
    """
    Whether the atoms form a rotated, complete set of d-th roots of unity

    Those are the only d-point spectra whose duality system can be solved up to order d - 1

    Args:
        nu: A reduced measure with d atoms
        tolerance: How far exp(-i·d·κ) may vary over the atoms

    Returns:
        True if every exp(-i·d·κ_n) takes the same value
    """
    powers = numpy.exp(-1j * nu.size * nu.positions)
    return bool(numpy.max(numpy.abs(powers - powers[0])) <= tolerance)
