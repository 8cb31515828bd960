"""
Characteristic polynomials of spectra and the recovery of spectra from their amplitudes

With ω_k = exp(-i·κ_k), the amplitudes β_n = Σ w_k·ω_k^n satisfy the recurrence
β_{n+d} = Σ_{m<d} a_{d-m}·β_{n+m}. The first 2d amplitudes fix the coefficients a, the roots of the
characteristic polynomial give the positions and a Vandermonde system gives the weights
"""
import itertools
import typing

import numpy
import scipy.linalg

from anticipation_lab.exceptions import ContractError
from anticipation_lab.exceptions import DomainError
from anticipation_lab.exceptions import IllConditioned
from anticipation_lab.exceptions import NonUnitRoot
from anticipation_lab.documents.scenario import ConditionReport
from anticipation_lab.measures import AmplitudeSequence
from anticipation_lab.measures import reduced_positions
from anticipation_lab.system import logging
from anticipation_lab.system import settings
from anticipation_lab.utilities.types import REAL_VALUES

from .models import CharacteristicPolynomial
from .models import RecoveredSpectrum
from .models import RECOVERED_MASS_TOLERANCE

NEWTON_STEPS = 2
"""Newton iterations applied to each eigenvalue of the companion matrix"""

MINIMUM_RECOVERED_WEIGHT = -1e-8
"""The most negative weight a recovered spectrum may carry"""


def _minimum_gap(values: numpy.ndarray) -> float:
    if len(values) < 2:
        return float("inf")

    return min(abs(first - second) for first, second in itertools.combinations(values, 2))


def char_poly_from_spectrum(kappas: REAL_VALUES) -> CharacteristicPolynomial:
    """
    The characteristic polynomial whose roots are exp(-i·κ) for every given position

    Examples:
        >>> char_poly_from_spectrum([0.0]).coeffs
        array([1.+0.j])

    Args:
        kappas: Distinct positions on the circle

    Returns:
        The coefficients a_1..a_d
    """
    kappas = numpy.asarray(kappas, dtype=float).reshape(-1)

    if len(kappas) == 0:
        raise DomainError("A characteristic polynomial needs at least one position")

    roots = numpy.exp(-1j * kappas)

    if _minimum_gap(roots) <= settings.merge_tolerance:
        raise DomainError("The positions of a characteristic polynomial must be distinct on the circle")

    # numpy.poly gives ω^d + p_1·ω^{d-1} + ... + p_d, so a_j = -p_j
    return CharacteristicPolynomial(coeffs=-numpy.poly(roots)[1:])


def find_roots(polynomial: CharacteristicPolynomial) -> numpy.ndarray:
    """
    The roots of a characteristic polynomial

    The eigenvalues of the companion matrix serve as starting points for a few Newton steps on the
    polynomial itself

    Returns:
        The d complex roots
    """
    coefficients = polynomial.polynomial
    derivative = numpy.polyder(coefficients)

    roots = scipy.linalg.eigvals(scipy.linalg.companion(coefficients))

    for _ in range(NEWTON_STEPS):
        slopes = numpy.polyval(derivative, roots)
        steps = numpy.divide(
            numpy.polyval(coefficients, roots),
            slopes,
            out=numpy.zeros_like(roots),
            where=slopes != 0
        )
        roots = roots - steps

    return roots


def recover_from_amplitudes(beta: AmplitudeSequence, d: int) -> RecoveredSpectrum:
    """
    Recover a d point spectrum from its amplitudes β_0..β_{2d-1}

    Args:
        beta: Amplitudes of a probability measure, known at least up to n = 2d - 1
        d: The number of atoms to look for

    Returns:
        The positions and weights along with the diagnostics of the recovery
    """
    if d < 1:
        raise DomainError(f"At least one atom must be recovered, not {d}")

    if not beta.covers(2 * d - 1):
        raise DomainError(f"Recovering {d} atoms needs β_n up to n = {2 * d - 1}; only {beta.n_max} is known")

    moments = beta.nonnegative(2 * d)
    hankel = scipy.linalg.hankel(moments[:d], moments[d - 1:2 * d - 1])

    condition_number = float(numpy.linalg.cond(hankel))

    if not condition_number <= settings.condition_limit:
        raise IllConditioned(
            f"The moment system for {d} atoms has a condition number of {condition_number:.3e}, "
            f"beyond the limit of {settings.condition_limit:.3e}"
        )

    # x_m = a_{d-m}
    recurrence = scipy.linalg.solve(hankel, moments[d:2 * d])
    polynomial = CharacteristicPolynomial(coeffs=recurrence[::-1])

    roots = find_roots(polynomial)

    minimum_gap = _minimum_gap(roots)
    if minimum_gap < settings.root_gap_limit:
        raise IllConditioned(f"Two recovered roots lie only {minimum_gap:.3e} apart")

    unit_deviation = float(numpy.max(numpy.abs(1.0 - numpy.abs(roots))))
    if unit_deviation > settings.unit_root_tolerance:
        raise NonUnitRoot(f"A recovered root lies {unit_deviation:.3e} away from the unit circle")

    kappas = reduced_positions(-numpy.angle(roots))
    nodes = numpy.exp(-1j * kappas)

    vandermonde = numpy.vander(nodes, d, increasing=True).T
    complex_weights = scipy.linalg.solve(vandermonde, moments[:d])

    order = numpy.argsort(kappas)
    kappas = kappas[order]
    complex_weights = complex_weights[order]
    weights = complex_weights.real

    report = ConditionReport(
        condition_number=condition_number,
        min_root_gap=minimum_gap,
        max_unit_deviation=unit_deviation,
        max_weight_imaginary=float(numpy.max(numpy.abs(complex_weights.imag)))
    )
    logging.debug(report.dict(exclude_none=True))

    if numpy.min(weights) < MINIMUM_RECOVERED_WEIGHT:
        raise ContractError(f"The recovered weights include {numpy.min(weights):.3e}, which is negative")

    if abs(numpy.sum(weights) - beta.beta_0) > RECOVERED_MASS_TOLERANCE:
        raise ContractError(f"The recovered weights sum to {numpy.sum(weights)!r} rather than β_0 = {beta.beta_0!r}")

    return RecoveredSpectrum(kappas=kappas, weights=weights, condition_report=report)


def spectrum_round_trip_error(
    kappas: numpy.ndarray,
    weights: numpy.ndarray,
    recovered: RecoveredSpectrum
) -> typing.Tuple[float, float]:
    """
    The largest circular position error and the largest weight error of a recovery

    Positions are compared in sorted order, after matching the atom nearest to -π across the wrap point

    Returns:
        The position error and the weight error
    """
    order = numpy.argsort(kappas)
    expected_kappas = numpy.asarray(kappas)[order]
    expected_weights = numpy.asarray(weights)[order]

    if len(expected_kappas) != recovered.d:
        return float("inf"), float("inf")

    best = (float("inf"), float("inf"))

    # An atom close to -π may come back just below π, so every rotation of the order is tried
    for rotation in range(recovered.d):
        candidate_kappas = numpy.roll(recovered.kappas, rotation)
        candidate_weights = numpy.roll(recovered.weights, rotation)
        position_error = float(numpy.max(numpy.abs(numpy.angle(numpy.exp(1j * (candidate_kappas - expected_kappas))))))
        weight_error = float(numpy.max(numpy.abs(candidate_weights - expected_weights)))

        if position_error < best[0]:
            best = (position_error, weight_error)

    return best
