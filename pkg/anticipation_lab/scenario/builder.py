"""
Building scenarios from solutions of the duality system, lifting them back onto raw spectra and
constructing ν_q from a prescribed ν_s
"""
import math
import typing

import numpy

from anticipation_lab.exceptions import ContractError
from anticipation_lab.exceptions import DomainError
from anticipation_lab.documents.scenario import ConditionReport
from anticipation_lab.measures import RawPointMeasure
from anticipation_lab.measures import ReducedMeasure
from anticipation_lab.measures import reduced_positions
from anticipation_lab.system import logging
from anticipation_lab.system import settings

from .duality import duality_residuals
from .models import Scenario

ORTHOGONAL_ZETA = 1.0 - 1e-8
"""ζ at or above this marks an orthogonal evolution, which forces ρ ≡ 1"""

ORTHOGONAL_RHO_TOLERANCE = 1e-6
"""How far ρ may stray from 1 in an orthogonal evolution"""


def build_scenario(
    nu_q: ReducedMeasure,
    L: int,
    rho: typing.Sequence[float],
    condition_report: ConditionReport = None
) -> Scenario:
    """
    Derive ‖ρ‖₁, the sign function, ν_r, ν_s, ζ and positivity from a solution ρ of the duality system

    Args:
        nu_q: A reduced probability measure
        L: The order ρ solves the duality system for
        rho: ρ at every atom of ν_q
        condition_report: Diagnostics of the solver that produced ρ

    Returns:
        The scenario
    """
    if not nu_q.probability:
        raise DomainError("Scenarios are built over reduced probability measures")

    rho = numpy.asarray(rho, dtype=float).reshape(-1)
    residual = duality_residuals(nu_q, L, rho)

    if not residual <= settings.residual_tolerance:
        raise ContractError(f"ρ leaves a duality residual of {residual:.3e} at order {L}")

    weights = nu_q.real_weights
    magnitudes = numpy.abs(rho)

    norm1 = math.fsum(magnitudes * weights)
    sign_fn = numpy.where(rho >= 0, 1, -1)

    nu_r = ReducedMeasure.from_atoms(nu_q.kappas, rho ** 2 * weights)

    carried = magnitudes * weights > 0
    sigma = magnitudes[carried] * weights[carried]
    nu_s = ReducedMeasure.from_atoms(nu_q.kappas[carried], sigma / math.fsum(sigma), probability=True)

    zeta = min(math.fsum(weights * numpy.sqrt(magnitudes / norm1)), 1.0)
    positive = bool(numpy.min(rho) > -settings.positivity_threshold)

    if positive and abs(norm1 - 1.0) > settings.residual_tolerance:
        raise ContractError(f"ρ is non-negative but ‖ρ‖₁ = {norm1!r}")

    if zeta >= ORTHOGONAL_ZETA and numpy.max(numpy.abs(rho - 1.0)) > ORTHOGONAL_RHO_TOLERANCE:
        logging.warning(f"ζ = {zeta!r} is within rounding of an orthogonal evolution, but ρ is not constant")

    report = (condition_report or ConditionReport()).copy(
        update={"residual": residual, "r0_norm": math.sqrt(math.fsum(rho ** 2 * weights))}
    )

    logging.debug({"L": L, "norm1": norm1, "zeta": zeta, "positive": positive, "residual": residual})

    return Scenario(
        nu_q=nu_q,
        L=L,
        rho=rho,
        norm1=norm1,
        sign_fn=sign_fn,
        nu_r=nu_r,
        nu_s=nu_s,
        zeta=zeta,
        positive=positive,
        condition_report=report
    )


def lift_joint_measure(scenario: Scenario, mu_q_raw: RawPointMeasure) -> RawPointMeasure:
    """
    Lift ν_s onto a raw spectrum whose reduction is ν_q

    Every raw atom keeps its position and has its weight scaled by |ρ|/‖ρ‖₁ at its reduced position

    Args:
        scenario: The scenario holding ρ
        mu_q_raw: The raw spectral measure ν_q was reduced from

    Returns:
        The raw lift μ_s of ν_s
    """
    if not mu_q_raw.probability:
        raise DomainError("Only raw probability measures can be lifted")

    raw_kappas = reduced_positions(mu_q_raw.positions)
    distances = numpy.abs(
        numpy.angle(numpy.exp(1j * numpy.subtract.outer(raw_kappas, scenario.nu_q.kappas)))
    )
    nearest = numpy.argmin(distances, axis=1)

    # Merged runs may spread over a few tolerances and folding loses precision on large positions
    tolerance = (
        settings.merge_tolerance * max(mu_q_raw.size, 1)
        + 8 * numpy.finfo(float).eps * max(1.0, float(numpy.max(numpy.abs(mu_q_raw.positions))))
    )
    stray = distances[numpy.arange(len(nearest)), nearest] > tolerance

    if numpy.any(stray):
        raise DomainError(
            f"{int(numpy.sum(stray))} atoms of the raw measure do not reduce onto atoms of the scenario's ν_q"
        )

    factors = numpy.abs(scenario.rho[nearest]) / scenario.norm1
    lifted = mu_q_raw.real_weights * factors
    carried = lifted > 0

    return RawPointMeasure.from_atoms(
        mu_q_raw.positions[carried],
        lifted[carried] / math.fsum(lifted[carried]),
        probability=True
    )


def _partition_masses(nu_s: ReducedMeasure, partition: typing.Iterable[int]) -> typing.Tuple[numpy.ndarray, float, float]:
    indices = sorted({int(index) for index in partition})

    if any(index < 0 or index >= nu_s.size for index in indices):
        raise DomainError(f"Partition indices must lie between 0 and {nu_s.size - 1}")

    in_a = numpy.zeros(nu_s.size, dtype=bool)
    in_a[indices] = True

    if in_a.all() or not in_a.any():
        raise DomainError("Both parts of the partition must hold at least one atom")

    weights = nu_s.real_weights
    return in_a, math.fsum(weights[in_a]), math.fsum(weights[~in_a])


def admissible_partition(nu_s: ReducedMeasure, zeta: float, partition: typing.Iterable[int]) -> bool:
    """
    Whether ν_q can be built from ν_s with the given partition: the complement must weigh less than ζ²
    """
    _, _, mass_b = _partition_masses(nu_s, partition)
    return zeta ** 2 > mass_b


def construct_nu_q_from_nu_s(
    nu_s: ReducedMeasure,
    zeta: float,
    partition: typing.Iterable[int]
) -> ReducedMeasure:
    """
    Build a ν_q whose scenario has the given ν_s and ζ

    With a = ν_s(A) and b = ν_s(B), the scale factors x on A and y on B solve a·x + b·y = ζ and
    a·x² + b·y² = 1 with 0 < x <= 1 <= y; ν_q then carries v²·σ at every atom

    Args:
        nu_s: A reduced probability measure
        zeta: The size of the embedded orthogonal evolution, 0 < ζ <= 1
        partition: The indices of the atoms in A

    Returns:
        The constructed ν_q
    """
    if not nu_s.probability:
        raise DomainError("ν_s must be a probability measure")

    if not 0 < zeta <= 1:
        raise DomainError(f"ζ must lie in (0, 1], not {zeta!r}")

    in_a, mass_a, mass_b = _partition_masses(nu_s, partition)

    if zeta == 1:
        return nu_s

    if not zeta ** 2 > mass_b:
        raise DomainError(
            f"ζ² = {zeta ** 2!r} does not exceed the mass {mass_b!r} of the complement; no positive solution exists"
        )

    discriminant = mass_a * mass_b * (1.0 - zeta ** 2)
    if discriminant < 0:
        raise ContractError(f"The partition equations have a negative discriminant: {discriminant!r}")

    x = zeta - math.sqrt(mass_b * (1.0 - zeta ** 2) / mass_a)
    y = zeta + math.sqrt(mass_a * (1.0 - zeta ** 2) / mass_b)

    logging.debug({"a": mass_a, "b": mass_b, "x": x, "y": y, "zeta": zeta})

    scales = numpy.where(in_a, x, y)
    weights = scales ** 2 * nu_s.real_weights

    return ReducedMeasure.from_atoms(nu_s.kappas, weights / math.fsum(weights), probability=True)
