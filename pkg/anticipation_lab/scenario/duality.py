"""
The duality system of a scenario: Σ ρ·w·cos(kκ) = δ_k and Σ ρ·w·sin(kκ) = 0 for 0 <= k <= L

Solvers for ρ (weighted minimum norm, piecewise constant over a partition, and maximal minimum through
linear programming) along with the order 1 positivity criterion
"""
import math
import typing

import numpy
import scipy.linalg
import scipy.optimize

from anticipation_lab.exceptions import DomainError
from anticipation_lab.exceptions import Infeasible
from anticipation_lab.exceptions import PartitionDegenerate
from anticipation_lab.measures import ReducedMeasure
from anticipation_lab.system import logging
from anticipation_lab.system import settings
from anticipation_lab.utilities.constants import TWO_PI

SOLVERS = ("min_norm", "partition")

MARGIN_CLASSES = ("positive", "boundary", "negative")


def _check_order(nu_q: ReducedMeasure, L: int):
    if not nu_q.probability:
        raise DomainError("The duality system is only defined over probability measures")

    if not 0 <= L < nu_q.size:
        raise DomainError(f"The order must satisfy 0 <= L < d = {nu_q.size}, not {L}")


def duality_matrix(nu_q: ReducedMeasure, L: int) -> typing.Tuple[numpy.ndarray, numpy.ndarray]:
    """
    The 2L + 1 real constraints on ρ as a matrix and a right hand side

    Rows are w·cos(kκ) for k = 0..L followed by w·sin(kκ) for k = 1..L

    Args:
        nu_q: The reduced spectral measure
        L: The order

    Returns:
        The (2L + 1) x d constraint matrix and the right hand side e_0
    """
    kappas = nu_q.kappas
    weights = nu_q.real_weights

    orders = numpy.arange(0, L + 1)
    angles = numpy.multiply.outer(orders, kappas)

    matrix = numpy.vstack((numpy.cos(angles) * weights, numpy.sin(angles[1:]) * weights))
    right_hand_side = numpy.zeros(2 * L + 1)
    right_hand_side[0] = 1.0

    return matrix, right_hand_side


def duality_residuals(nu_q: ReducedMeasure, L: int, rho: typing.Sequence[float]) -> float:
    """
    The largest absolute residual over the 2L + 1 duality constraints
    """
    rho = numpy.asarray(rho, dtype=float)

    if rho.shape != (nu_q.size,):
        raise DomainError(f"ρ needs one value per atom ({nu_q.size}), not {rho.shape}")

    matrix, right_hand_side = duality_matrix(nu_q, L)
    return float(numpy.max(numpy.abs(matrix @ rho - right_hand_side)))


def homogeneous_basis(nu_q: ReducedMeasure, L: int) -> numpy.ndarray:
    """
    An orthonormal basis of the solutions of the homogeneous duality system

    Adding any combination of the columns to a solution ρ yields another solution

    Returns:
        A d x (d - rank) matrix
    """
    matrix, _ = duality_matrix(nu_q, L)
    return scipy.linalg.null_space(matrix)


def _solve_min_norm(nu_q: ReducedMeasure, L: int) -> numpy.ndarray:
    matrix, right_hand_side = duality_matrix(nu_q, L)
    root_weights = numpy.sqrt(nu_q.real_weights)

    # With u = sqrt(w)·ρ, minimizing Σ ρ²·w is the plain minimum norm problem
    solution, _, rank, _ = scipy.linalg.lstsq(matrix / root_weights, right_hand_side)
    logging.debug({"solver": "min_norm", "d": nu_q.size, "L": L, "rank": int(rank)})

    return solution / root_weights


def partition_intervals(nu_q: ReducedMeasure, interval_count: int) -> numpy.ndarray:
    """
    Split the support into equally wide, contiguous intervals

    Returns:
        The index of the interval of every atom
    """
    kappas = nu_q.kappas
    low, high = kappas[0], kappas[-1]

    if interval_count == 1 or high == low:
        return numpy.zeros(nu_q.size, dtype=int)

    edges = numpy.linspace(low, high, interval_count + 1)
    return numpy.clip(numpy.searchsorted(edges, kappas, side="right") - 1, 0, interval_count - 1)


def _solve_partition(nu_q: ReducedMeasure, L: int) -> numpy.ndarray:
    interval_count = 2 * L + 1
    membership = partition_intervals(nu_q, interval_count)

    masses = numpy.bincount(membership, weights=nu_q.real_weights, minlength=interval_count)
    empty = numpy.flatnonzero(masses <= 0)

    if len(empty):
        raise PartitionDegenerate(
            f"Intervals {', '.join(str(index) for index in empty)} of the {interval_count} partition intervals hold no mass"
        )

    indicator = numpy.zeros((nu_q.size, interval_count))
    indicator[numpy.arange(nu_q.size), membership] = 1.0

    matrix, right_hand_side = duality_matrix(nu_q, L)

    try:
        levels = scipy.linalg.solve(matrix @ indicator, right_hand_side)
    except (scipy.linalg.LinAlgError, ValueError) as error:
        raise Infeasible(f"The partition system of order {L} is singular: {error}") from error

    logging.debug({"solver": "partition", "d": nu_q.size, "L": L, "levels": levels})

    return indicator @ levels


def solve_rho(
    nu_q: ReducedMeasure,
    L: int,
    solver: str = "min_norm",
    with_basis: bool = False
) -> typing.Union[numpy.ndarray, typing.Tuple[numpy.ndarray, numpy.ndarray]]:
    """
    Solve the duality system of order L for ρ

    'min_norm' returns the solution with the smallest Σ ρ²·w. 'partition' splits the support into 2L + 1
    contiguous intervals and finds the solution that is constant on each of them

    Args:
        nu_q: A reduced probability measure with d atoms
        L: The order, 0 <= L < d
        solver: 'min_norm' or 'partition'
        with_basis: Also return a basis of the homogeneous solutions

    Returns:
        ρ at every atom, paired with the homogeneous basis if `with_basis` is set
    """
    _check_order(nu_q, L)
    solver = solver.replace("-", "_")

    if solver == "min_norm":
        rho = _solve_min_norm(nu_q, L)
    elif solver == "partition":
        rho = _solve_partition(nu_q, L)
    else:
        raise DomainError(f"'{solver}' is not a duality solver. Choose one of {', '.join(SOLVERS)}")

    residual = duality_residuals(nu_q, L, rho)

    if not residual <= settings.residual_tolerance:
        raise Infeasible(
            f"The duality system of order {L} over {nu_q.size} atoms has no solution; "
            f"the best {solver} candidate leaves a residual of {residual:.3e}"
        )

    if with_basis:
        return rho, homogeneous_basis(nu_q, L)

    return rho


def classify_margin(margin: float) -> str:
    """
    Classify the optimal min ρ of the positivity program

    Returns:
        'positive' above the positivity threshold, 'negative' below its negation and 'boundary' in between
    """
    threshold = settings.positivity_threshold

    if margin > threshold:
        return "positive"
    elif margin >= -threshold:
        return "boundary"

    return "negative"


def solve_rho_nonneg(nu_q: ReducedMeasure, L: int) -> typing.Tuple[numpy.ndarray, float]:
    """
    Find the solution of the duality system with the largest smallest value

    Solves: maximize t subject to t <= ρ_n for every n and the duality constraints, with scipy's HiGHS
    linear programming solver. The solution is polished with a minimum norm correction afterwards

    Args:
        nu_q: A reduced probability measure with d atoms
        L: The order, 0 <= L < d

    Returns:
        ρ and its margin min ρ; classify the margin with `classify_margin`
    """
    _check_order(nu_q, L)

    matrix, right_hand_side = duality_matrix(nu_q, L)
    d = nu_q.size

    objective = numpy.zeros(d + 1)
    objective[-1] = -1.0

    bound_matrix = numpy.hstack((-numpy.eye(d), numpy.ones((d, 1))))
    equality_matrix = numpy.hstack((matrix, numpy.zeros((matrix.shape[0], 1))))

    result = scipy.optimize.linprog(
        objective,
        A_ub=bound_matrix,
        b_ub=numpy.zeros(d),
        A_eq=equality_matrix,
        b_eq=right_hand_side,
        bounds=[(None, None)] * d + [(None, 1.0)],
        method="highs"
    )

    logging.debug({"solver": "linprog", "d": d, "L": L, "status": int(result.status), "message": str(result.message)})

    if result.status == 2 or result.x is None:
        raise Infeasible(f"No solution of the duality system of order {L} exists over these {d} atoms: {result.message}")

    if result.status != 0:
        logging.warning(f"The positivity program of order {L} ended with status {result.status}: {result.message}")

    rho = result.x[:d]
    correction, *_ = scipy.linalg.lstsq(matrix, right_hand_side - matrix @ rho)
    rho = rho + correction

    residual = duality_residuals(nu_q, L, rho)
    if not residual <= settings.residual_tolerance:
        raise Infeasible(f"The positivity program of order {L} only reached a residual of {residual:.3e}")

    margin = float(numpy.min(rho))

    if classify_margin(margin) == "boundary":
        logging.warning(f"The positivity margin {margin:.3e} at order {L} lies on the boundary")

    return rho, margin


def support_span(nu_q: ReducedMeasure) -> float:
    """
    The length of the shortest arc of the circle that holds every atom

    Examples:
        >>> support_span(ReducedMeasure.from_atoms([-math.pi / 2, math.pi / 2], probability=True))
        3.141592653589793
    """
    kappas = nu_q.kappas

    if len(kappas) < 2:
        return 0.0

    gaps = numpy.append(numpy.diff(kappas), kappas[0] + TWO_PI - kappas[-1])
    return float(TWO_PI - numpy.max(gaps))


def order1_criterion(nu_q: ReducedMeasure) -> bool:
    """
    Whether strictly positive solutions of order 1 exist: true iff the support is not confined to an arc of
    length π or less
    """
    if not nu_q.probability:
        raise DomainError("The order 1 criterion is only defined for probability measures")

    return support_span(nu_q) > math.pi
