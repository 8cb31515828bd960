"""
Handlers for δ-kernel pairings and time averages
"""
from anticipation_lab.configuration import RunConfig
from anticipation_lab.kernels import KernelProbe
from anticipation_lab.kernels import convergence_table
from anticipation_lab.kernels import time_average
from anticipation_lab.measures import ReducedMeasure
from anticipation_lab.measures import read_measure
from anticipation_lab.measures import reduce
from anticipation_lab.system import logging
from anticipation_lab.utilities.constants import CONVERGENCE_CSV_HEADER
from anticipation_lab.utilities.types import command_handler

from .output import emit
from .output import emit_result


@command_handler("delta-kernel")
def pair_with_kernels(configuration: RunConfig) -> int:
    """
    Pair a reduced measure with scaled test functions or Dirichlet kernels over a ladder of N
    """
    measure = read_measure(configuration.measure)
    nu = measure if isinstance(measure, ReducedMeasure) else reduce(measure)

    probe_fields = {"alpha": configuration.alpha, "phi": configuration.phi, "psi": configuration.psi}
    if configuration.N_list is not None:
        probe_fields["N_list"] = configuration.N_list

    table = convergence_table(nu, KernelProbe(**probe_fields), kind=configuration.pairing, target=configuration.target)

    emit_result(
        configuration,
        table.to_document,
        CONVERGENCE_CSV_HEADER,
        table.rows,
        {"slope": table.slope, "diverging": table.diverging}
    )
    return 0


@command_handler("time-average")
def average_return_probability(configuration: RunConfig) -> int:
    result = time_average(
        read_measure(configuration.measure),
        configuration.alpha,
        configuration.T,
        dt=configuration.dt,
        tolerance=configuration.tolerance
    )
    logging.info({"value": result.value, "error_estimate": result.error_estimate, "halvings": result.halvings})

    emit(configuration, result.to_document().to_json())
    return 0
