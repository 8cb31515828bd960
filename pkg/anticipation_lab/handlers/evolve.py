"""
Handlers that solve duality systems, recover spectra and probe the domain of positivity
"""
from anticipation_lab.configuration import LINEAR_PROGRAM_SOLVER
from anticipation_lab.configuration import RunConfig
from anticipation_lab.documents.scenario import ConditionReport
from anticipation_lab.measures import ReducedMeasure
from anticipation_lab.measures import read_amplitudes
from anticipation_lab.measures import read_measure
from anticipation_lab.measures import reduce
from anticipation_lab.scenario import build_scenario
from anticipation_lab.scenario import classify_margin
from anticipation_lab.scenario import clustered_positivity
from anticipation_lab.scenario import probe_positivity_domain
from anticipation_lab.scenario import recover_from_amplitudes
from anticipation_lab.scenario import solve_rho
from anticipation_lab.scenario import solve_rho_nonneg
from anticipation_lab.system import logging
from anticipation_lab.utilities.constants import MEASURE_CSV_HEADER
from anticipation_lab.utilities.types import command_handler

from .output import emit
from .output import emit_result


@command_handler("evolve solve")
def solve_scenario(configuration: RunConfig) -> int:
    """
    Reduce a measure, solve its duality system of the requested order and write the resulting scenario
    """
    measure = read_measure(configuration.measure)
    nu_q = measure if isinstance(measure, ReducedMeasure) else reduce(measure)

    if configuration.solver == LINEAR_PROGRAM_SOLVER:
        rho, margin = solve_rho_nonneg(nu_q, configuration.order)
        report = ConditionReport(solver=configuration.solver, margin=margin, classification=classify_margin(margin))
    else:
        rho = solve_rho(nu_q, configuration.order, solver=configuration.solver)
        report = ConditionReport(solver=configuration.solver)

    scenario = build_scenario(nu_q, configuration.order, rho, condition_report=report)

    logging.info({
        "L": scenario.L,
        "solver": configuration.solver,
        "residual": scenario.condition_report.residual,
        "positive": scenario.positive,
        "zeta": scenario.zeta
    })

    emit(configuration, scenario.to_document().to_json())
    return 0


@command_handler("evolve recover")
def recover_spectrum(configuration: RunConfig) -> int:
    recovered = recover_from_amplitudes(read_amplitudes(configuration.beta), configuration.d)
    logging.info(recovered.condition_report.dict(exclude_none=True))

    emit_result(configuration, recovered.to_document, MEASURE_CSV_HEADER, lambda: recovered.to_measure().to_csv_rows())
    return 0


@command_handler("evolve positivity")
def probe_positivity(configuration: RunConfig) -> int:
    report = probe_positivity_domain(
        configuration.d,
        configuration.order,
        configuration.trials,
        configuration.seed,
        threads=configuration.threads
    )
    logging.info(f"{report.positive} of {report.trials} spectra with {report.d} atoms are positive at order {report.L}")

    emit(configuration, report.json(indent=4) + "\n")
    return 0


@command_handler("evolve clustered")
def probe_clusters(configuration: RunConfig) -> int:
    """
    Spread the atoms of an equidistant spectrum into clusters and classify the positivity program again
    """
    report = clustered_positivity(
        configuration.d,
        configuration.order,
        configuration.half_width,
        configuration.cluster_size,
        seed=configuration.seed
    )

    emit(configuration, report.json(indent=4) + "\n")
    return 0
