"""
Handlers for anticipation amplitudes, strength bounds and model measures
"""
import json

from anticipation_lab.anticipation import anticipation_amplitudes
from anticipation_lab.anticipation import lookahead_growth
from anticipation_lab.anticipation import model_measure
from anticipation_lab.anticipation import spectral_difference
from anticipation_lab.anticipation import strength_bound_check
from anticipation_lab.configuration import RunConfig
from anticipation_lab.documents import ScenarioDocument
from anticipation_lab.measures import RawPointMeasure
from anticipation_lab.measures import read_measure
from anticipation_lab.scenario import Scenario
from anticipation_lab.scenario import lift_joint_measure
from anticipation_lab.system import logging
from anticipation_lab.utilities.common import rows_to_csv
from anticipation_lab.utilities.constants import GROWTH_CSV_HEADER
from anticipation_lab.utilities.constants import MODEL_CSV_HEADER
from anticipation_lab.utilities.constants import REPORT_CSV_HEADER
from anticipation_lab.utilities.types import command_handler

from .output import emit
from .output import emit_result

DEFAULT_MODEL_GRID = 2048


def _read_raw_measure(path: str) -> RawPointMeasure:
    measure = read_measure(path)

    if isinstance(measure, RawPointMeasure):
        return measure

    return RawPointMeasure.from_atoms(measure.positions, measure.weights, probability=measure.probability)


@command_handler("anticipate")
def anticipate(configuration: RunConfig) -> int:
    """
    α_n and p_n of a positive scenario for 0 <= n <= N, followed by the strength bound chain when N reaches L
    """
    scenario = Scenario.from_document(ScenarioDocument.parse(configuration.scenario))
    mu_s_raw = lift_joint_measure(scenario, _read_raw_measure(configuration.raw))

    report = anticipation_amplitudes(scenario, mu_s_raw, configuration.N, retrospective=configuration.retrospective)

    if not configuration.retrospective and configuration.N >= scenario.L:
        bounds = strength_bound_check(scenario, spectral_difference(mu_s_raw), report)
        report = report.copy(update={"bounds": bounds})
    else:
        logging.debug(f"No strength bounds for N = {configuration.N} at order {scenario.L}")

    footer = {"P_N": report.P_N}
    footer.update({f"moment_{order:g}": value for order, value in report.moments.items()})

    if report.bounds is not None:
        footer.update(report.bounds.dict())

    emit_result(configuration, report.to_document, REPORT_CSV_HEADER, report.to_csv_rows, footer)
    return 0


@command_handler("anticipate model")
def anticipate_model(configuration: RunConfig) -> int:
    report = model_measure(
        configuration.kind,
        configuration.L,
        M=configuration.M,
        N=DEFAULT_MODEL_GRID if configuration.N is None else configuration.N,
        c=configuration.c,
        eps=configuration.eps
    )

    footer = {
        "maximum": report.maximum,
        "argmax": report.argmax,
        "P_L": report.P_L,
        "mean_lookahead": report.mean_lookahead,
        "predicted_maximum": report.predictions.maximum,
        "predicted_argmax": report.predictions.argmax,
        "predicted_P_L": report.predictions.P_L,
    }

    if report.predictions.minimum is not None:
        footer["predicted_minimum"] = report.predictions.minimum

    emit_result(configuration, report.to_document, MODEL_CSV_HEADER, report.to_csv_rows, footer)
    return 0


@command_handler("anticipate growth")
def anticipate_growth(configuration: RunConfig) -> int:
    """
    The mean look-ahead of a model measure next to ln L over a ladder of orders
    """
    rows = lookahead_growth(
        configuration.kind,
        N=DEFAULT_MODEL_GRID if configuration.N is None else configuration.N,
        c=configuration.c,
        eps=configuration.eps
    )

    if configuration.output_format == "csv":
        text = rows_to_csv(GROWTH_CSV_HEADER, rows)
    else:
        text = json.dumps(
            {
                "kind": configuration.kind,
                "rows": [dict(zip(GROWTH_CSV_HEADER, row)) for row in rows]
            },
            indent=4
        ) + "\n"

    emit(configuration, text)
    return 0
