"""
Handlers that generate spectra and their amplitudes
"""
from anticipation_lab.configuration import RunConfig
from anticipation_lab.measures import amplitudes
from anticipation_lab.measures import gen_spectrum
from anticipation_lab.measures import read_measure
from anticipation_lab.system import logging
from anticipation_lab.utilities.constants import AMPLITUDE_CSV_HEADER
from anticipation_lab.utilities.constants import MEASURE_CSV_HEADER
from anticipation_lab.utilities.types import command_handler

from .output import emit_result


@command_handler("spectrum gen")
def generate_spectrum(configuration: RunConfig) -> int:
    measure = gen_spectrum(
        configuration.kind,
        d=configuration.d,
        seed=configuration.seed,
        scale=configuration.scale,
        path=configuration.path
    )
    logging.debug({"kind": configuration.kind, "atoms": measure.size, "probability": measure.probability})

    emit_result(configuration, measure.to_document, MEASURE_CSV_HEADER, measure.to_csv_rows)
    return 0


@command_handler("spectrum amplitudes")
def measure_amplitudes(configuration: RunConfig) -> int:
    """
    β_n for -n_max <= n <= n_max of a measure file
    """
    beta = amplitudes(read_measure(configuration.measure), configuration.n_max)

    def rows():
        return [(int(n), float(value.real), float(value.imag)) for n, value in zip(beta.indices, beta.values)]

    emit_result(configuration, beta.to_document, AMPLITUDE_CSV_HEADER, rows)
    return 0
