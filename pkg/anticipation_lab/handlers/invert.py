"""
Handlers that turn amplitude sequences back into cumulative functions and atoms
"""
from anticipation_lab.configuration import RunConfig
from anticipation_lab.inversion import integrated_error
from anticipation_lab.inversion import point_spectrum_consistency
from anticipation_lab.inversion import reconstruct_F
from anticipation_lab.inversion import reconstruct_nu
from anticipation_lab.measures import ReducedMeasure
from anticipation_lab.measures import read_amplitudes
from anticipation_lab.measures import read_measure
from anticipation_lab.measures import reduce
from anticipation_lab.system import logging
from anticipation_lab.utilities.constants import INVERSION_CSV_HEADER
from anticipation_lab.utilities.constants import PEAK_CSV_HEADER
from anticipation_lab.utilities.types import command_handler

from .output import emit_result

RECONSTRUCTIONS = {
    "invert nu": reconstruct_nu,
    "invert F": reconstruct_F,
}


@command_handler(["invert nu", "invert F"])
def invert(configuration: RunConfig) -> int:
    """
    Sample ν(κ), and F(κ) for 'invert F', over a uniform grid of the configured size

    When a measure is given, the L¹ distance between the sampled ν and the measure's own cumulative function is
    logged
    """
    reconstruct = RECONSTRUCTIONS[configuration.command]
    result = reconstruct(
        read_amplitudes(configuration.beta),
        configuration.N,
        configuration.grid,
        smoothing=configuration.smoothing
    )

    if configuration.measure:
        measure = read_measure(configuration.measure)
        oracle = measure if isinstance(measure, ReducedMeasure) else reduce(measure)
        logging.info({"integrated_error": integrated_error(result, oracle), "N": result.N_trunc})

    emit_result(configuration, result.to_document, INVERSION_CSV_HEADER, result.to_csv_rows)
    return 0


@command_handler("invert peaks")
def locate_atoms(configuration: RunConfig) -> int:
    report = point_spectrum_consistency(
        read_amplitudes(configuration.beta),
        configuration.N,
        resolution=configuration.resolution,
        min_mass=configuration.min_mass
    )
    logging.info(f"Found {report.count} atoms holding a mass of {report.total_mass:.6f}")

    def rows():
        return [
            (float(kappa), float(mass), float(height))
            for kappa, mass, height in zip(report.kappas, report.masses, report.heights)
        ]

    emit_result(configuration, report.to_document, PEAK_CSV_HEADER, rows, {"total_mass": report.total_mass})
    return 0
