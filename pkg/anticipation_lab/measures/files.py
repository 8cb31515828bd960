"""
Reading and writing measures and amplitude sequences as json or CSV
"""
import csv
import pathlib
import typing

from anticipation_lab.exceptions import InputError
from anticipation_lab.documents.measure import AmplitudeDocument
from anticipation_lab.documents.measure import MeasureDocument
from anticipation_lab.utilities.common import rows_to_csv
from anticipation_lab.utilities.common import write_text_atomically
from anticipation_lab.utilities.constants import MEASURE_CSV_HEADER

from .atoms import PointMeasure
from .atoms import RawPointMeasure
from .atoms import measure_from_document
from .amplitudes import AmplitudeSequence

PATH = typing.Union[str, pathlib.Path]


def _read_measure_csv(path: pathlib.Path) -> RawPointMeasure:
    try:
        with path.open(newline="") as measure_file:
            rows = [row for row in csv.reader(measure_file) if row and any(cell.strip() for cell in row)]
    except OSError as error:
        raise InputError(f"Could not read '{path}': {error}") from error

    if rows and rows[0][0].strip().lower() in ("position", "lambda", "kappa"):
        rows = rows[1:]

    if not rows:
        raise InputError(f"'{path}' does not hold any atoms")

    try:
        positions = [float(row[0]) for row in rows]
        if all(len(row) == 1 for row in rows):
            return RawPointMeasure.from_atoms(positions, probability=True)

        weights = [complex(float(row[1]), float(row[2]) if len(row) > 2 and row[2].strip() else 0.0) for row in rows]
    except (ValueError, IndexError) as error:
        raise InputError(f"'{path}' is not a measure CSV ({', '.join(MEASURE_CSV_HEADER)}): {error}") from error

    return RawPointMeasure.from_atoms(positions, weights, probability=False)


def read_measure(path: PATH) -> PointMeasure:
    """
    Load a measure from a json document or a CSV file

    Files without weights describe equal-weight probability measures

    Args:
        path: Where the measure is stored; `.csv` files are read as CSV, anything else as json

    Returns:
        A raw or reduced measure, depending on whether the atoms use `lambda` or `kappa`
    """
    path = pathlib.Path(path)

    if path.suffix.lower() == ".csv":
        return _read_measure_csv(path)

    document = MeasureDocument.parse(path)

    if not document.has_weights:
        document.probability = True

    return measure_from_document(document)


def write_measure(measure: PointMeasure, path: PATH, output_format: str = "json") -> pathlib.Path:
    """
    Write a measure atomically as json or CSV
    """
    if output_format == "csv":
        text = rows_to_csv(MEASURE_CSV_HEADER, measure.to_csv_rows())
    else:
        text = measure.to_document().to_json()

    return write_text_atomically(path, text)


def read_amplitudes(path: PATH) -> AmplitudeSequence:
    return AmplitudeSequence.from_document(AmplitudeDocument.parse(pathlib.Path(path)))


def write_amplitudes(sequence: AmplitudeSequence, path: PATH) -> pathlib.Path:
    return write_text_atomically(path, sequence.to_document().to_json())
