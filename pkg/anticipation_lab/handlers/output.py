"""
Writes command results to a file or to stdout
"""
import sys
import typing

from anticipation_lab.documents.base import ParseableModel
from anticipation_lab.system import logging
from anticipation_lab.utilities.common import format_number
from anticipation_lab.utilities.common import rows_to_csv
from anticipation_lab.utilities.common import write_text_atomically
from anticipation_lab.utilities.types import RunConfigurationProtocol


def comment_lines(values: typing.Mapping[str, typing.Any]) -> str:
    """
    Render values as '# key=value' lines to follow a CSV table

    Examples:
        >>> comment_lines({"P_L": 0.5, "holds": True})
        '# P_L=0.5\\n# holds=True\\n'
    """
    lines = []

    for key, value in values.items():
        if isinstance(value, float):
            value = format_number(value)
        lines.append(f"# {key}={value}\n")

    return "".join(lines)


def emit(configuration: RunConfigurationProtocol, text: str):
    """
    Write the text to the configured output, atomically, or to stdout when there is none
    """
    if configuration.output:
        path = write_text_atomically(configuration.output, text)
        logging.info(f"'{configuration.command}' wrote {path}")
    else:
        sys.stdout.write(text)
        sys.stdout.flush()


def emit_result(
    configuration: RunConfigurationProtocol,
    document: typing.Callable[[], ParseableModel],
    header: typing.Sequence[str] = None,
    rows: typing.Callable[[], typing.Iterable[typing.Sequence]] = None,
    footer: typing.Mapping[str, typing.Any] = None
):
    """
    Emit a result as json or as CSV, whichever the configuration asks for

    Args:
        configuration: The run configuration
        document: Builds the json document of the result
        header: CSV column names
        rows: Builds the CSV rows
        footer: Values written as comment lines after the CSV rows
    """
    if configuration.output_format == "csv":
        text = rows_to_csv(header, rows())
        if footer:
            text += comment_lines(footer)
    else:
        text = document().to_json()

    emit(configuration, text)
