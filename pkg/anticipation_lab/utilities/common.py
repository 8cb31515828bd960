"""
Contains common functions
"""
import csv
import io
import os
import tempfile
import typing
import pathlib

from concurrent.futures import ThreadPoolExecutor

import numpy

from .constants import INTEGER_PATTERN
from .constants import FLOATING_POINT_PATTERN

from anticipation_lab.system import settings
from anticipation_lab.system import logging

R = typing.TypeVar("R")


def interpret_number(value: typing.Union[str, bytes, int, float]) -> typing.Union[int, float]:
    """
    Convert text into an int when it looks like one and into a float otherwise

    Examples:
        >>> interpret_number("17")
        17
        >>> interpret_number("-0.5")
        -0.5
        >>> interpret_number("1e-3")
        0.001

    Args:
        value: The text to read

    Returns:
        The number the text represents
    """
    if isinstance(value, bytes):
        value = value.decode()

    if not isinstance(value, str):
        return value

    value = value.strip()

    if INTEGER_PATTERN.match(value):
        return int(value)
    elif FLOATING_POINT_PATTERN.match(value):
        return float(value)

    # Leaves 'inf', 'nan' and exponent-only forms like '1e-3' to python
    return float(value)


def parse_number_list(value: typing.Union[str, typing.Sequence]) -> typing.List[typing.Union[int, float]]:
    """
    Read a comma separated list of numbers

    Examples:
        >>> parse_number_list("17,33, 65")
        [17, 33, 65]

    Args:
        value: Either the text of the list or an already split sequence

    Returns:
        The numbers in order
    """
    if isinstance(value, str):
        value = [part for part in value.split(",") if part.strip()]

    return [interpret_number(part) for part in value]


def format_number(value: typing.SupportsFloat) -> str:
    """
    Write a float so that it reads back to exactly the same value

    Examples:
        >>> format_number(0.1)
        '0.1'
        >>> format_number(numpy.float64(2.0))
        '2.0'
    """
    return repr(float(value))


def resolve_threads(threads: typing.Optional[int] = None) -> int:
    """
    Decide how many worker threads a trial loop may use

    Args:
        threads: An explicitly requested count; the configured setting is used if none is given

    Returns:
        A count of at least one
    """
    if threads is None:
        threads = settings.threads

    return max(1, int(threads))


def trial_generator(seed: int, trial_index: int) -> numpy.random.Generator:
    """
    Create the random generator for a single trial

    The stream depends only on the run seed and the trial index, so results do not depend on how trials are
    spread across threads

    Args:
        seed: The seed of the whole run
        trial_index: The position of the trial within the run

    Returns:
        A generator private to that trial
    """
    return numpy.random.default_rng([int(seed), int(trial_index)])


def map_trials(
    function: typing.Callable[[int], R],
    trial_count: int,
    threads: typing.Optional[int] = None
) -> typing.List[R]:
    """
    Call a function on every trial index and gather the results in trial order

    Args:
        function: The function to call with each trial index
        trial_count: The number of trials
        threads: The number of worker threads; falls back to the configured setting

    Returns:
        One result per trial, ordered by trial index
    """
    threads = resolve_threads(threads)

    if threads == 1 or trial_count < 2:
        return [function(trial_index) for trial_index in range(trial_count)]

    logging.debug(f"Running {trial_count} trials on {threads} threads")

    with ThreadPoolExecutor(max_workers=threads) as executor:
        return list(executor.map(function, range(trial_count)))


def write_text_atomically(path: typing.Union[str, pathlib.Path], text: str) -> pathlib.Path:
    """
    Write text to a file so that readers only ever see the old or the complete new content

    The text is written to a temporary file in the same directory and then renamed over the target

    Args:
        path: Where the text belongs
        text: What to write

    Returns:
        The resolved path that was written
    """
    path = pathlib.Path(path).resolve()
    path.parent.mkdir(parents=True, exist_ok=True)

    file_descriptor, temporary_name = tempfile.mkstemp(prefix=f".{path.name}.", dir=str(path.parent))

    try:
        with os.fdopen(file_descriptor, mode="w", newline="") as temporary_file:
            temporary_file.write(text)
        os.replace(temporary_name, path)
    except BaseException:
        if os.path.exists(temporary_name):
            os.remove(temporary_name)
        raise

    return path


def rows_to_csv(header: typing.Sequence[str], rows: typing.Iterable[typing.Sequence[typing.Any]]) -> str:
    """
    Render rows as CSV text with '\\n' line endings

    Floats are written with `format_number`; `None` becomes an empty cell

    Args:
        header: The column names
        rows: The rows to write

    Returns:
        The CSV text
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)

    for row in rows:
        writer.writerow([
            "" if cell is None
            else format_number(cell) if isinstance(cell, (float, numpy.floating))
            else cell
            for cell in row
        ])

    return buffer.getvalue()
