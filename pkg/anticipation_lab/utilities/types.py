"""
Shared type definitions and the decorator used to register command handlers
"""
from __future__ import annotations

import inspect
import typing

from typing import (
    Union,
    Sequence,
    Protocol,
    Callable,
    runtime_checkable,
)

import numpy

REAL_VALUES = Union[Sequence[float], numpy.ndarray]
"""Anything that numpy may read as a one dimensional array of reals"""

COMPLEX_VALUES = Union[Sequence[complex], Sequence[float], numpy.ndarray]
"""Anything that numpy may read as a one dimensional array of complex numbers"""

TIME = Union[float, int, Sequence[float], numpy.ndarray]
"""A single time or an array of times at which a transform is evaluated"""


@runtime_checkable
class RunConfigurationProtocol(Protocol):
    """
    The validated parameters of a single command line run
    """
    command: str
    output: typing.Optional[str]
    output_format: typing.Optional[str]
    threads: typing.Optional[int]


COMMAND_HANDLER = Callable[[RunConfigurationProtocol], int]
"""
The signature of a subcommand handler: it receives the validated run configuration and returns an exit code

Example:
    >>> def gen(configuration: RunConfiguration) -> int
"""


def enforce_handler(possible_handler: typing.Callable) -> COMMAND_HANDLER:
    """
    Make sure that a function can serve a subcommand: it must be callable with a single run configuration

    Args:
        possible_handler: The function that would be registered

    Returns:
        The same function
    """
    if not callable(possible_handler):
        raise ValueError(f"{possible_handler!r} ({type(possible_handler).__name__}) cannot handle a command")

    parameters = [
        parameter
        for parameter in inspect.signature(possible_handler).parameters.values()
        if parameter.kind in (parameter.POSITIONAL_ONLY, parameter.POSITIONAL_OR_KEYWORD)
    ]

    if len(parameters) != 1:
        raise ValueError(
            f"The given handler is not valid - {possible_handler.__name__} must accept exactly one run "
            f"configuration, but it accepts {len(parameters)} positional parameters"
        )

    return possible_handler


def command_handler(aliases: Union[str, typing.List[str]]):
    """
    Mark a function as the handler of one or more subcommands

    Args:
        aliases: The subcommand keys (e.g. 'evolve solve') the function handles
    """
    if isinstance(aliases, str):
        aliases = [aliases]

    def decorate_function(function: COMMAND_HANDLER):
        enforce_handler(function)
        setattr(function, "aliases", list(aliases))
        return function

    return decorate_function
