"""
Handlers for every command of the command line, registered through `command_handler`
"""
import typing
import inspect

from types import ModuleType

from anticipation_lab.utilities.types import COMMAND_HANDLER
from anticipation_lab.utilities.types import enforce_handler

from . import spectrum
from . import evolve
from . import anticipate
from . import invert
from . import kernels
from . import selftest

HANDLER_MODULES: typing.Tuple[ModuleType, ...] = (spectrum, evolve, anticipate, invert, kernels, selftest)


def get_command_handlers(
    modules_to_check: typing.Sequence[ModuleType] = None
) -> typing.Dict[str, COMMAND_HANDLER]:
    """
    Collect the command handlers defined in the given modules

    Args:
        modules_to_check: The modules to look through; every handler module of the package by default

    Returns:
        Each handler keyed by every command it answers to
    """
    if modules_to_check is None:
        modules_to_check = HANDLER_MODULES

    handlers: typing.Dict[str, COMMAND_HANDLER] = dict()

    for module in modules_to_check:
        module_name = module.__name__
        candidates = [
            function
            for _, function in inspect.getmembers(module, predicate=inspect.isfunction)
            if function.__module__ == module_name and hasattr(function, "aliases")
        ]

        for function in candidates:
            enforce_handler(function)

            for alias in function.aliases:
                if alias in handlers and handlers[alias] is not function:
                    raise KeyError(
                        f"'{alias}' is handled by both {handlers[alias].__name__} and {function.__name__}"
                    )
                handlers[alias] = function

    return handlers
