"""
Diagnostics for anticipation_lab

Command output owns stdout, so every record goes to stderr unless another handler is chosen.
Dict messages are written as a single json line so residuals, margins and timings can be picked
back out of a run's log.
"""
import os
import json
import typing
import logging
import logging.config
import traceback

from datetime import datetime
from functools import singledispatch

import numpy

from .system import settings

Message = typing.Union[BaseException, str, dict]

DEFAULT_LOGGER_NAME = os.environ.get("ANTICIPATION_LAB_LOGGER", settings.application_name.replace(" ", "_"))
"""
The logger that every module level function writes to
"""

LOG_FORMAT = os.environ.get("ANTICIPATION_LAB_LOG_FORMAT", "[%(asctime)s] %(name)s -> %(levelname)s: %(message)s")

HANDLER_CHOICES: typing.Mapping[str, str] = {
    "stream": "logging.StreamHandler",
    "file": "logging.FileHandler",
    "rotating": "logging.handlers.RotatingFileHandler",
}
"""
Shorthands accepted by `ANTICIPATION_LAB_LOG_HANDLER`. Any other value is taken as a dotted class path
"""


@singledispatch
def make_message_serializable(message: typing.Any) -> typing.Any:
    """
    Convert a message into something `json.dumps` accepts

    Mappings get string keys, numpy values become python numbers or lists and complex numbers become
    `[re, im]` pairs. Anything unrecognised is returned as is.
    """
    if isinstance(message, typing.Iterable):
        return [make_message_serializable(member) for member in message]
    return message


@make_message_serializable.register(str)
def _(message: str) -> str:
    return message


@make_message_serializable.register(dict)
def _(message: dict) -> dict:
    return {str(key): make_message_serializable(value) for key, value in message.items()}


@make_message_serializable.register(bytes)
def _(message: bytes) -> str:
    return message.decode()


@make_message_serializable.register(datetime)
def _(message: datetime) -> str:
    return message.strftime(settings.datetime_format)


@make_message_serializable.register(BaseException)
def _(message: BaseException) -> str:
    return "".join(traceback.format_exception_only(type(message), message)).strip()


@make_message_serializable.register(numpy.ndarray)
def _(message: numpy.ndarray) -> list:
    return make_message_serializable(message.tolist())


@make_message_serializable.register(complex)
@make_message_serializable.register(numpy.complexfloating)
def _(message) -> typing.List[float]:
    return [float(message.real), float(message.imag)]


@make_message_serializable.register(numpy.generic)
def _(message: numpy.generic) -> typing.Any:
    return message.item()


def render(message: Message) -> str:
    """
    The text that a message is logged as
    """
    if isinstance(message, (str, BaseException)):
        return str(message)
    return json.dumps(make_message_serializable(message))


def get_log_level() -> str:
    """
    The level named by `ANTICIPATION_LAB_LOG_LEVEL`

    Unknown names fall back to DEBUG when the toolkit runs in debug mode and WARNING otherwise
    """
    fallback = "DEBUG" if settings.debug else "WARNING"
    requested = os.environ.get("ANTICIPATION_LAB_LOG_LEVEL", fallback).upper()
    return requested if isinstance(logging.getLevelName(requested), int) else fallback


def handler_configuration(level: str, handler: str = None) -> typing.Dict[str, typing.Any]:
    """
    Build the dictConfig entry for the one handler attached to the toolkit's logger

    Args:
        level: The lowest level the handler passes on
        handler: A key of `HANDLER_CHOICES` or a dotted class path. Read from `ANTICIPATION_LAB_LOG_HANDLER`
            when not given

    Returns:
        A handler entry for `logging.config.dictConfig`
    """
    handler = handler or os.environ.get("ANTICIPATION_LAB_LOG_HANDLER", "stream")
    class_path = HANDLER_CHOICES.get(handler, handler)

    configuration = {"class": class_path, "level": level, "formatter": "toolkit"}

    if class_path == HANDLER_CHOICES["stream"]:
        configuration["stream"] = "ext://sys.stderr"
        return configuration

    configuration["filename"] = os.environ.get(
        "ANTICIPATION_LAB_LOG_PATH",
        os.path.join(str(settings.log_directory), f"{DEFAULT_LOGGER_NAME}.log")
    )

    if class_path == HANDLER_CHOICES["rotating"]:
        configuration["maxBytes"] = int(float(os.environ.get("ANTICIPATION_LAB_LOG_MEGABYTES", 5)) * 1024 * 1024)
        configuration["backupCount"] = int(os.environ.get("ANTICIPATION_LAB_LOG_BACKUPS", 5))

    return configuration


def default_configuration() -> typing.Dict[str, typing.Any]:
    level = get_log_level()
    return {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "toolkit": {"format": LOG_FORMAT, "datefmt": settings.datetime_format},
        },
        "handlers": {
            "toolkit": handler_configuration(level),
        },
        "loggers": {
            DEFAULT_LOGGER_NAME: {"handlers": ["toolkit"], "level": level, "propagate": False},
        },
    }


def configure_logging():
    """
    Attach a handler to the toolkit's logger unless one is already there

    A file named by `LOGGING_CONFIGURATION` replaces the default setup entirely
    """
    if logging.getLogger(DEFAULT_LOGGER_NAME).handlers:
        return

    configuration_path = os.environ.get("LOGGING_CONFIGURATION")

    if configuration_path and os.path.isfile(configuration_path):
        logging.config.fileConfig(fname=configuration_path, disable_existing_loggers=False)
    else:
        logging.config.dictConfig(default_configuration())


def set_level(level: typing.Union[str, int]):
    """
    Change how much the toolkit's logger and its handlers let through
    """
    logger = logging.getLogger(DEFAULT_LOGGER_NAME)
    logger.setLevel(level)

    for handler in logger.handlers:
        handler.setLevel(level)


class ConfiguredLogger:
    """
    Writes to a named logger and stamps fixed context onto every dict message

    Example:
        >>> run_log = ConfiguredLogger(command="evolve solve")
        >>> run_log.debug({"solver": "partition"})   # logged as {"command": "evolve solve", "solver": "partition"}
    """
    def __init__(self, logger_name: str = None, **context):
        self.__logger_name = logger_name or DEFAULT_LOGGER_NAME
        self.__context = context

    @property
    def name(self) -> str:
        return self.__logger_name

    @property
    def context(self) -> typing.Mapping[str, typing.Any]:
        return dict(self.__context)

    def bind(self, **context) -> "ConfiguredLogger":
        return ConfiguredLogger(self.__logger_name, **{**self.__context, **context})

    def __stamp(self, message: Message) -> Message:
        if isinstance(message, dict) and self.__context:
            return {**self.__context, **message}
        return message

    def log(self, message: Message, level: int = logging.INFO, exception: BaseException = None):
        log(self.__stamp(message), exception=exception, logger_name=self.__logger_name, level=level)

    def debug(self, message: Message):
        self.log(message, logging.DEBUG)

    def info(self, message: Message):
        self.log(message, logging.INFO)

    def warning(self, message: Message):
        self.log(message, logging.WARNING)

    warn = warning

    def error(self, message: Message, exception: BaseException = None):
        self.log(message, logging.ERROR, exception)


def get_logger(logger_name: str = None, **context) -> ConfiguredLogger:
    return ConfiguredLogger(logger_name, **context)


def log(message: Message, exception: BaseException = None, logger_name: str = None, level: int = logging.INFO):
    """
    Write a message to a logger

    Args:
        message: Text, an exception, or a dict that will be written as json
        exception: An exception whose traceback should follow the message
        logger_name: The logger to write to. The toolkit's logger by default
        level: The level to log at
    """
    logger = logging.getLogger(logger_name or DEFAULT_LOGGER_NAME)

    if not logger.isEnabledFor(level):
        return

    if isinstance(message, BaseException) and exception is None:
        exception = message

    logger.log(level, render(message), exc_info=exception)


def debug(message: Message, logger_name: str = None):
    log(message, logger_name=logger_name, level=logging.DEBUG)


def info(message: Message, logger_name: str = None):
    log(message, logger_name=logger_name, level=logging.INFO)


def warning(message: Message, logger_name: str = None):
    log(message, logger_name=logger_name, level=logging.WARNING)


warn = warning


def error(message: Message, exception: BaseException = None, logger_name: str = None):
    log(message, exception=exception, logger_name=logger_name, level=logging.ERROR)


configure_logging()
