"""
Application-wide settings, read from the environment and optionally replaced from a json document
"""
import typing
import os

from pathlib import Path

from pydantic import BaseModel
from pydantic import Field
from pydantic import root_validator
from pydantic import validator

from anticipation_lab.utilities.constants import TRUE_VALUES

DEFAULT_SYSTEM_CONFIG_PATH = Path(os.environ.get("ANTICIPATION_LAB_SYSTEM_CONFIG_PATH", "system_settings.json"))
DEFAULT_APPLICATION_NAME = os.environ.get("ANTICIPATION_LAB_APPLICATION_NAME", "AnticipationLab")
DEFAULT_DATETIME_FORMAT = os.environ.get("ANTICIPATION_LAB_DATETIME_FORMAT", "%Y-%m-%d %H:%M:%S%z")
LOG_DIRECTORY = Path(os.environ.get("ANTICIPATION_LAB_LOG_DIRECTORY", "."))
DEBUG = os.environ.get("DEBUG_ANTICIPATION_LAB", "").strip().lower() in TRUE_VALUES

DEFAULT_THREADS = int(float(os.environ.get("ANTICIPATION_LAB_THREADS", 1)))

MERGE_TOLERANCE = float(os.environ.get("ANTICIPATION_LAB_MERGE_TOLERANCE", 1e-9))
PROBABILITY_TOLERANCE = float(os.environ.get("ANTICIPATION_LAB_PROBABILITY_TOLERANCE", 1e-12))
POSITIVITY_THRESHOLD = float(os.environ.get("ANTICIPATION_LAB_POSITIVITY_THRESHOLD", 1e-9))
RESIDUAL_TOLERANCE = float(os.environ.get("ANTICIPATION_LAB_RESIDUAL_TOLERANCE", 1e-8))
CONDITION_LIMIT = float(os.environ.get("ANTICIPATION_LAB_CONDITION_LIMIT", 1e12))
ROOT_GAP_LIMIT = float(os.environ.get("ANTICIPATION_LAB_ROOT_GAP_LIMIT", 1e-6))
UNIT_ROOT_TOLERANCE = float(os.environ.get("ANTICIPATION_LAB_UNIT_ROOT_TOLERANCE", 1e-4))
ROUTE_AGREEMENT_TOLERANCE = float(os.environ.get("ANTICIPATION_LAB_ROUTE_AGREEMENT_TOLERANCE", 1e-10))
KERNEL_DIVERGENCE_CEILING = float(os.environ.get("ANTICIPATION_LAB_KERNEL_DIVERGENCE_CEILING", 1e6))
DEFAULT_TIME_STEP = float(os.environ.get("ANTICIPATION_LAB_TIME_STEP", 2.5e-4))


class _SystemSettings(BaseModel):
    application_name: typing.Optional[str] = Field(default=DEFAULT_APPLICATION_NAME)
    datetime_format: typing.Optional[str] = Field(default=DEFAULT_DATETIME_FORMAT)
    debug: typing.Optional[bool] = Field(default=DEBUG)
    log_directory: typing.Optional[typing.Union[str, Path]] = Field(default=LOG_DIRECTORY)

    threads: typing.Optional[int] = Field(
        default=DEFAULT_THREADS,
        description="Worker threads for trial loops when no --threads flag is given"
    )

    merge_tolerance: typing.Optional[float] = Field(
        default=MERGE_TOLERANCE,
        description="Atoms closer than this (phase units) are merged"
    )
    probability_tolerance: typing.Optional[float] = Field(
        default=PROBABILITY_TOLERANCE,
        description="How far the total mass of a probability measure may stray from 1"
    )
    positivity_threshold: typing.Optional[float] = Field(
        default=POSITIVITY_THRESHOLD,
        description="min ρ above -threshold counts as positive; LP margins within ±threshold are boundary cases"
    )
    residual_tolerance: typing.Optional[float] = Field(
        default=RESIDUAL_TOLERANCE,
        description="Largest accepted residual of the duality constraints"
    )
    condition_limit: typing.Optional[float] = Field(
        default=CONDITION_LIMIT,
        description="Condition number above which amplitude recovery is rejected"
    )
    root_gap_limit: typing.Optional[float] = Field(
        default=ROOT_GAP_LIMIT,
        description="Smallest accepted distance between recovered roots"
    )
    unit_root_tolerance: typing.Optional[float] = Field(
        default=UNIT_ROOT_TOLERANCE,
        description="Largest accepted |1 - |ω|| for recovered roots"
    )
    route_agreement_tolerance: typing.Optional[float] = Field(
        default=ROUTE_AGREEMENT_TOLERANCE,
        description="Largest accepted gap between the raw and the spectral difference amplitude routes"
    )
    kernel_divergence_ceiling: typing.Optional[float] = Field(
        default=KERNEL_DIVERGENCE_CEILING,
        description="Kernel pairings beyond this magnitude are reported as diverging"
    )
    default_time_step: typing.Optional[float] = Field(
        default=DEFAULT_TIME_STEP,
        description="Quadrature step of time averages when none is given"
    )

    @validator('*', pre=True)
    def _assign_environment_variables(cls, value):
        """
        Check to see if a value might be an environment variable - if so, evaluate it to get the actual value

        Args:
            value: The value to transform

        Returns:
            The updated value if it was found, the original value otherwise
        """
        if isinstance(value, str) and value.startswith("$"):
            return os.environ.get(value[1:], value)

        return value

    @root_validator
    def _ensure_defaults(cls, values):
        if not values.get("threads") or values["threads"] < 1:
            values["threads"] = 1

        for tolerance_name in ("merge_tolerance", "probability_tolerance", "residual_tolerance"):
            if values.get(tolerance_name) is not None and values[tolerance_name] <= 0:
                raise ValueError(f"'{tolerance_name}' must be positive")

        return values


def initialize(
    system_config_path: typing.Union[str, Path] = None,
    data: typing.Union[_SystemSettings, str, bytes, dict] = None
) -> _SystemSettings:
    """
    Replace the global settings

    Args:
        system_config_path: A json file holding settings
        data: Raw settings to use instead of a file

    Returns:
        The new settings
    """
    system_config_path = Path(system_config_path) if system_config_path else None

    if system_config_path is None or not system_config_path.exists():
        system_config_path = DEFAULT_SYSTEM_CONFIG_PATH

    if isinstance(data, _SystemSettings):
        new_settings = data
    elif data and isinstance(data, (str, bytes)):
        new_settings = _SystemSettings.parse_raw(data)
    elif data and isinstance(data, dict):
        new_settings = _SystemSettings.parse_obj(data)
    elif system_config_path.exists():
        new_settings = _SystemSettings.parse_file(system_config_path)
    else:
        raise ValueError(f"Valid input was not available for the creation of system data")

    # Copy field by field so modules holding a reference to `settings` see the change
    for field_name in new_settings.__fields__:
        setattr(settings, field_name, getattr(new_settings, field_name))

    return settings


settings = _SystemSettings()
