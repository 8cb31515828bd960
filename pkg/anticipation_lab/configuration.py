"""
The validated parameters of a single command line run
"""
import os
import pathlib
import typing

from pydantic import BaseModel
from pydantic import Field
from pydantic import validator
from pydantic import root_validator

from anticipation_lab.anticipation import MODEL_KINDS
from anticipation_lab.inversion import SMOOTHINGS
from anticipation_lab.kernels import PAIRINGS
from anticipation_lab.kernels import TEST_FUNCTIONS
from anticipation_lab.measures import SPECTRUM_KINDS
from anticipation_lab.scenario import SOLVERS

OUTPUT_FORMATS = ("json", "csv")

LINEAR_PROGRAM_SOLVER = "lp"
"""Solve the duality system through the positivity program instead of a least squares solver"""

REQUIRED_FIELDS: typing.Dict[str, typing.Tuple[str, ...]] = {
    "spectrum gen": ("kind",),
    "spectrum amplitudes": ("measure", "n_max"),
    "evolve solve": ("measure", "order"),
    "evolve recover": ("beta", "d"),
    "evolve positivity": ("d", "order", "trials", "seed"),
    "evolve clustered": ("d", "order", "half_width", "cluster_size"),
    "anticipate": ("scenario", "raw", "N"),
    "anticipate model": ("kind", "L"),
    "anticipate growth": ("kind",),
    "invert nu": ("beta", "N"),
    "invert F": ("beta", "N"),
    "invert peaks": ("beta", "N"),
    "delta-kernel": ("measure", "alpha"),
    "time-average": ("measure", "alpha", "T"),
    "selftest": (),
}
"""The flags every command needs on top of its defaults"""

TABULAR_COMMANDS = frozenset({
    "spectrum gen",
    "spectrum amplitudes",
    "evolve recover",
    "anticipate",
    "anticipate model",
    "anticipate growth",
    "invert nu",
    "invert F",
    "invert peaks",
    "delta-kernel",
})
"""Commands whose output may be written as CSV"""


def _flag(name: str) -> str:
    return "--" + name.replace("_", "-")


def missing_flags(command: str, values: typing.Mapping[str, typing.Any]) -> typing.List[str]:
    """
    The flags that a command was called without but cannot run without

    Examples:
        >>> missing_flags("spectrum gen", {"kind": "random", "d": 4})
        ['--seed']
    """
    needed = list(REQUIRED_FIELDS.get(command, ()))

    if command == "spectrum gen":
        kind = values.get("kind")
        needed.append("path" if kind == "file" else "d")

        if kind == "random":
            needed.append("seed")

    return [_flag(name) for name in needed if values.get(name) is None]


class RunConfig(BaseModel):
    """
    Every knob of the command line, checked against the needs of the chosen command before anything runs
    """
    command: str
    output: typing.Optional[str] = Field(default=None, description="Where to write the result; stdout if omitted")
    output_format: typing.Optional[str] = Field(default=None, description="json or csv; read from the output suffix if omitted")
    threads: typing.Optional[int] = Field(default=None, ge=1)
    seed: typing.Optional[int] = Field(default=None)
    verbose: bool = False

    measure: typing.Optional[str] = Field(default=None, description="A measure file (json or csv)")
    raw: typing.Optional[str] = Field(default=None, description="The raw spectral measure a scenario was reduced from")
    scenario: typing.Optional[str] = Field(default=None, description="A scenario json file")
    beta: typing.Optional[str] = Field(default=None, description="An amplitude json file")
    path: typing.Optional[str] = Field(default=None, description="The measure file read by '--kind file'")

    kind: typing.Optional[str] = Field(default=None)
    d: typing.Optional[int] = Field(default=None, ge=1)
    scale: float = Field(default=1.0)
    n_max: typing.Optional[int] = Field(default=None, ge=0)

    order: typing.Optional[int] = Field(default=None, ge=0)
    solver: str = Field(default="min_norm")
    trials: typing.Optional[int] = Field(default=None, ge=1)
    half_width: typing.Optional[float] = Field(default=None, gt=0)
    cluster_size: typing.Optional[int] = Field(default=None, ge=1)

    N: typing.Optional[int] = Field(default=None, ge=0)
    retrospective: bool = False
    L: typing.Optional[int] = Field(default=None, ge=1)
    M: typing.Optional[int] = Field(default=None, ge=1)
    eps: float = Field(default=0.1, gt=0, le=1)
    c: float = Field(default=1.0, gt=0)

    smoothing: str = Field(default="none")
    grid: int = Field(default=2001, ge=2)
    resolution: float = Field(default=0.05, gt=0)
    min_mass: float = Field(default=1e-3, gt=0)

    alpha: typing.Optional[float] = Field(default=None)
    N_list: typing.Optional[typing.List[int]] = Field(default=None)
    phi: str = Field(default="bump")
    psi: str = Field(default="bump")
    pairing: str = Field(default="dirichlet")
    target: typing.Optional[float] = Field(default=None)
    T: typing.Optional[float] = Field(default=None, gt=0)
    dt: typing.Optional[float] = Field(default=None, gt=0)
    tolerance: typing.Optional[float] = Field(default=None, gt=0)

    quick: bool = False

    class Config:
        allow_mutation = False

    @validator("solver", pre=True)
    def _normalize_solver(cls, value):
        return value.replace("-", "_") if isinstance(value, str) else value

    @validator("measure", "raw", "scenario", "beta", "path")
    def _existing_file(cls, value: typing.Optional[str]):
        if value is not None and not os.path.isfile(value):
            raise ValueError(f"No file exists at '{value}'")

        return value

    @root_validator(skip_on_failure=True)
    def _fits_command(cls, values):
        command = values["command"]

        if command not in REQUIRED_FIELDS:
            raise ValueError(f"'{command}' is not a command. Choose one of {', '.join(REQUIRED_FIELDS)}")

        missing = missing_flags(command, values)
        if missing:
            raise ValueError(f"'{command}' needs {', '.join(missing)}")

        output_format = values.get("output_format")
        if output_format is None:
            output = values.get("output")
            output_format = "csv" if output and pathlib.Path(output).suffix.lower() == ".csv" else "json"
            values["output_format"] = output_format

        if output_format not in OUTPUT_FORMATS:
            raise ValueError(f"'{output_format}' is not an output format. Choose one of {', '.join(OUTPUT_FORMATS)}")

        if output_format == "csv" and command not in TABULAR_COMMANDS:
            raise ValueError(f"'{command}' only writes json")

        kind = values.get("kind")

        if command == "spectrum gen" and kind not in SPECTRUM_KINDS:
            raise ValueError(f"'{kind}' is not a kind of spectrum. Choose one of {', '.join(SPECTRUM_KINDS)}")

        if command in ("anticipate model", "anticipate growth") and kind not in MODEL_KINDS:
            raise ValueError(f"'{kind}' is not a model measure. Choose one of {', '.join(MODEL_KINDS)}")

        if command == "evolve solve" and values["solver"] not in SOLVERS + (LINEAR_PROGRAM_SOLVER,):
            raise ValueError(
                f"'{values['solver']}' is not a solver. Choose one of {', '.join(SOLVERS + (LINEAR_PROGRAM_SOLVER,))}"
            )

        if command in ("evolve positivity", "evolve clustered") and not 1 <= values["order"] < values["d"]:
            raise ValueError(f"'{command}' needs 1 <= --order < --d")

        if values["smoothing"] not in SMOOTHINGS:
            raise ValueError(f"'{values['smoothing']}' is not a smoothing. Choose one of {', '.join(SMOOTHINGS)}")

        if values["pairing"] not in PAIRINGS:
            raise ValueError(f"'{values['pairing']}' is not a pairing. Choose one of {', '.join(PAIRINGS)}")

        for name in ("phi", "psi"):
            if values[name] not in TEST_FUNCTIONS:
                raise ValueError(f"'{values[name]}' is not a test function. Choose one of {', '.join(TEST_FUNCTIONS)}")

        return values
