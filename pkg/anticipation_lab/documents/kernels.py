"""
Json documents for kernel probes and time averages
"""
import typing

from pydantic import Field

from .base import ParseableModel


class ConvergenceRowDocument(ParseableModel):
    N: int
    value: typing.Tuple[float, float]
    error: typing.Optional[float] = None


class ConvergenceDocument(ParseableModel):
    """
    A kernel pairing over a ladder of N with the fitted decay of its error
    """
    kind: str
    alpha: float
    phi: str
    psi: str
    target: typing.Optional[typing.Tuple[float, float]] = None
    rows: typing.List[ConvergenceRowDocument]
    slope: typing.Optional[float] = Field(default=None, description="Slope of log(error) against log(N)")
    diverging: bool = False


class TimeAverageDocument(ParseableModel):
    T: float = Field(gt=0)
    alpha: float
    quad_step: float = Field(gt=0)
    value: float = Field(ge=0)
    error_estimate: float
    halvings: int = 0
