"""
Json documents describing reconstructions of cumulative functions from amplitudes
"""
import typing

from pydantic import Field

from .base import ParseableModel


class InversionDocument(ParseableModel):
    """
    The metadata of a reconstruction; the samples themselves go to CSV
    """
    N_trunc: int = Field(ge=1)
    smoothing: str
    grid_size: int
    grid_min: float
    grid_max: float
    affine_A: typing.Tuple[float, float] = Field(description="The boundary fitted constant of 2πν as [re, im]")
    quad_coeff: typing.Tuple[float, float] = Field(description="β_0 as [re, im]")
    F_linear: typing.Optional[typing.Tuple[float, float]] = Field(
        default=None,
        description="The coefficient of κ in (2π)²F"
    )
    F_constant: typing.Optional[typing.Tuple[float, float]] = Field(
        default=None,
        description="The constant term of (2π)²F"
    )
    tail_bound: float


class PeakDocument(ParseableModel):
    kappa: float
    mass: float
    height: float


class PointSpectrumDocument(ParseableModel):
    """
    Atoms located in the Fejér smoothed density of an amplitude sequence
    """
    N_trunc: int
    resolution: float
    peaks: typing.List[PeakDocument] = Field(default_factory=list)
    total_mass: float
