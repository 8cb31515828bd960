"""
Reconstruction of the cumulative function ν(κ) = ν([-π, κ)) and of its double integral F from amplitudes β_n

With β_n = Σ w·exp(-i·n·κ_m), the truncated series read

    2πν(κ)    = -i·Σ_{0<|n|<=N} f_n·(β_n/n)·exp(i·n·κ) + A + β_0·κ
    (2π)²F(κ) = Σ_{0<|n|<=N} f_n·(β_n/n²)·exp(i·n·κ) + c + A'·κ - β_0·κ²/2

where f_n is 1 or the Cesàro factor 1 - |n|/(N + 1). The affine constants are fitted to ν(-π) = 0 and to
F(-π) = F'(-π) = 0 using the truncated series itself, so the boundary conditions hold up to rounding.
"""
from __future__ import annotations

import math
import typing

import numpy
import scipy.special

from pydantic import BaseModel
from pydantic import Field
from pydantic import validator

from anticipation_lab.exceptions import DomainError
from anticipation_lab.documents.base import complex_pair
from anticipation_lab.documents.inversion import InversionDocument
from anticipation_lab.measures import AmplitudeSequence
from anticipation_lab.system import logging
from anticipation_lab.utilities.constants import TWO_PI
from anticipation_lab.utilities.types import REAL_VALUES

SMOOTHINGS = ("none", "cesaro")

_BLOCK_SIZE = 1 << 22
"""The most exponentials evaluated at once by the direct summation"""

GRID = typing.Union[REAL_VALUES, int]
"""Either explicit sample points in [-π, π) or the size of a uniform grid starting at -π"""


class InversionResult(BaseModel):
    """
    Samples of ν and, when requested, F on a grid together with the constants of the series
    """
    N_trunc: int = Field(ge=1)
    grid: numpy.ndarray
    nu_samples: numpy.ndarray
    F_samples: typing.Optional[numpy.ndarray] = None
    affine_A: complex = Field(description="The constant of 2πν that absorbs the boundary condition")
    quad_coeff: complex = Field(description="β_0, the coefficient of the linear term of 2πν")
    F_linear: typing.Optional[complex] = None
    F_constant: typing.Optional[complex] = None
    tail_bound: float
    smoothing: str = "none"

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    @validator("grid", "nu_samples", "F_samples", pre=True)
    def _freeze(cls, value):
        if value is None:
            return value

        array = numpy.array(value).reshape(-1)
        array.setflags(write=False)
        return array

    @property
    def grid_size(self) -> int:
        return len(self.grid)

    def to_document(self) -> InversionDocument:
        return InversionDocument(
            N_trunc=self.N_trunc,
            smoothing=self.smoothing,
            grid_size=self.grid_size,
            grid_min=float(self.grid[0]),
            grid_max=float(self.grid[-1]),
            affine_A=complex_pair(self.affine_A),
            quad_coeff=complex_pair(self.quad_coeff),
            F_linear=None if self.F_linear is None else complex_pair(self.F_linear),
            F_constant=None if self.F_constant is None else complex_pair(self.F_constant),
            tail_bound=self.tail_bound
        )

    def to_csv_rows(self) -> typing.List[typing.Tuple[typing.Optional[float], ...]]:
        rows = []

        for index, (kappa, nu) in enumerate(zip(self.grid, self.nu_samples)):
            if self.F_samples is None:
                rows.append((float(kappa), float(nu.real), float(nu.imag), None, None))
            else:
                F = self.F_samples[index]
                rows.append((float(kappa), float(nu.real), float(nu.imag), float(F.real), float(F.imag)))

        return rows


def uniform_grid(size: int) -> numpy.ndarray:
    """
    κ_j = -π + 2πj/size for j = 0..size - 1
    """
    if size < 1:
        raise DomainError(f"A grid needs at least one point, not {size}")

    return -math.pi + TWO_PI * numpy.arange(size) / size


def tail_bound(beta_0: complex, N: int) -> float:
    """
    A bound on Σ_{|n|>N} |β_n|/n² for a measure with |β_n| <= |β_0|: 2·|β_0|·ψ'(N + 1)

    Examples:
        >>> round(tail_bound(1.0, 1) - 2 * (math.pi ** 2 / 6 - 1), 12)
        0.0
    """
    return 2.0 * abs(beta_0) * float(scipy.special.polygamma(1, N + 1))


def _check_arguments(beta: AmplitudeSequence, N: int, smoothing: str):
    if N < 1:
        raise DomainError(f"The series needs N >= 1, not {N}")

    if not beta.covers(N):
        raise DomainError(f"The series up to N = {N} needs β_n for |n| <= {N}, but only {beta.n_max} are known")

    if smoothing not in SMOOTHINGS:
        raise DomainError(f"'{smoothing}' is not a smoothing. Choose one of {', '.join(SMOOTHINGS)}")


def _resolve_grid(grid: GRID) -> typing.Tuple[numpy.ndarray, bool]:
    if isinstance(grid, (int, numpy.integer)):
        return uniform_grid(int(grid)), True

    points = numpy.asarray(grid, dtype=float).reshape(-1)

    if len(points) == 0:
        raise DomainError("The grid is empty")

    if numpy.any(points < -math.pi) or numpy.any(points >= math.pi):
        raise DomainError("Grid points must lie in [-π, π)")

    return points, False


def series_terms(beta: AmplitudeSequence, N: int, smoothing: str = "none") -> typing.Tuple[numpy.ndarray, numpy.ndarray]:
    """
    The indices 0 < |n| <= N and the smoothed amplitudes f_n·β_n
    """
    indices = numpy.arange(-N, N + 1)
    indices = indices[indices != 0]
    amplitudes = beta[indices]

    if smoothing == "cesaro":
        amplitudes = amplitudes * (1.0 - numpy.abs(indices) / (N + 1.0))

    return indices, amplitudes


def evaluate_series(
    indices: numpy.ndarray,
    coefficients: numpy.ndarray,
    grid: numpy.ndarray,
    uniform: bool = False
) -> numpy.ndarray:
    """
    Σ c_n·exp(i·n·κ) at every grid point

    Phases are taken relative to -π, so that -π itself is evaluated exactly as Σ c_n·(-1)^n. Uniform grids
    starting at -π are summed with an inverse FFT.
    """
    alternating = numpy.where(indices % 2 == 0, 1.0, -1.0) * coefficients

    if uniform:
        size = len(grid)
        folded = numpy.zeros(size, dtype=complex)
        numpy.add.at(folded, numpy.mod(indices, size), alternating)
        return size * numpy.fft.ifft(folded)

    values = numpy.empty(len(grid), dtype=complex)
    offsets = grid + math.pi
    chunk = max(1, _BLOCK_SIZE // max(len(indices), 1))

    for start in range(0, len(grid), chunk):
        stop = start + chunk
        values[start:stop] = numpy.exp(1j * numpy.multiply.outer(offsets[start:stop], indices)) @ alternating

    return values


def _alternating_sum(indices: numpy.ndarray, coefficients: numpy.ndarray) -> complex:
    return complex(numpy.sum(numpy.where(indices % 2 == 0, 1.0, -1.0) * coefficients))


def _nu_samples(
    beta: AmplitudeSequence,
    indices: numpy.ndarray,
    amplitudes: numpy.ndarray,
    grid: numpy.ndarray,
    uniform: bool
) -> typing.Tuple[numpy.ndarray, complex]:
    beta_0 = beta.beta_0
    coefficients = -1j * amplitudes / indices

    series = evaluate_series(indices, coefficients, grid, uniform)
    affine = beta_0 * math.pi - _alternating_sum(indices, coefficients)

    return (series + affine + beta_0 * grid) / TWO_PI, affine


def reconstruct_nu(beta: AmplitudeSequence, N: int, grid: GRID, smoothing: str = "none") -> InversionResult:
    """
    Reconstruct ν(κ) = ν([-π, κ)) from the amplitudes of a measure

    An atom exactly at -π shows up in the series as a jump at the seam of the circle; with ν(-π) = 0 fitted to
    the series, half of its mass is counted at each end of the interval

    Examples:
        >>> flat = reconstruct_nu(AmplitudeSequence.delta(4), 4, [-math.pi, 0.0])
        >>> [round(value.real, 12) for value in flat.nu_samples]
        [0.0, 0.5]

    Args:
        beta: β_n for at least |n| <= N
        N: The truncation of the series
        grid: Sample points in [-π, π) or the size of a uniform grid
        smoothing: 'none' or 'cesaro'

    Returns:
        The samples of ν with the constants of the series
    """
    _check_arguments(beta, N, smoothing)
    points, uniform = _resolve_grid(grid)
    indices, amplitudes = series_terms(beta, N, smoothing)

    nu, affine = _nu_samples(beta, indices, amplitudes, points, uniform)

    logging.debug({"operation": "reconstruct_nu", "N": N, "grid_size": len(points), "smoothing": smoothing})

    return InversionResult(
        N_trunc=N,
        grid=points,
        nu_samples=nu,
        affine_A=affine,
        quad_coeff=beta.beta_0,
        tail_bound=tail_bound(beta.beta_0, N),
        smoothing=smoothing
    )


def reconstruct_F(beta: AmplitudeSequence, N: int, grid: GRID, smoothing: str = "none") -> InversionResult:
    """
    Reconstruct F with (2π)²F'' = -2π·dν, F(-π) = 0 and F'(-π) = 0, along with ν on the same grid

    Examples:
        >>> flat = reconstruct_F(AmplitudeSequence.delta(4), 4, [0.0])
        >>> round(flat.F_samples[0].real, 12)
        -0.125

    Args:
        beta: β_n for at least |n| <= N
        N: The truncation of the series
        grid: Sample points in [-π, π) or the size of a uniform grid
        smoothing: 'none' or 'cesaro'

    Returns:
        The samples of F and ν with the constants of both series
    """
    _check_arguments(beta, N, smoothing)
    points, uniform = _resolve_grid(grid)
    indices, amplitudes = series_terms(beta, N, smoothing)
    beta_0 = beta.beta_0

    nu, affine = _nu_samples(beta, indices, amplitudes, points, uniform)

    coefficients = amplitudes / indices.astype(float) ** 2
    series = evaluate_series(indices, coefficients, points, uniform)

    series_at_start = _alternating_sum(indices, coefficients)
    slope_at_start = _alternating_sum(indices, 1j * indices * coefficients)

    linear = -slope_at_start - beta_0 * math.pi
    constant = -series_at_start + linear * math.pi + beta_0 * math.pi ** 2 / 2.0

    F = (series + constant + linear * points - beta_0 * points ** 2 / 2.0) / TWO_PI ** 2

    logging.debug({"operation": "reconstruct_F", "N": N, "grid_size": len(points), "smoothing": smoothing})

    return InversionResult(
        N_trunc=N,
        grid=points,
        nu_samples=nu,
        F_samples=F,
        affine_A=affine,
        quad_coeff=beta_0,
        F_linear=linear,
        F_constant=constant,
        tail_bound=tail_bound(beta_0, N),
        smoothing=smoothing
    )
