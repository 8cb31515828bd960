"""
The spectral difference of a raw measure: its split by the parity of the period an atom lies in

An atom at λ = κ + 2πk (κ in [-π, π)) contributes to g0 at κ when k is even and to g1 when k is odd,
so that exp(-i·(n + ½)·λ) = ±exp(-i·(n + ½)·κ) with the sign of the parity
"""
import math
import typing

import numpy

from pydantic import BaseModel
from pydantic import Field
from pydantic import validator

from anticipation_lab.exceptions import DomainError
from anticipation_lab.measures import PointMeasure
from anticipation_lab.measures import RawPointMeasure
from anticipation_lab.measures import ReducedMeasure
from anticipation_lab.measures import reduced_positions
from anticipation_lab.utilities.constants import TWO_PI
from anticipation_lab.utilities.types import TIME


class SpectralDifference(BaseModel):
    """
    Entries (κ, g0, g1) with y = (g0 - g1)/(g0 + g1)
    """
    kappas: numpy.ndarray = Field(description="Reduced positions in ascending order")
    g0: numpy.ndarray = Field(description="Mass of atoms in even periods")
    g1: numpy.ndarray = Field(description="Mass of atoms in odd periods")

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    @validator("kappas", "g0", "g1", pre=True)
    def _freeze(cls, value):
        array = numpy.array(value, dtype=float).reshape(-1)
        array.setflags(write=False)
        return array

    @property
    def size(self) -> int:
        return len(self.kappas)

    @property
    def sigma(self) -> numpy.ndarray:
        """
        g0 + g1: the reduced measure the difference is taken against
        """
        return self.g0 + self.g1

    @property
    def y(self) -> numpy.ndarray:
        sigma = self.sigma
        return numpy.divide(self.g0 - self.g1, sigma, out=numpy.zeros_like(sigma), where=sigma > 0)

    @property
    def total_mass(self) -> float:
        return math.fsum(self.sigma)

    def y_norm_squared(self) -> float:
        """
        ‖y‖² in L²(σ)
        """
        return math.fsum(self.y ** 2 * self.sigma)

    def entries(self) -> typing.Iterator[typing.Tuple[float, float, float, float]]:
        for kappa, g0, g1, y in zip(self.kappas, self.g0, self.g1, self.y):
            yield float(kappa), float(g0), float(g1), float(y)


def spectral_difference(mu_s_raw: PointMeasure) -> SpectralDifference:
    """
    Split a raw probability measure by the parity of the period each atom lies in

    Args:
        mu_s_raw: A raw probability measure

    Returns:
        The spectral difference, with atoms at the same reduced position merged
    """
    if isinstance(mu_s_raw, ReducedMeasure) or not isinstance(mu_s_raw, RawPointMeasure):
        raise DomainError("The spectral difference needs the raw lift of a measure; a reduced measure has lost it")

    if not mu_s_raw.probability:
        raise DomainError("The spectral difference is only defined for probability measures")

    kappas = reduced_positions(mu_s_raw.positions)
    periods = numpy.rint((mu_s_raw.positions - kappas) / TWO_PI).astype(numpy.int64)
    odd = periods % 2 == 1

    weights = mu_s_raw.real_weights

    # The real part carries g0 and the imaginary part g1 through the merge of coinciding positions
    split = ReducedMeasure.from_atoms(kappas, numpy.where(odd, 1j * weights, weights))

    return SpectralDifference(kappas=split.kappas, g0=split.weights.real, g1=split.weights.imag)


def half_integer_transform(mu_raw: PointMeasure, n: TIME) -> typing.Union[complex, numpy.ndarray]:
    """
    Σ w·exp(-i·(n + ½)·λ) over the raw atoms
    """
    return mu_raw.fourier(numpy.asarray(n, dtype=float) + 0.5)


def difference_transform(diff: SpectralDifference, n: TIME) -> typing.Union[complex, numpy.ndarray]:
    """
    Σ (g0 - g1)·exp(-i·(n + ½)·κ) over the entries of a spectral difference, which equals the raw half integer
    transform of the measure the difference was taken from
    """
    times = numpy.asarray(n, dtype=float) + 0.5
    values = numpy.exp(-1j * numpy.multiply.outer(times, diff.kappas)) @ (diff.g0 - diff.g1)

    return complex(values) if times.ndim == 0 else values
