"""
Amplitude sequences β_n = Σ w·exp(-i·n·κ) over a symmetric range of integers
"""
from __future__ import annotations

import typing

import numpy
import typing_extensions

from pydantic import BaseModel
from pydantic import Field
from pydantic import ValidationError
from pydantic import root_validator

from anticipation_lab.exceptions import DomainError
from anticipation_lab.documents.base import complex_pair
from anticipation_lab.documents.measure import AmplitudeDocument


class AmplitudeSequence(BaseModel):
    """
    β_n for n = -n_max..n_max, stored in that order
    """
    values: numpy.ndarray = Field(description="β_{-n_max}, ..., β_{n_max}")

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    @root_validator(pre=True)
    def _odd_length(cls, values):
        amplitudes = numpy.array(values.get("values"), dtype=complex).reshape(-1)

        if len(amplitudes) % 2 == 0:
            raise ValueError(f"An amplitude sequence needs an odd number of values, got {len(amplitudes)}")

        if not numpy.all(numpy.isfinite(amplitudes)):
            raise ValueError("Amplitudes must be finite")

        amplitudes.setflags(write=False)
        values["values"] = amplitudes
        return values

    @classmethod
    def from_values(cls, values: typing.Sequence[complex]) -> typing_extensions.Self:
        try:
            return cls(values=values)
        except ValidationError as error:
            raise DomainError(f"Invalid amplitude sequence: {error}") from error

    @classmethod
    def from_nonnegative(cls, values: typing.Sequence[complex]) -> typing_extensions.Self:
        """
        Build a conjugate symmetric sequence from β_0..β_N, filling in β_{-n} = conj(β_n)
        """
        nonnegative = numpy.asarray(values, dtype=complex)
        return cls.from_values(numpy.concatenate((numpy.conj(nonnegative[:0:-1]), nonnegative)))

    @classmethod
    def from_function(cls, function: typing.Callable[[numpy.ndarray], numpy.ndarray], n_max: int) -> typing_extensions.Self:
        """
        Evaluate a vectorized function of n over -n_max..n_max

        Example:
            >>> periodic = AmplitudeSequence.from_function(lambda n: (n % 4 == 0).astype(float), 4096)
        """
        if n_max < 0:
            raise DomainError(f"n_max must not be negative, got {n_max}")

        return cls.from_values(function(numpy.arange(-n_max, n_max + 1)))

    @classmethod
    def delta(cls, n_max: int) -> typing_extensions.Self:
        """
        β_n = 1 for n = 0 and 0 otherwise: the amplitudes of the uniform measure dκ/2π
        """
        return cls.from_function(lambda n: (n == 0).astype(float), n_max)

    @property
    def n_max(self) -> int:
        return (len(self.values) - 1) // 2

    @property
    def beta_0(self) -> complex:
        return complex(self.values[self.n_max])

    @property
    def indices(self) -> numpy.ndarray:
        return numpy.arange(-self.n_max, self.n_max + 1)

    def nonnegative(self, count: int = None) -> numpy.ndarray:
        """
        β_0, β_1, ... (`count` values, all of them by default)
        """
        values = self.values[self.n_max:]
        return values if count is None else values[:count]

    def covers(self, n: int) -> bool:
        return abs(n) <= self.n_max

    def truncated(self, n_max: int) -> typing_extensions.Self:
        if not 0 <= n_max <= self.n_max:
            raise DomainError(f"Cannot truncate amplitudes known up to {self.n_max} to {n_max}")

        return type(self).from_values(self.values[self.n_max - n_max:self.n_max + n_max + 1])

    def hermitian_defect(self) -> float:
        """
        max |β_{-n} - conj(β_n)|
        """
        return float(numpy.max(numpy.abs(self.values[::-1] - numpy.conj(self.values))))

    def __getitem__(self, n: typing.Union[int, numpy.ndarray]):
        index = numpy.asarray(n)

        if numpy.any(numpy.abs(index) > self.n_max):
            raise DomainError(f"β_n is only known for |n| <= {self.n_max}")

        values = self.values[index + self.n_max]
        return complex(values) if index.ndim == 0 else values

    def __add__(self, other: AmplitudeSequence) -> AmplitudeSequence:
        if not isinstance(other, AmplitudeSequence):
            return NotImplemented

        n_max = min(self.n_max, other.n_max)
        return AmplitudeSequence.from_values(
            self.truncated(n_max).values + other.truncated(n_max).values
        )

    def __sub__(self, other: AmplitudeSequence) -> AmplitudeSequence:
        if not isinstance(other, AmplitudeSequence):
            return NotImplemented

        n_max = min(self.n_max, other.n_max)
        return AmplitudeSequence.from_values(
            self.truncated(n_max).values - other.truncated(n_max).values
        )

    def __len__(self):
        return len(self.values)

    def __eq__(self, other):
        return isinstance(other, AmplitudeSequence) and numpy.array_equal(self.values, other.values)

    __hash__ = None

    def to_document(self) -> AmplitudeDocument:
        return AmplitudeDocument(n_max=self.n_max, values=[complex_pair(value) for value in self.values])

    @classmethod
    def from_document(cls, document: AmplitudeDocument) -> typing_extensions.Self:
        return cls.from_values([complex(real, imaginary) for real, imaginary in document.values])
