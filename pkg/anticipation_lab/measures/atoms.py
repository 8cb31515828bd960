"""
Finite atomic measures on the real line and on the reduced interval K = [-π, π)
"""
from __future__ import annotations

import math
import typing

import numpy
import typing_extensions

from pydantic import BaseModel
from pydantic import Field
from pydantic import ValidationError
from pydantic import root_validator

from anticipation_lab.exceptions import DomainError
from anticipation_lab.system import settings
from anticipation_lab.utilities.constants import TWO_PI
from anticipation_lab.utilities.types import COMPLEX_VALUES
from anticipation_lab.utilities.types import REAL_VALUES
from anticipation_lab.utilities.types import TIME
from anticipation_lab.documents.measure import AtomDocument
from anticipation_lab.documents.measure import MeasureDocument


def _frozen(values: numpy.ndarray) -> numpy.ndarray:
    values.setflags(write=False)
    return values


def merge_sorted_atoms(
    positions: numpy.ndarray,
    weights: numpy.ndarray,
    tolerance: float
) -> typing.Tuple[numpy.ndarray, numpy.ndarray]:
    """
    Sort atoms by position and merge every run of atoms whose neighbours lie within `tolerance`

    Merged atoms keep the position of the first member and the sum of the weights

    Args:
        positions: Atom positions in any order
        weights: The weight of each atom
        tolerance: The largest gap between neighbours that still counts as the same atom

    Returns:
        Sorted, merged positions and weights
    """
    order = numpy.argsort(positions, kind="stable")
    positions = positions[order]
    weights = weights[order]

    if len(positions) < 2:
        return positions, weights

    starts = numpy.concatenate(([True], numpy.diff(positions) > tolerance))
    groups = numpy.cumsum(starts) - 1

    merged_weights = numpy.zeros(groups[-1] + 1, dtype=complex)
    numpy.add.at(merged_weights, groups, weights)

    return positions[starts], merged_weights


class PointMeasure(BaseModel):
    """
    A finite list of atoms with complex weights, sorted by position
    """
    positions: numpy.ndarray = Field(description="Atom positions in ascending order")
    weights: numpy.ndarray = Field(description="Complex weight of every atom")
    probability: bool = Field(default=False, description="Whether the weights form a probability distribution")

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    @classmethod
    def _merge(cls, positions: numpy.ndarray, weights: numpy.ndarray, values: dict):
        return merge_sorted_atoms(positions, weights, settings.merge_tolerance)

    @root_validator(pre=True)
    def _normalize_atoms(cls, values):
        positions = numpy.asarray(values.get("positions"), dtype=float).reshape(-1)
        raw_weights = values.get("weights")

        if raw_weights is None:
            weights = numpy.full(len(positions), 1.0 / max(len(positions), 1), dtype=complex)
        else:
            weights = numpy.asarray(raw_weights, dtype=complex).reshape(-1)

        if len(positions) == 0:
            raise ValueError("A measure needs at least one atom")

        if len(positions) != len(weights):
            raise ValueError(f"{len(positions)} positions were given with {len(weights)} weights")

        if not (numpy.all(numpy.isfinite(positions)) and numpy.all(numpy.isfinite(weights))):
            raise ValueError("Atom positions and weights must be finite")

        positions, weights = cls._merge(positions, weights, values)

        values["positions"] = _frozen(positions)
        values["weights"] = _frozen(weights)
        return values

    @root_validator(skip_on_failure=True)
    def _check_probability(cls, values):
        if not values.get("probability"):
            return values

        weights: numpy.ndarray = values["weights"]
        tolerance = settings.probability_tolerance

        if numpy.any(numpy.abs(weights.imag) > tolerance):
            raise ValueError("The weights of a probability measure must be real")

        if numpy.any(weights.real <= 0):
            raise ValueError("The weights of a probability measure must be strictly positive")

        total = math.fsum(weights.real)
        if abs(total - 1.0) > tolerance:
            raise ValueError(f"The weights of a probability measure must sum to 1, not {total!r}")

        # Drop rounding noise in the imaginary parts
        values["weights"] = _frozen(weights.real.astype(complex))
        return values

    @classmethod
    def from_atoms(
        cls,
        positions: REAL_VALUES,
        weights: COMPLEX_VALUES = None,
        probability: bool = False,
        **kwargs
    ) -> typing_extensions.Self:
        """
        Build a measure, reporting invalid atoms as a `DomainError`

        Args:
            positions: Where the atoms are
            weights: The weight of each atom; equal weights 1/d when omitted
            probability: Whether the weights must form a probability distribution
            **kwargs: Extra fields of subclasses

        Returns:
            The new measure
        """
        try:
            return cls(positions=positions, weights=weights, probability=probability, **kwargs)
        except ValidationError as error:
            raise DomainError(f"Invalid {cls.__name__}: {error}") from error

    @property
    def size(self) -> int:
        return len(self.positions)

    @property
    def total_mass(self) -> complex:
        return complex(numpy.sum(self.weights))

    @property
    def real_weights(self) -> numpy.ndarray:
        return self.weights.real

    @property
    def is_real(self) -> bool:
        return bool(numpy.all(self.weights.imag == 0))

    def atoms(self) -> typing.Iterator[typing.Tuple[float, complex]]:
        for position, weight in zip(self.positions, self.weights):
            yield float(position), complex(weight)

    def fourier(self, t: TIME) -> typing.Union[complex, numpy.ndarray]:
        """
        Σ weight · exp(-i · position · t)

        Args:
            t: A single time or an array of times

        Returns:
            A complex number for a single time, an array of them otherwise
        """
        times = numpy.asarray(t, dtype=float)
        values = numpy.exp(-1j * numpy.multiply.outer(times, self.positions)) @ self.weights

        if times.ndim == 0:
            return complex(values)

        return values

    def restricted_to(self, mask: numpy.ndarray) -> typing_extensions.Self:
        """
        A copy holding only the atoms selected by a boolean mask. The copy is never a probability measure
        """
        return type(self).from_atoms(
            self.positions[mask], self.weights[mask], probability=False, **self._shape_fields()
        )

    def _shape_fields(self) -> typing.Dict[str, typing.Any]:
        return {}

    def to_document(self) -> MeasureDocument:
        atoms = [
            AtomDocument(**{self._position_key(): float(position), "w_re": float(weight.real), "w_im": float(weight.imag)})
            for position, weight in zip(self.positions, self.weights)
        ]
        return MeasureDocument(atoms=atoms, probability=self.probability)

    def to_csv_rows(self) -> typing.List[typing.Tuple[float, float, float]]:
        return [
            (float(position), float(weight.real), float(weight.imag))
            for position, weight in zip(self.positions, self.weights)
        ]

    @classmethod
    def _position_key(cls) -> str:
        return "lambda"

    def __len__(self):
        return self.size

    def __eq__(self, other):
        if type(other) is not type(self):
            return False

        return (
            self.probability == other.probability
            and numpy.array_equal(self.positions, other.positions)
            and numpy.array_equal(self.weights, other.weights)
        )

    __hash__ = None

    def __str__(self):
        return f"{type(self).__name__}(d={self.size}, mass={self.total_mass:.12g}, probability={self.probability})"


class RawPointMeasure(PointMeasure):
    """
    Atoms on the real line in phase units λ = E·T/ħ, before any reduction
    """


class ReducedMeasure(PointMeasure):
    """
    Atoms folded onto [-modulus/2, modulus/2); with the default modulus of 2π this is K = [-π, π)
    """
    modulus: float = Field(default=TWO_PI, description="The period the atoms were folded with")

    @classmethod
    def _merge(cls, positions: numpy.ndarray, weights: numpy.ndarray, values: dict):
        modulus = float(values.get("modulus") or TWO_PI)
        half = modulus / 2.0

        if modulus <= 0:
            raise ValueError("The modulus of a reduced measure must be positive")

        if numpy.any(positions < -half) or numpy.any(positions >= half):
            raise ValueError(f"Reduced positions must lie in [{-half!r}, {half!r})")

        positions, weights = merge_sorted_atoms(positions, weights, settings.merge_tolerance)

        # The two ends of the interval touch on the circle
        if len(positions) > 1 and positions[0] + modulus - positions[-1] <= settings.merge_tolerance:
            weights = weights.copy()
            weights[0] += weights[-1]
            positions = positions[:-1]
            weights = weights[:-1]

        return positions, weights

    @classmethod
    def _position_key(cls) -> str:
        return "kappa"

    @property
    def kappas(self) -> numpy.ndarray:
        return self.positions

    def _shape_fields(self) -> typing.Dict[str, typing.Any]:
        return {"modulus": self.modulus}

    def to_document(self) -> MeasureDocument:
        document = super().to_document()

        if not math.isclose(self.modulus, TWO_PI, rel_tol=0, abs_tol=1e-15):
            document.modulus = self.modulus

        return document

    def __eq__(self, other):
        return super().__eq__(other) and self.modulus == other.modulus

    __hash__ = None


def measure_from_document(document: MeasureDocument) -> PointMeasure:
    """
    Turn a measure document into a raw or a reduced measure depending on how its atoms are placed
    """
    positions = [atom.position for atom in document.atoms]

    if document.has_weights:
        weights = [complex(atom.w_re, atom.w_im or 0.0) for atom in document.atoms]
    else:
        weights = None

    if document.is_reduced:
        extra = {"modulus": document.modulus} if document.modulus else {}
        return ReducedMeasure.from_atoms(positions, weights, probability=document.probability, **extra)

    return RawPointMeasure.from_atoms(positions, weights, probability=document.probability)
