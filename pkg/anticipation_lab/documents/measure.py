"""
Json documents for measures and amplitude sequences
"""
import typing

from pydantic import Field
from pydantic import root_validator
from pydantic import validator

from .base import ParseableModel


class AtomDocument(ParseableModel):
    """
    A single atom. Raw measures place it with `lambda`, reduced measures with `kappa`
    """
    lambda_: typing.Optional[float] = Field(default=None, alias="lambda", description="Raw position λ = E·T/ħ")
    kappa: typing.Optional[float] = Field(default=None, description="Reduced position in [-π, π)")
    w_re: typing.Optional[float] = Field(default=None, description="Real part of the weight; equal weights if absent")
    w_im: typing.Optional[float] = Field(default=None, description="Imaginary part of the weight")

    @root_validator
    def _has_exactly_one_position(cls, values):
        if (values.get("lambda_") is None) == (values.get("kappa") is None):
            raise ValueError("An atom needs exactly one of 'lambda' or 'kappa'")

        if values.get("w_re") is None and values.get("w_im") is not None:
            raise ValueError("An atom with an imaginary weight needs a real weight too")

        return values

    @property
    def position(self) -> float:
        return self.lambda_ if self.lambda_ is not None else self.kappa


class MeasureDocument(ParseableModel):
    """
    `{"atoms": [{"lambda": float, "w_re": float, "w_im": float}, ...], "probability": bool}`
    """
    atoms: typing.List[AtomDocument] = Field(min_items=1)
    probability: bool = Field(default=False)
    modulus: typing.Optional[float] = Field(
        default=None,
        description="The period a reduced measure was folded with when it is not 2π"
    )

    @validator("atoms")
    def _positions_share_a_kind(cls, atoms: typing.List[AtomDocument]):
        kinds = {atom.kappa is None for atom in atoms}

        if len(kinds) > 1:
            raise ValueError("A measure may not mix 'lambda' and 'kappa' atoms")

        weighted = {atom.w_re is None for atom in atoms}

        if len(weighted) > 1:
            raise ValueError("Either every atom carries a weight or none does")

        return atoms

    @property
    def is_reduced(self) -> bool:
        return self.atoms[0].kappa is not None

    @property
    def has_weights(self) -> bool:
        return self.atoms[0].w_re is not None


class AmplitudeDocument(ParseableModel):
    """
    `{"n_max": N, "values": [[re, im], ...]}` holding β_n for n = -N..N
    """
    n_max: int = Field(ge=0)
    values: typing.List[typing.Tuple[float, float]]

    @root_validator
    def _length_matches(cls, values):
        n_max = values.get("n_max")
        amplitudes = values.get("values")

        if n_max is not None and amplitudes is not None and len(amplitudes) != 2 * n_max + 1:
            raise ValueError(f"{len(amplitudes)} amplitudes were given but n_max = {n_max} needs {2 * n_max + 1}")

        return values
