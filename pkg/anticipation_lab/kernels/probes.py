"""
Smooth test functions and the probes that pair them with measures
"""
from __future__ import annotations

import typing

import numpy

from pydantic import BaseModel
from pydantic import Field
from pydantic import validator
from pydantic import root_validator

from anticipation_lab.exceptions import DomainError


class SmoothBump(BaseModel):
    """
    (1 - (x/h)²)³ on (-h, h) and zero elsewhere, with value 1 at 0
    """
    name: str
    half_width: float = Field(gt=0)

    class Config:
        allow_mutation = False

    @property
    def integral(self) -> float:
        """
        ∫ (1 - (x/h)²)³ dx = 32h/35
        """
        return 32.0 * self.half_width / 35.0

    def __call__(self, x: typing.Union[float, numpy.ndarray]) -> typing.Union[float, numpy.ndarray]:
        scaled = numpy.asarray(x, dtype=float) / self.half_width
        values = numpy.where(numpy.abs(scaled) < 1.0, (1.0 - scaled ** 2) ** 3, 0.0)
        return float(values) if values.ndim == 0 else values


TEST_FUNCTIONS: typing.Dict[str, SmoothBump] = {
    "bump": SmoothBump(name="bump", half_width=0.5),
    "wide_bump": SmoothBump(name="wide_bump", half_width=1.0),
}
"""Named test functions; 'bump' is supported in (-½, ½) and may serve as Ψ"""


def get_test_function(name: str) -> SmoothBump:
    if name not in TEST_FUNCTIONS:
        raise DomainError(f"'{name}' is not a known test function. Choose one of {', '.join(TEST_FUNCTIONS)}")

    return TEST_FUNCTIONS[name]


class KernelProbe(BaseModel):
    """
    The exponent α, the ladder of N and the named functions φ and Ψ of a δ-kernel experiment
    """
    alpha: float = Field(ge=0, le=1, description="The Hölder exponent the pairing is scaled with")
    N_list: typing.List[int] = Field(default_factory=lambda: [2 ** k + 1 for k in range(4, 11)])
    phi: str = Field(default="bump")
    psi: str = Field(default="bump")

    class Config:
        allow_mutation = False

    @validator("N_list")
    def _strictly_increasing(cls, value: typing.List[int]):
        if not value:
            raise ValueError("A probe needs at least one N")

        if value[0] < 1 or any(later <= earlier for earlier, later in zip(value, value[1:])):
            raise ValueError(f"The ladder of N must be positive and strictly increasing, not {value}")

        return value

    @root_validator(skip_on_failure=True)
    def _known_functions(cls, values):
        for key in ("phi", "psi"):
            if values[key] not in TEST_FUNCTIONS:
                raise ValueError(f"'{values[key]}' is not a known test function")

        if TEST_FUNCTIONS[values["psi"]].half_width > 0.5:
            raise ValueError(f"Ψ must be supported in (-½, ½); '{values['psi']}' is not")

        return values

    @property
    def phi_function(self) -> SmoothBump:
        return TEST_FUNCTIONS[self.phi]

    @property
    def psi_function(self) -> SmoothBump:
        return TEST_FUNCTIONS[self.psi]

    @property
    def phi_at_zero(self) -> float:
        return self.phi_function(0.0)
