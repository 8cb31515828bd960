"""
Evolution scenarios, characteristic polynomials and recovered spectra
"""
from __future__ import annotations

import math
import typing

import numpy
import typing_extensions

from pydantic import BaseModel
from pydantic import Field
from pydantic import validator

from anticipation_lab.documents.scenario import ConditionReport
from anticipation_lab.documents.scenario import RecoveredSpectrumDocument
from anticipation_lab.documents.scenario import ScenarioDocument
from anticipation_lab.exceptions import DomainError
from anticipation_lab.measures import ReducedMeasure
from anticipation_lab.measures import measure_from_document

RECOVERED_MASS_TOLERANCE = 1e-6
"""How far the weights of a recovered spectrum may stray from the zeroth amplitude"""


def _frozen_array(value, dtype) -> numpy.ndarray:
    array = numpy.array(value, dtype=dtype).reshape(-1)
    array.setflags(write=False)
    return array


class Scenario(BaseModel):
    """
    An evolution scenario of order L over the reduced spectral measure ν_q

    ρ is the spectral image of the dual base state. ν_r = |ρ|²·ν_q, ν_s = |ρ|·ν_q/‖ρ‖₁ and
    ζ = Σ w·sqrt(|ρ|/‖ρ‖₁) is the size of the embedded orthogonal evolution
    """
    nu_q: ReducedMeasure
    L: int = Field(ge=0, description="The order of the scenario")
    rho: numpy.ndarray = Field(description="ρ at every atom of ν_q")
    norm1: float = Field(description="‖ρ‖₁ = Σ |ρ|·w")
    sign_fn: numpy.ndarray = Field(description="The sign of ρ at every atom of ν_q")
    nu_r: ReducedMeasure
    nu_s: ReducedMeasure
    zeta: float = Field(gt=0, description="The size of the embedded orthogonal evolution")
    positive: bool
    condition_report: ConditionReport = Field(default_factory=ConditionReport)

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    @validator("rho", pre=True)
    def _freeze_rho(cls, value):
        return _frozen_array(value, float)

    @validator("sign_fn", pre=True)
    def _freeze_signs(cls, value):
        return _frozen_array(value, int)

    @property
    def d(self) -> int:
        return self.nu_q.size

    @property
    def sigma(self) -> numpy.ndarray:
        """
        The weights σ of ν_s at the atoms of ν_q, zero where ρ vanishes
        """
        return numpy.abs(self.rho) * self.nu_q.real_weights / self.norm1

    def to_document(self) -> ScenarioDocument:
        return ScenarioDocument(
            nu_q=self.nu_q.to_document(),
            L=self.L,
            rho=[float(value) for value in self.rho],
            zeta=self.zeta,
            positive=self.positive,
            nu_s=self.nu_s.to_document(),
            nu_r=self.nu_r.to_document(),
            norm1=self.norm1,
            sign_fn=[int(value) for value in self.sign_fn],
            condition_report=self.condition_report
        )

    @classmethod
    def from_document(cls, document: ScenarioDocument) -> typing_extensions.Self:
        """
        Rebuild a scenario from its document

        Only ν_q, L and ρ are trusted; everything derived from them is recomputed so that an edited
        document cannot describe an inconsistent scenario
        """
        from .builder import build_scenario

        nu_q = measure_from_document(document.nu_q)

        if not isinstance(nu_q, ReducedMeasure):
            raise DomainError("The ν_q of a scenario must be a reduced measure")

        scenario = build_scenario(nu_q, document.L, document.rho)

        if document.condition_report is not None:
            report = scenario.condition_report.copy(
                update=document.condition_report.dict(exclude_none=True, exclude={"residual", "r0_norm"})
            )
            scenario = scenario.copy(update={"condition_report": report})

        return scenario


class CharacteristicPolynomial(BaseModel):
    """
    The coefficients a_1..a_d of ω^d - Σ_{n<d} a_{d-n}·ω^n, whose roots are ω_k = exp(-i·κ_k)
    """
    coeffs: numpy.ndarray = Field(description="a_1, ..., a_d")

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    @validator("coeffs", pre=True)
    def _freeze_coefficients(cls, value):
        coefficients = _frozen_array(value, complex)

        if len(coefficients) == 0:
            raise ValueError("A characteristic polynomial needs at least one coefficient")

        return coefficients

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def a(self, n: int) -> complex:
        """
        a_n with a_0 = -1, which makes the polynomial read -Σ_{n=0}^{d} a_{d-n}·ω^n
        """
        if n == 0:
            return -1.0 + 0j

        return complex(self.coeffs[n - 1])

    @property
    def polynomial(self) -> numpy.ndarray:
        """
        The coefficients in `numpy.polyval` order, highest power first
        """
        return numpy.concatenate(([1.0 + 0j], -self.coeffs))

    def __call__(self, omega: typing.Union[complex, numpy.ndarray]) -> typing.Union[complex, numpy.ndarray]:
        return numpy.polyval(self.polynomial, omega)

    def symmetry_defect(self) -> float:
        """
        max |a_n + a_d·conj(a_{d-n})| over 1 <= n < d together with ||a_d| - 1|

        Both vanish when every root lies on the unit circle
        """
        d = self.degree
        a_d = self.a(d)
        defects = [abs(abs(a_d) - 1.0)]
        defects.extend(abs(self.a(n) + a_d * self.a(d - n).conjugate()) for n in range(1, d))
        return max(defects)


class RecoveredSpectrum(BaseModel):
    """
    Positions and weights found from a finite run of amplitudes
    """
    kappas: numpy.ndarray
    weights: numpy.ndarray
    condition_report: ConditionReport

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    @validator("kappas", "weights", pre=True)
    def _freeze(cls, value):
        return _frozen_array(value, float)

    @property
    def d(self) -> int:
        return len(self.kappas)

    def to_measure(self) -> ReducedMeasure:
        """
        The recovered spectrum as a reduced measure

        Positive weights that sum to 1 within the recovery tolerance are renormalized and flagged as a
        probability measure
        """
        total = math.fsum(self.weights)

        if numpy.all(self.weights > 0) and abs(total - 1.0) <= RECOVERED_MASS_TOLERANCE:
            return ReducedMeasure.from_atoms(self.kappas, self.weights / total, probability=True)

        return ReducedMeasure.from_atoms(self.kappas, self.weights, probability=False)

    def to_document(self) -> RecoveredSpectrumDocument:
        return RecoveredSpectrumDocument(measure=self.to_measure().to_document(), condition_report=self.condition_report)
