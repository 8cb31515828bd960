"""
Json documents for evolution scenarios and recovered spectra
"""
import typing

from pydantic import Field
from pydantic import validator

from .base import ParseableModel
from .measure import MeasureDocument


class ConditionReport(ParseableModel):
    """
    Numerical diagnostics attached to a solved scenario or a recovered spectrum
    """
    residual: typing.Optional[float] = Field(default=None, description="Largest duality residual")
    r0_norm: typing.Optional[float] = Field(default=None, description="‖r_0‖₂ = sqrt(Σ ρ²·w)")
    solver: typing.Optional[str] = Field(default=None, description="The solver that produced ρ")
    margin: typing.Optional[float] = Field(default=None, description="The optimal min ρ of the positivity program")
    classification: typing.Optional[str] = Field(default=None, description="positive, boundary or negative")
    condition_number: typing.Optional[float] = Field(default=None, description="Condition number of the moment system")
    min_root_gap: typing.Optional[float] = Field(default=None, description="Smallest distance between recovered roots")
    max_unit_deviation: typing.Optional[float] = Field(default=None, description="Largest |1 - |ω|| over recovered roots")
    max_weight_imaginary: typing.Optional[float] = Field(default=None, description="Largest imaginary part dropped from recovered weights")


class ScenarioDocument(ParseableModel):
    """
    `{"nu_q": <measure>, "L": int, "rho": [float], "zeta": float, "positive": bool, "nu_s": <measure>,
    "nu_r": <measure>, "norm1": float, "condition_report": {...}}`
    """
    nu_q: MeasureDocument
    L: int = Field(ge=0)
    rho: typing.List[float]
    zeta: float
    positive: bool
    nu_s: MeasureDocument
    nu_r: MeasureDocument
    norm1: float
    sign_fn: typing.Optional[typing.List[int]] = Field(default=None)
    condition_report: typing.Optional[ConditionReport] = Field(default=None)

    @validator("rho")
    def _one_value_per_atom(cls, rho, values):
        nu_q: MeasureDocument = values.get("nu_q")

        if nu_q is not None and len(rho) != len(nu_q.atoms):
            raise ValueError(f"ρ has {len(rho)} values but ν_q has {len(nu_q.atoms)} atoms")

        return rho


class RecoveredSpectrumDocument(ParseableModel):
    """
    A spectrum recovered from amplitudes along with the diagnostics of the recovery
    """
    measure: MeasureDocument
    condition_report: ConditionReport
