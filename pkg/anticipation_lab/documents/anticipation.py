"""
Json documents for anticipation reports and model measures
"""
import typing

from pydantic import Field

from .base import ParseableModel


class BoundsDocument(ParseableModel):
    """
    The chain P_L <= ζ²‖y‖² <= ζ² <= 1
    """
    PL: float = Field(description="Σ_{n≤L} p_n, the L + 1 probabilities p_0..p_L")
    zeta2_y2: float
    zeta2: float
    slack: typing.Optional[float] = Field(default=None, description="The smallest gap in the chain")


class AnticipationDocument(ParseableModel):
    """
    `{"alphas": [[re, im], ...], "probs": [...], "P_N": float, "moments": {"1": float, ...}, "bounds": {...}}`
    """
    N: int = Field(ge=0)
    alphas: typing.List[typing.Tuple[float, float]]
    probs: typing.List[float]
    P_N: float
    moments: typing.Dict[str, float] = Field(default_factory=dict)
    retrospective: bool = Field(default=False)
    route_agreement: typing.Optional[float] = Field(
        default=None,
        description="Largest gap between the raw and the spectral difference amplitudes"
    )
    bounds: typing.Optional[BoundsDocument] = Field(default=None)


class ModelPredictionDocument(ParseableModel):
    """
    The closed form predictions a model measure is compared against
    """
    maximum: float
    minimum: typing.Optional[float] = Field(default=None)
    P_L: float
    argmax: int


class ModelMeasureDocument(ParseableModel):
    """
    Exact and predicted anticipation probabilities of a gridded model measure
    """
    kind: str
    L: int
    M: int
    N: int
    c: float
    eps: float
    alphas: typing.List[typing.Tuple[float, float]]
    probs: typing.List[float]
    predicted_probs: typing.List[float]
    maximum: float
    minimum: float
    argmax: int
    P_L: float
    mean_lookahead: float
    log_L: float
    predictions: ModelPredictionDocument
