"""
Gridded model measures whose anticipation probabilities have closed form asymptotics

Both kinds place L clusters of M equally weighted atoms, one cluster centred in each of L equal cells of K.
Atoms within a cluster sit 1/N of a cell apart, so a cluster covers a fraction ε = M/N of its cell.
Kind 'b' gives every atom c/(LM); kind 'c' alternates the sign from cell to cell
"""
import math
import typing

import numpy

from pydantic import BaseModel
from pydantic import Field

from anticipation_lab.exceptions import DomainError
from anticipation_lab.documents.anticipation import ModelMeasureDocument
from anticipation_lab.documents.anticipation import ModelPredictionDocument
from anticipation_lab.documents.base import complex_pair
from anticipation_lab.measures import ReducedMeasure
from anticipation_lab.system import logging
from anticipation_lab.utilities.constants import TWO_PI

MODEL_KINDS = ("b", "c")

GROWTH_ORDERS = (16, 32, 64, 128)
"""The orders over which the mean look-ahead is compared with ln L"""


class ModelPredictions(BaseModel):
    maximum: float
    minimum: typing.Optional[float] = None
    P_L: float
    argmax: int


class ModelMeasureReport(BaseModel):
    """
    Exact anticipation probabilities of a model measure next to their asymptotic predictions
    """
    kind: str
    L: int
    M: int
    N: int
    c: float
    eps: float
    measure: ReducedMeasure = Field(description="The signed model measure")
    alphas: numpy.ndarray
    probs: numpy.ndarray
    predicted_probs: numpy.ndarray
    predictions: ModelPredictions

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    @property
    def maximum(self) -> float:
        return float(numpy.max(self.probs))

    @property
    def minimum(self) -> float:
        return float(numpy.min(self.probs))

    @property
    def argmax(self) -> int:
        return int(numpy.argmax(self.probs))

    @property
    def P_L(self) -> float:
        return math.fsum(self.probs[:self.L])

    @property
    def mean_lookahead(self) -> float:
        """
        ⟨n⟩ = Σ_{n<L} n·p_n
        """
        return math.fsum(numpy.arange(self.L) * self.probs[:self.L])

    def to_document(self) -> ModelMeasureDocument:
        return ModelMeasureDocument(
            kind=self.kind,
            L=self.L,
            M=self.M,
            N=self.N,
            c=self.c,
            eps=self.eps,
            alphas=[complex_pair(alpha) for alpha in self.alphas],
            probs=[float(value) for value in self.probs],
            predicted_probs=[float(value) for value in self.predicted_probs],
            maximum=self.maximum,
            minimum=self.minimum,
            argmax=self.argmax,
            P_L=self.P_L,
            mean_lookahead=self.mean_lookahead,
            log_L=math.log(self.L),
            predictions=ModelPredictionDocument(**self.predictions.dict())
        )

    def to_csv_rows(self) -> typing.List[typing.Tuple[int, float, float, float, float]]:
        return [
            (index, float(alpha.real), float(alpha.imag), float(probability), float(predicted))
            for index, (alpha, probability, predicted) in enumerate(zip(self.alphas, self.probs, self.predicted_probs))
        ]


def _sinc(values: numpy.ndarray) -> numpy.ndarray:
    # numpy.sinc is sin(πx)/(πx)
    return numpy.sinc(values / math.pi)


def model_positions(L: int, M: int, N: int) -> numpy.ndarray:
    """
    Cluster atoms at -π + 2π(j + ½ + (m - (M - 1)/2)/N)/L for j < L and m < M, ordered by cell
    """
    cells = numpy.arange(L)[:, None]
    offsets = (numpy.arange(M) - (M - 1) / 2.0) / N
    return (-math.pi + TWO_PI * (cells + 0.5 + offsets) / L).reshape(-1)


def predicted_probabilities(kind: str, L: int, c: float, eps: float, count: int) -> numpy.ndarray:
    """
    [c/(L·sin(π(n + ½)/L))·sinc(επ(n + ½)/L)]² for kind 'b'; kind 'c' has cos in place of sin
    """
    phases = math.pi * (numpy.arange(count) + 0.5) / L
    cell_sum = numpy.sin(phases) if kind == "b" else numpy.cos(phases)

    with numpy.errstate(divide="ignore"):
        return (c / (L * cell_sum) * _sinc(eps * phases)) ** 2


def model_predictions(kind: str, L: int, c: float, eps: float) -> ModelPredictions:
    """
    The closed form extrema and P_L of a model measure for large L
    """
    squeeze = math.sin(eps * math.pi / 2.0) ** 2 / (eps * math.pi) ** 2

    if kind == "b":
        return ModelPredictions(
            maximum=4.0 * c ** 2 / math.pi ** 2,
            minimum=4.0 * squeeze * c ** 2 / L ** 2,
            P_L=c ** 2,
            argmax=0
        )

    return ModelPredictions(
        maximum=16.0 * squeeze * c ** 2 / math.pi ** 2,
        P_L=4.0 * squeeze * c ** 2,
        argmax=math.ceil(L / 2)
    )


def model_measure(
    kind: str,
    L: int,
    M: int = None,
    N: int = 2048,
    c: float = 1.0,
    eps: float = 0.1,
    count: int = None
) -> ModelMeasureReport:
    """
    Build a model measure and compute its anticipation probabilities by direct summation

    Args:
        kind: 'b' for equal signs, 'c' for signs alternating between cells
        L: The number of cells
        M: Atoms per cluster; round(ε·N) when omitted
        N: The grid resolution within a cell
        c: The total mass of the measure, 0 < c <= 1
        eps: The fraction of a cell covered by a cluster, 0 < ε < 1
        count: The number of amplitudes, n = 0..count - 1; L by default

    Returns:
        The exact probabilities next to their predictions
    """
    if kind not in MODEL_KINDS:
        raise DomainError(f"'{kind}' is not a model kind. Choose one of {', '.join(MODEL_KINDS)}")

    if L < 1 or N < 1:
        raise DomainError(f"L and N must be positive, not L = {L} and N = {N}")

    if not 0 < c <= 1:
        raise DomainError(f"c must lie in (0, 1], not {c!r}")

    if not 0 < eps < 1:
        raise DomainError(f"ε must lie in (0, 1), not {eps!r}")

    M = round(eps * N) if M is None else M

    if not 1 <= M <= N:
        raise DomainError(f"A cluster needs between 1 and N = {N} atoms, not {M}")

    count = L if count is None else count

    positions = model_positions(L, M, N)
    signs = numpy.ones(L) if kind == "b" else (-1.0) ** numpy.arange(L)
    weights = numpy.repeat(signs * c / (L * M), M)

    measure = ReducedMeasure.from_atoms(positions, weights)
    alphas = measure.fourier(numpy.arange(count) + 0.5)

    report = ModelMeasureReport(
        kind=kind,
        L=L,
        M=M,
        N=N,
        c=c,
        eps=M / N,
        measure=measure,
        alphas=alphas,
        probs=numpy.abs(alphas) ** 2,
        predicted_probs=predicted_probabilities(kind, L, c, M / N, count),
        predictions=model_predictions(kind, L, c, M / N)
    )

    logging.debug({"kind": kind, "L": L, "M": M, "maximum": report.maximum, "P_L": report.P_L})

    return report


def lookahead_growth(
    kind: str = "b",
    orders: typing.Sequence[int] = GROWTH_ORDERS,
    N: int = 2048,
    c: float = 1.0,
    eps: float = 0.1
) -> typing.List[typing.Tuple[int, float, float]]:
    """
    The mean look-ahead ⟨n⟩ of the model measure against ln L over several orders

    Returns:
        (L, ⟨n⟩, ln L) for every order
    """
    rows = []

    for L in orders:
        report = model_measure(kind, L, N=N, c=c, eps=eps)
        rows.append((L, report.mean_lookahead, math.log(L)))

    return rows
