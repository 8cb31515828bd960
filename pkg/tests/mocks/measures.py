"""
Deterministic measures and scenarios for tests
"""
from __future__ import annotations

import math
import pathlib
import typing

import numpy

from anticipation_lab.measures import AmplitudeSequence
from anticipation_lab.measures import RawPointMeasure
from anticipation_lab.measures import ReducedMeasure
from anticipation_lab.measures import gen_spectrum
from anticipation_lab.measures import reduce
from anticipation_lab.measures import write_measure
from anticipation_lab.scenario import Scenario
from anticipation_lab.scenario import build_scenario
from anticipation_lab.utilities.common import trial_generator

SEED = 8675309


def equidistant_raw(p: int) -> RawPointMeasure:
    return gen_spectrum("equidistant", d=p)


def equidistant_reduced(p: int) -> ReducedMeasure:
    return reduce(equidistant_raw(p))


def random_raw_measure(trial_index: int, d: int = None, spread: float = 20.0) -> RawPointMeasure:
    """
    A raw probability measure with positions in [-spread, spread] and weights in [½, 3/2), normalized
    """
    generator = trial_generator(SEED, trial_index)
    d = int(generator.integers(1, 9)) if d is None else d
    weights = generator.uniform(0.5, 1.5, size=d)

    return RawPointMeasure.from_atoms(
        generator.uniform(-spread, spread, size=d),
        weights / math.fsum(weights),
        probability=True
    )


def two_atoms(a: float, weight: float = 0.5, probability: bool = False) -> ReducedMeasure:
    return ReducedMeasure.from_atoms([-a, a], [weight, weight], probability=probability)


def periodic_amplitudes(p: int, n_max: int) -> AmplitudeSequence:
    """
    β_n = 1 when p divides n and 0 otherwise: the amplitudes of p equidistant atoms starting at -π
    """
    return AmplitudeSequence.from_function(lambda n: (n % p == 0).astype(float), n_max)


def orthogonal_scenario(p: int, L: int = None) -> typing.Tuple[Scenario, RawPointMeasure]:
    """
    The scenario with ρ ≡ 1 over p equidistant atoms, along with the raw measure it was reduced from
    """
    raw = equidistant_raw(p)
    scenario = build_scenario(reduce(raw), p - 1 if L is None else L, numpy.ones(p))
    return scenario, raw


def write_measure_file(directory: typing.Union[str, pathlib.Path], name: str, measure) -> pathlib.Path:
    return write_measure(measure, pathlib.Path(directory) / name)
