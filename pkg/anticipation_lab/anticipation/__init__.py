"""
Anticipation of positive evolutions: spectral differences, amplitudes, strength bounds and model measures
"""
from .difference import SpectralDifference
from .difference import spectral_difference
from .difference import half_integer_transform
from .difference import difference_transform
from .amplitudes import AnticipationReport
from .amplitudes import statistics
from .amplitudes import anticipation_amplitudes
from .amplitudes import equidistant_probabilities
from .amplitudes import lemma2_sum
from .bounds import strength_bound_check
from .bounds import StochasticDifferenceModel
from .bounds import ExpectedStrength
from .bounds import expected_strength
from .bounds import SAMPLERS
from .model import MODEL_KINDS
from .model import ModelMeasureReport
from .model import model_measure
from .model import model_predictions
from .model import predicted_probabilities
from .model import lookahead_growth
