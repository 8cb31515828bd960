"""
Json documents exchanged through files
"""
from .base import ParseableModel
from .base import complex_pair
from .measure import AtomDocument
from .measure import MeasureDocument
from .measure import AmplitudeDocument
from .scenario import ConditionReport
from .scenario import ScenarioDocument
from .scenario import RecoveredSpectrumDocument
from .anticipation import BoundsDocument
from .anticipation import AnticipationDocument
from .anticipation import ModelPredictionDocument
from .anticipation import ModelMeasureDocument
from .inversion import InversionDocument
from .inversion import PeakDocument
from .inversion import PointSpectrumDocument
from .kernels import ConvergenceRowDocument
from .kernels import ConvergenceDocument
from .kernels import TimeAverageDocument
from .acceptance import CriterionDocument
from .acceptance import SelfTestDocument
