"""
Factories for the measures, amplitudes and scenarios shared by the tests
"""
from .measures import SEED
from .measures import equidistant_raw
from .measures import equidistant_reduced
from .measures import random_raw_measure
from .measures import two_atoms
from .measures import periodic_amplitudes
from .measures import orthogonal_scenario
from .measures import write_measure_file
