"""
δ-kernel representations and time averages of return probabilities
"""
from .probes import SmoothBump
from .probes import TEST_FUNCTIONS
from .probes import get_test_function
from .probes import KernelProbe
from .pairings import PAIRINGS
from .pairings import scaled_test_pairing
from .pairings import dirichlet_kernel
from .pairings import dirichlet_pairing
from .pairings import dirichlet_series_pairing
from .pairings import ConvergenceTable
from .pairings import error_slope
from .pairings import convergence_table
from .averages import TimeAverageResult
from .averages import time_average
from .averages import two_atom_average
