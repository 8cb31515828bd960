"""
Evolution scenarios: duality systems, positivity, embedded orthogonal evolutions and spectrum recovery
"""
from .models import Scenario
from .models import CharacteristicPolynomial
from .models import RecoveredSpectrum
from .duality import duality_matrix
from .duality import duality_residuals
from .duality import homogeneous_basis
from .duality import solve_rho
from .duality import solve_rho_nonneg
from .duality import classify_margin
from .duality import support_span
from .duality import order1_criterion
from .duality import SOLVERS
from .builder import build_scenario
from .builder import lift_joint_measure
from .builder import admissible_partition
from .builder import construct_nu_q_from_nu_s
from .prony import char_poly_from_spectrum
from .prony import find_roots
from .prony import recover_from_amplitudes
from .prony import spectrum_round_trip_error
from .positivity import PositivityDomainReport
from .positivity import ClusteredPositivityReport
from .positivity import classify_spectrum
from .positivity import probe_positivity_domain
from .positivity import clustered_positivity
