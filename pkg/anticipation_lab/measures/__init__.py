"""
Point measures, their reduction onto K = [-π, π), Fourier transforms and model spectra
"""
from .atoms import PointMeasure
from .atoms import RawPointMeasure
from .atoms import ReducedMeasure
from .atoms import measure_from_document
from .atoms import merge_sorted_atoms
from .amplitudes import AmplitudeSequence
from .operations import shift
from .operations import reduce
from .operations import reduced_positions
from .operations import fourier
from .operations import amplitudes
from .operations import essentially_periodic
from .files import read_measure
from .files import write_measure
from .files import read_amplitudes
from .files import write_amplitudes
from .generators import gen_spectrum
from .generators import cluster_fattening
from .generators import gapped_spectrum
from .generators import SPECTRUM_KINDS
