"""
Fourier inversion of amplitude sequences into cumulative functions
"""
from .series import SMOOTHINGS
from .series import InversionResult
from .series import uniform_grid
from .series import tail_bound
from .series import series_terms
from .series import evaluate_series
from .series import reconstruct_nu
from .series import reconstruct_F
from .oracle import cumulative_oracle
from .oracle import integrated_error
from .oracle import PointSpectrumReport
from .oracle import point_spectrum_consistency
