"""
Defines constants to be used throughout the application
"""
import math
import re

TWO_PI = 2.0 * math.pi
"""The period of the reduced spectrum K = [-π, π)"""

FOUR_PI = 4.0 * math.pi
"""The period that decides the parity split of half integer transforms"""

TRUE_VALUES = frozenset({"1", "t", "true", "y", "yes", "on"})
"""Lower case flag values that switch an environment option on"""

INTEGER_PATTERN = re.compile(r"^-?\d+$")
"""A regex pattern that matches on a string representing an integer"""

FLOATING_POINT_PATTERN = re.compile(r"^-?\d+\.\d*([eE][-+]?\d+)?$")
"""A regex pattern that matches on a string representing a floating point value"""

MEASURE_CSV_HEADER = ("position", "w_re", "w_im")
"""Column names of a measure written as CSV"""

REPORT_CSV_HEADER = ("n", "alpha_re", "alpha_im", "p_n")
"""Column names of an anticipation report written as CSV"""

MODEL_CSV_HEADER = ("n", "alpha_re", "alpha_im", "p_n", "p_n_predicted")
"""Column names of a model measure report written as CSV"""

INVERSION_CSV_HEADER = ("kappa", "nu_re", "nu_im", "F_re", "F_im")
"""Column names of sampled cumulative functions written as CSV"""

CONVERGENCE_CSV_HEADER = ("N", "value_re", "value_im", "abs_err_vs_target")
"""Column names of a kernel convergence table written as CSV"""

DEFAULT_MOMENT_ORDERS = (1.0, 2.0)
"""The moments ⟨|n|^r⟩ computed for every anticipation report"""

AMPLITUDE_CSV_HEADER = ("n", "beta_re", "beta_im")
"""Column names of an amplitude sequence written as CSV"""

PEAK_CSV_HEADER = ("kappa", "mass", "height")
"""Column names of located atoms written as CSV"""

GROWTH_CSV_HEADER = ("L", "mean_lookahead", "log_L")
"""Column names of the look-ahead growth table"""
