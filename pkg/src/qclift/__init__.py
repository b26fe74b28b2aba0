"""Shorter QC-LDPC codes from one base exponent matrix.

Floor, modulo and floor-scale-modulo lifting, short-cycle census and girth of
the lifted codes, a per-size search for the scale value, and exact checks of
the probabilities behind the method.
"""

__version__ = "0.1.0"

from ._kernels import BACKEND
from .cycles import ChainTable, CycleCensus, ExponentChain, census, enumerate_chains, graph_girth_oracle
from .exponent import (
    BinaryParityMatrix,
    ExponentFormatError,
    ExponentMatrix,
    MotherMatrix,
    alternating_sum_is_cycle,
    expand,
    format_exponent_matrix,
    mother_matrix,
    parse_exponent_matrix,
    read_exponent_matrix,
    write_alist,
)
from .lifting import LiftMethod, LiftSpec, ScaleFamily, admissible_scales, floor_lift, fsm_lift, lift, modulo_lift
from .search import LiftSchedule, build_schedule, search_optimal_r

__all__ = [
    "BACKEND",
    "BinaryParityMatrix",
    "ChainTable",
    "CycleCensus",
    "ExponentChain",
    "ExponentFormatError",
    "ExponentMatrix",
    "LiftMethod",
    "LiftSchedule",
    "LiftSpec",
    "MotherMatrix",
    "ScaleFamily",
    "admissible_scales",
    "alternating_sum_is_cycle",
    "build_schedule",
    "census",
    "enumerate_chains",
    "expand",
    "floor_lift",
    "format_exponent_matrix",
    "fsm_lift",
    "graph_girth_oracle",
    "lift",
    "modulo_lift",
    "mother_matrix",
    "parse_exponent_matrix",
    "read_exponent_matrix",
    "search_optimal_r",
    "write_alist",
]
