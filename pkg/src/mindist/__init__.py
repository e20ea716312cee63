"""Minimum-distance workbench for binary linear block codes.

Construct BCH, quadratic-residue, double-circulant, and bordered quadratic
double-circulant codes; compute exact minimum distances by exhaustive
Gray-coded enumeration; and estimate distances of larger codes with two
genetic-algorithm variants or the multiple-impulse method driven by a
soft-input ordered statistics decoder.  Every estimate carries a witness
codeword and a bound report.
"""

from .bounds import (
    BoundReport,
    krasikov_upper,
    pless_parity_adjust,
    qr_sqrt_lower,
    singleton,
)
from .codes import (
    LinearCode,
    ResidueSet,
    build_bch,
    build_dcc,
    build_qdc,
    build_qr,
    load_code,
    quadratic_residues,
    save_code,
)
from .errors import BudgetError, ConsistencyError, DimensionError, RankError
from .genetic import GaConfig, fitness, run_variant_a, run_variant_b
from .gf2 import BinPoly, BitMatrix, BitWord, GF2mField, cyclotomic_coset, systematize
from .mim import ImpulsePattern, MimConfig, apply_pattern, make_pattern
from .mim import run as run_mim
from .oracle import ExactResult, exact_enumerator, exact_min_distance
from .osd import OsdConfig, OsdDecoder, SoftWord, hard_decision, most_reliable_basis, osd_decode
from .results import DistanceEstimate, SCHEMA_VERSION, validate_result

__version__ = "0.1.0"

__all__ = [
    "BinPoly",
    "BitMatrix",
    "BitWord",
    "BoundReport",
    "BudgetError",
    "ConsistencyError",
    "DimensionError",
    "DistanceEstimate",
    "ExactResult",
    "GF2mField",
    "GaConfig",
    "ImpulsePattern",
    "LinearCode",
    "MimConfig",
    "OsdConfig",
    "OsdDecoder",
    "RankError",
    "ResidueSet",
    "SCHEMA_VERSION",
    "SoftWord",
    "apply_pattern",
    "build_bch",
    "build_dcc",
    "build_qdc",
    "build_qr",
    "cyclotomic_coset",
    "exact_enumerator",
    "exact_min_distance",
    "fitness",
    "hard_decision",
    "krasikov_upper",
    "load_code",
    "make_pattern",
    "most_reliable_basis",
    "osd_decode",
    "pless_parity_adjust",
    "qr_sqrt_lower",
    "quadratic_residues",
    "run_mim",
    "run_variant_a",
    "run_variant_b",
    "save_code",
    "singleton",
    "systematize",
    "validate_result",
]
