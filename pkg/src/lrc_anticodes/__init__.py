"""Optimal binary locally repairable codes from simplex codes and anticodes."""

from .anticodes import (
    Anticode,
    build_A_embedded_simplex,
    build_A_mid,
    build_A_prefix_simplex,
    build_A_s2,
    max_weight,
    prepend_zero_rows,
)
from .constructions import (
    FamilyParams,
    LinearCode,
    build_augmented_simplex,
    build_C_ms2,
    build_C_mt,
    build_simplex,
    build_subspace_code,
    farrell_delete,
    localize_parity_check,
)
from .gf2 import BitMatrix

__version__ = "0.1.0"
