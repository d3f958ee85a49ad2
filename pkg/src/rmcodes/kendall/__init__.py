"""Systematic codes under Kendall's tau metric."""

from .bch_lattice import (
    BchLatticeCodeSpec,
    c3_build,
    c3_codebook,
    c3_decode,
    c3_encode,
    c3_encode_digits,
    min_lee_weight,
)
from .field import FieldContext
from .golomb_welch import GW2CodeSpec, c2_build, c2_decode, c2_encode, gw_syndrome
from .gray_embed import (
    BinaryCodeSpec,
    GrayEmbedSpec,
    c4_build,
    c4_decode,
    c4_encode,
    c4_find_params,
    gray_map,
    gray_unmap,
    hamming_code,
    repetition_code,
)
from .greedy import c5_decode, c5_greedy
from .rho import (
    C1Diagnosis,
    RhoCodeSpec,
    c1_decode,
    c1_diagnose,
    c1_encode,
    rho,
    rho_code_build,
    rho_encode,
)

__all__ = [
    "BchLatticeCodeSpec",
    "BinaryCodeSpec",
    "C1Diagnosis",
    "FieldContext",
    "GW2CodeSpec",
    "GrayEmbedSpec",
    "RhoCodeSpec",
    "c1_decode",
    "c1_diagnose",
    "c1_encode",
    "c2_build",
    "c2_decode",
    "c2_encode",
    "c3_build",
    "c3_codebook",
    "c3_decode",
    "c3_encode",
    "c3_encode_digits",
    "c4_build",
    "c4_decode",
    "c4_encode",
    "c4_find_params",
    "c5_decode",
    "c5_greedy",
    "gray_map",
    "gray_unmap",
    "gw_syndrome",
    "hamming_code",
    "min_lee_weight",
    "repetition_code",
    "rho",
    "rho_code_build",
    "rho_encode",
]
