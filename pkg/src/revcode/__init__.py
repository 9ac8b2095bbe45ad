"""Reversible and reversible-complementary linear codes over GF(4).

Core objects: GfVector (packed vectors), Subspace (canonical RREF bases),
ReverseSpace (the coordinate-reversal structure of GF(4)^n), and
ReversibleCode (a reversal-closed code with its isomorphism type).  On top
sit a constructive enumerator, exact closed-form counts, distance bounds,
DNA strand tooling, a brute-force oracle for small lengths, a CLI, and an
HTTP service.
"""

from .counter import (
    CountTable,
    Mode,
    count_iso_types,
    count_Lprime,
    count_Lt0,
    count_Lts,
    count_R_submodules,
    count_semisimple,
    count_table,
    count_U_direct,
    count_U_paper,
)
from .codefile import emit_code, emit_rows, parse_code
from .distance import (
    DistanceReport,
    distance_report,
    hamming_distance,
    min_distance,
    singleton_bound,
    socle_upper_bound,
)
from .dna import (
    ConstraintReport,
    constraint_report,
    decode_vector,
    encode_strand,
    export_dna,
    wc_complement,
)
from .enumerator import (
    enumerate_semisimple,
    enumerate_type,
    generator_matrix,
    socle_extensions,
)
from .errors import (
    BadSocle,
    BadSymbol,
    HatDegenerate,
    InexactDivision,
    LengthMismatch,
    NotInvariant,
    OutOfRange,
    ParseError,
    RevcodeError,
    TooLarge,
    ZeroCode,
    ZeroInverse,
)
from .gf4 import GfVector
from .oracle import OracleRecord, brute_force_reversible, oracle_count_table
from .reverse import (
    ReverseSpace,
    ReversibleCode,
    hat,
    is_self_orthogonal,
    reverse_map,
    t_map,
)
from .subspace import Subspace, enumerate_subspaces, gaussian_binomial

__version__ = "0.1.0"

__all__ = [
    "BadSocle",
    "BadSymbol",
    "ConstraintReport",
    "CountTable",
    "DistanceReport",
    "GfVector",
    "HatDegenerate",
    "InexactDivision",
    "LengthMismatch",
    "Mode",
    "NotInvariant",
    "OracleRecord",
    "OutOfRange",
    "ParseError",
    "RevcodeError",
    "ReverseSpace",
    "ReversibleCode",
    "Subspace",
    "TooLarge",
    "ZeroCode",
    "ZeroInverse",
    "brute_force_reversible",
    "constraint_report",
    "count_iso_types",
    "count_Lprime",
    "count_Lt0",
    "count_Lts",
    "count_R_submodules",
    "count_semisimple",
    "count_table",
    "count_U_direct",
    "count_U_paper",
    "decode_vector",
    "distance_report",
    "emit_code",
    "emit_rows",
    "encode_strand",
    "enumerate_semisimple",
    "enumerate_subspaces",
    "enumerate_type",
    "export_dna",
    "gaussian_binomial",
    "generator_matrix",
    "hamming_distance",
    "hat",
    "is_self_orthogonal",
    "min_distance",
    "oracle_count_table",
    "parse_code",
    "reverse_map",
    "singleton_bound",
    "socle_extensions",
    "socle_upper_bound",
    "t_map",
    "wc_complement",
]
