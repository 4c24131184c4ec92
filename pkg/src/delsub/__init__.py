"""Binary one-deletion one-substitution ball algebra and reconstruction codes."""

from .balls import (
    apply_del_sub,
    ball_intersection,
    classify_pair,
    constrained_deletion_matches,
    decompose_intersection,
    deletion_ball,
    ds_ball,
    is_bad,
    preimage_ball,
    substitution_ball,
    witnesses,
)
from .codes import (
    CodeSpec,
    best_coset,
    contains,
    default_period,
    members,
    redundancy,
    size,
    spec,
    subcode_check,
)
from .reconstruct import (
    DecodeResult,
    ReadBundle,
    channel_sample,
    collect_reads,
    decode,
)
from .verify import (
    DEFAULT_SEED,
    VerificationReport,
    verify_bad_count,
    verify_ball_sizes,
    verify_claim_tables,
    verify_code_theorem,
    verify_constrained_deletion,
    verify_del_positions,
    verify_intersection_bounds,
    verify_reconstruction,
    verify_rll,
)
from .words import (
    common_affixes,
    complement,
    hamming,
    inversion_number,
    max_le2_periodic_length,
    psi,
    psi_inverse,
    run_count,
    runs,
    vt_syndrome,
    weight,
)

__all__ = [
    "CodeSpec",
    "DecodeResult",
    "DEFAULT_SEED",
    "ReadBundle",
    "VerificationReport",
    "apply_del_sub",
    "ball_intersection",
    "best_coset",
    "channel_sample",
    "classify_pair",
    "collect_reads",
    "common_affixes",
    "complement",
    "constrained_deletion_matches",
    "contains",
    "decode",
    "decompose_intersection",
    "default_period",
    "deletion_ball",
    "ds_ball",
    "hamming",
    "inversion_number",
    "is_bad",
    "max_le2_periodic_length",
    "members",
    "preimage_ball",
    "psi",
    "psi_inverse",
    "redundancy",
    "run_count",
    "runs",
    "size",
    "spec",
    "subcode_check",
    "substitution_ball",
    "verify_bad_count",
    "verify_ball_sizes",
    "verify_claim_tables",
    "verify_code_theorem",
    "verify_constrained_deletion",
    "verify_del_positions",
    "verify_intersection_bounds",
    "verify_reconstruction",
    "verify_rll",
    "vt_syndrome",
    "weight",
    "witnesses",
]

__version__ = "0.1.0"
