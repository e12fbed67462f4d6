"""Dense coding and teleportation over partitioned graph states"""
from .dense_coding import (
    RECEIVER_SYNDROME_TRANSPOSED,
    Message,
    Syndrome,
    DenseCodingSweep,
    receiver_syndrome_matrix,
    receiver_decode_map,
    encode_symbolic,
    encode_oracle,
    measure_syndrome,
    decode,
    all_messages,
    find_collision,
    roundtrip_exhaustive
)
from .teleportation import (
    Outcome,
    Correction,
    TeleportRecord,
    TeleportSweep,
    all_outcomes,
    correction_vectors,
    apply_correction,
    teleport_oracle,
    run_all_outcomes
)

__all__ = [
    'RECEIVER_SYNDROME_TRANSPOSED',
    'Message',
    'Syndrome',
    'DenseCodingSweep',
    'receiver_syndrome_matrix',
    'receiver_decode_map',
    'encode_symbolic',
    'encode_oracle',
    'measure_syndrome',
    'decode',
    'all_messages',
    'find_collision',
    'roundtrip_exhaustive',
    'Outcome',
    'Correction',
    'TeleportRecord',
    'TeleportSweep',
    'all_outcomes',
    'correction_vectors',
    'apply_correction',
    'teleport_oracle',
    'run_all_outcomes'
]
