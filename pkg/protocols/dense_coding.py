"""Deterministic many-to-one dense coding.

Sender ``i`` applies X_i^{a_i} Z_i^{b_i} to its half of |G⟩ and forwards
the qubit. The receiver reads the generator eigenvalues, the syndrome
k = (b′, a′), and inverts the linear map back to (a, b).
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

from core.config import get_config
from core.errors import DimensionError, NotViableError, OracleError, SingularError, SizeLimitError
from graphs import PartitionedGraph, SubgraphMatrices, sub_matrices
from linalg import BitMatrix, BitVector, invert, kernel_vector, matvec, rank, transpose
from oracle import (
    Pauli,
    PauliOp,
    StateVector,
    apply_paulis,
    build_graph_state,
    check_size,
    eigenvalue_bits,
    stabilizer_generators,
)

logger = logging.getLogger(__name__)

# X on sender l flips g_{n+i} exactly when (l, n+i) ∈ E_SR, so
# a′_i = ⊕_l (Γ_T)_{l,i} a_l, i.e. a′ = Γ_Tᵀ·a. Pinned by the oracle test on
# the 4-qubit path, whose Γ_T is not symmetric.
RECEIVER_SYNDROME_TRANSPOSED = True


def receiver_syndrome_matrix(gamma_t: BitMatrix) -> BitMatrix:
    """The matrix taking a to a′"""
    return transpose(gamma_t) if RECEIVER_SYNDROME_TRANSPOSED else gamma_t


@dataclass(frozen=True)
class Message:
    a: BitVector
    b: BitVector

    def __post_init__(self):
        if len(self.a) != len(self.b):
            raise DimensionError(f"message halves differ in length: {len(self.a)} vs {len(self.b)}")

    @property
    def n(self) -> int:
        return len(self.a)

    @classmethod
    def from_strings(cls, a: str, b: str) -> "Message":
        return cls(BitVector.from_string(a), BitVector.from_string(b))

    @classmethod
    def from_int(cls, value: int, n: int) -> "Message":
        """a in the high n bits, b in the low n bits"""
        bits = BitVector.from_int(value, 2 * n)
        return cls(bits.head(n), bits.tail(n))

    def to_int(self) -> int:
        return self.a.concat(self.b).to_int()

    def __xor__(self, other: "Message") -> "Message":
        return Message(self.a ^ other.a, self.b ^ other.b)

    def __str__(self) -> str:
        return f"{self.a.to_string()},{self.b.to_string()}"


@dataclass(frozen=True)
class Syndrome:
    b_prime: BitVector
    a_prime: BitVector

    def __post_init__(self):
        if len(self.a_prime) != len(self.b_prime):
            raise DimensionError("syndrome halves differ in length")

    @property
    def outcome(self) -> BitVector:
        """k = (b′, a′)"""
        return self.b_prime.concat(self.a_prime)

    @classmethod
    def from_outcome(cls, k: BitVector) -> "Syndrome":
        n = len(k) // 2
        return cls(k.head(n), k.tail(n))

    def __xor__(self, other: "Syndrome") -> "Syndrome":
        return Syndrome(self.b_prime ^ other.b_prime, self.a_prime ^ other.a_prime)

    def __str__(self) -> str:
        return f"{self.b_prime.to_string()},{self.a_prime.to_string()}"


def _check_message(g: PartitionedGraph, m: Message):
    if m.n != g.n:
        raise DimensionError(f"message carries {m.n} pairs of bits, graph has {g.n} senders")


def _encode(mats: SubgraphMatrices, m: Message) -> Syndrome:
    b_prime = m.b ^ matvec(mats.gamma_s, m.a)
    a_prime = matvec(receiver_syndrome_matrix(mats.gamma_t), m.a)
    return Syndrome(b_prime, a_prime)


def encode_symbolic(g: PartitionedGraph, m: Message) -> Syndrome:
    """Syndrome by anticommutation counting: b′ = b ⊕ Γ_S·a, a′ = Γ_Tᵀ·a"""
    _check_message(g, m)
    return _encode(sub_matrices(g), m)


def encode_oracle(g: PartitionedGraph, m: Message) -> StateVector:
    """∏_{i∈V_S} X_i^{a_i} Z_i^{b_i} |G⟩ on amplitudes"""
    _check_message(g, m)
    check_size(g.size)
    ops: List[PauliOp] = []
    for i in g.senders:
        if m.b.bit(i):
            ops.append(PauliOp(Pauli.Z, i - 1))
        if m.a.bit(i):
            ops.append(PauliOp(Pauli.X, i - 1))
    return apply_paulis(build_graph_state(g), ops)


def measure_syndrome(g: PartitionedGraph, state: StateVector) -> Syndrome:
    """Read every generator eigenvalue off the state"""
    bits = eigenvalue_bits(state, stabilizer_generators(g))
    if bits is None:
        raise OracleError("state is not a joint eigenstate of the graph's generators")
    return Syndrome.from_outcome(bits)


def receiver_decode_map(mats: SubgraphMatrices, n: int) -> BitMatrix:
    """(Γ_Tᵀ)⁻¹ = (Γ_T⁻¹)ᵀ, the map from a′ back to a"""
    try:
        return invert(receiver_syndrome_matrix(mats.gamma_t))
    except SingularError as e:
        raise NotViableError(e.rank, n) from e


def decode(g: PartitionedGraph, s: Syndrome) -> Message:
    """a = (Γ_Tᵀ)⁻¹·a′, then b = b′ ⊕ Γ_S·a"""
    if len(s.a_prime) != g.n:
        raise DimensionError(f"syndrome has {len(s.a_prime)} bits per half, graph has {g.n} senders")
    mats = sub_matrices(g)
    a = matvec(receiver_decode_map(mats, g.n), s.a_prime)
    b = s.b_prime ^ matvec(mats.gamma_s, a)
    return Message(a, b)


def all_messages(n: int) -> Iterator[Message]:
    for value in range(1 << (2 * n)):
        yield Message.from_int(value, n)


def find_collision(g: PartitionedGraph) -> Optional[Tuple[Message, Message]]:
    """Two distinct messages with the same syndrome, or None on viable graphs"""
    mats = sub_matrices(g)
    x = kernel_vector(receiver_syndrome_matrix(mats.gamma_t))
    if x is None:
        return None
    zero = BitVector.zeros(g.n)
    # a = x leaves a′ = 0; b = Γ_S·x cancels the b′ shift
    return Message(zero, zero), Message(x, matvec(mats.gamma_s, x))


@dataclass
class DenseCodingSweep:
    n: int
    total: int
    decoded_ok: int
    bijective: bool
    distinct_syndromes: int
    collision: Optional[Tuple[Message, Message]] = None
    oracle_checked: int = 0
    oracle_agreements: int = 0
    mismatches: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, object]:
        return {
            "total": self.total,
            "decoded_ok": self.decoded_ok,
            "bijective": self.bijective,
            "distinct_syndromes": self.distinct_syndromes,
            "collision": [str(m) for m in self.collision] if self.collision else None,
            "oracle_checked": self.oracle_checked,
            "oracle_agreements": self.oracle_agreements,
        }


def roundtrip_exhaustive(g: PartitionedGraph, oracle: bool = False) -> DenseCodingSweep:
    """Encode and decode all 4ⁿ messages; optionally confirm each syndrome on amplitudes"""
    cfg = get_config()
    if g.n > cfg.DENSE_SYMBOLIC_MAX_N:
        raise SizeLimitError(g.size, 2 * cfg.DENSE_SYMBOLIC_MAX_N)
    if oracle and g.n > cfg.DENSE_ORACLE_MAX_N:
        raise SizeLimitError(g.size, 2 * cfg.DENSE_ORACLE_MAX_N)

    mats = sub_matrices(g)
    try:
        decode_map = receiver_decode_map(mats, g.n)
    except NotViableError:
        decode_map = None
        logger.info("rank(Γ_T)=%d/%d, decoding skipped", rank(mats.gamma_t), g.n)

    seen: Dict[Syndrome, Message] = {}
    collision = None
    decoded_ok = 0
    checked = agreements = 0
    mismatches = []
    for m in all_messages(g.n):
        s = _encode(mats, m)
        if s in seen:
            collision = collision or (seen[s], m)
        else:
            seen[s] = m
        if decode_map is not None:
            a = matvec(decode_map, s.a_prime)
            if Message(a, s.b_prime ^ matvec(mats.gamma_s, a)) == m:
                decoded_ok += 1
        if oracle:
            checked += 1
            if measure_syndrome(g, encode_oracle(g, m)) == s:
                agreements += 1
            else:
                mismatches.append(str(m))
                logger.warning("oracle syndrome disagrees for message %s", m)

    total = 1 << (2 * g.n)
    return DenseCodingSweep(
        n=g.n,
        total=total,
        decoded_ok=decoded_ok,
        bijective=len(seen) == total,
        distinct_syndromes=len(seen),
        collision=collision,
        oracle_checked=checked,
        oracle_agreements=agreements,
        mismatches=mismatches,
    )
