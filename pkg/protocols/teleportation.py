"""Faithful one-to-many teleportation.

Alice holds the unknown qubits 1′..n′ and the receiver half n+1..2n of |G⟩;
receiver ``i`` holds qubit ``i``. She measures 1′..n′, n+1..2n in the basis
Z^k|G′⟩ of the mirror graph and announces k. Receiver ``i`` then applies
Z_i^{c_x,i} X_i^{c_z,i} with

    c_z = (Γ_T⁻¹)ᵀ·k_>        c_x = k_< ⊕ Γ_S·c_z

which is the expansion of c_x = k_< ⊕ (Γ_T⁻¹Γ_S)ᵀ·k_> for symmetric Γ_S.

Oracle site layout: receivers' qubits 1..n on sites 0..n-1, Alice's graph
qubits n+1..2n on sites n..2n-1, unknown qubit i′ on site 2n+i-1.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from core.config import get_config
from core.errors import DimensionError, OracleError
from graphs import PartitionedGraph, mirror_pair, sub_matrices
from linalg import BitVector, matvec
from oracle import (
    Pauli,
    PauliOp,
    StateVector,
    apply_paulis,
    apply_z_pattern,
    build_graph_state,
    check_size,
    fidelity,
    project_onto,
    tensor,
)
from .dense_coding import receiver_decode_map

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Outcome:
    k: BitVector

    def __post_init__(self):
        if len(self.k) == 0 or len(self.k) % 2:
            raise DimensionError(f"outcome needs 2n bits, got {len(self.k)}")

    @property
    def n(self) -> int:
        return len(self.k) // 2

    @property
    def k_lower(self) -> BitVector:
        return self.k.head(self.n)

    @property
    def k_upper(self) -> BitVector:
        return self.k.tail(self.n)

    @classmethod
    def from_int(cls, value: int, n: int) -> "Outcome":
        return cls(BitVector.from_int(value, 2 * n))

    def __xor__(self, other: "Outcome") -> "Outcome":
        return Outcome(self.k ^ other.k)


@dataclass(frozen=True)
class Correction:
    c_x: BitVector
    c_z: BitVector

    def ops(self) -> List[PauliOp]:
        """Z_i^{c_x,i} X_i^{c_z,i} on site i-1: X acts first"""
        ops = []
        for i in range(1, len(self.c_x) + 1):
            if self.c_z.bit(i):
                ops.append(PauliOp(Pauli.X, i - 1))
            if self.c_x.bit(i):
                ops.append(PauliOp(Pauli.Z, i - 1))
        return ops

    def __xor__(self, other: "Correction") -> "Correction":
        return Correction(self.c_x ^ other.c_x, self.c_z ^ other.c_z)


def all_outcomes(n: int) -> List[Outcome]:
    return [Outcome.from_int(value, n) for value in range(1 << (2 * n))]


def correction_vectors(g: PartitionedGraph, o: Outcome) -> Correction:
    """Corrections for announced outcome ``o``; NotViableError when Γ_T is singular"""
    if o.n != g.n:
        raise DimensionError(f"outcome is for {o.n} pairs, graph has {g.n}")
    mats = sub_matrices(g)
    c_z = matvec(receiver_decode_map(mats, g.n), o.k_upper)
    c_x = o.k_lower ^ matvec(mats.gamma_s, c_z)
    return Correction(c_x, c_z)


def apply_correction(state: StateVector, correction: Correction) -> StateVector:
    return apply_paulis(state, correction.ops())


@dataclass
class TeleportRecord:
    outcome: Outcome
    correction: Correction
    probability: float
    post: Optional[StateVector]
    fidelity: Optional[float]

    @property
    def zero_probability(self) -> bool:
        return self.post is None


@dataclass
class TeleportSweep:
    n: int
    min_fidelity: float
    prob_sum: float
    records: List[TeleportRecord] = field(default_factory=list)
    corrected: bool = True

    # one 2n-qubit graph state and a 2n-bit announcement per run
    @property
    def graph_states_consumed(self) -> int:
        return 1

    @property
    def classical_bits(self) -> int:
        return 2 * self.n

    @property
    def probability_spread(self) -> float:
        probs = [r.probability for r in self.records]
        return max(probs) - min(probs)

    def to_dict(self) -> Dict[str, object]:
        return {
            "outcomes": len(self.records),
            "min_fidelity": self.min_fidelity,
            "prob_sum": self.prob_sum,
            "probability_spread": self.probability_spread,
            "corrected": self.corrected,
            "graph_states_consumed": self.graph_states_consumed,
            "classical_bits": self.classical_bits,
        }


class _Teleporter:
    """Everything an outcome sweep shares: joint input state, mirror graph state, site layout"""

    def __init__(self, g: PartitionedGraph, input_state: StateVector):
        n = g.n
        check_size(3 * n)
        if input_state.num_qubits != n:
            raise OracleError(f"input has {input_state.num_qubits} qubits, graph teleports {n}")
        self.graph = g
        self.input_state = input_state
        self.joint = tensor(build_graph_state(g), input_state)
        # |G′⟩ on 1′..n′, n+1..2n has the same internal structure as |G⟩
        self.mirror_state = build_graph_state(mirror_pair(g).graph)
        self.sites = list(range(2 * n, 3 * n)) + list(range(n, 2 * n))

    def run(self, outcome: Outcome, correct: bool = True) -> TeleportRecord:
        correction = correction_vectors(self.graph, outcome)
        basis = apply_z_pattern(self.mirror_state, [v - 1 for v in outcome.k.support()])
        projection = project_onto(self.joint, self.sites, basis)
        if projection.zero_outcome:
            logger.warning("outcome %s has zero probability", outcome.k.to_string())
            return TeleportRecord(outcome, correction, projection.probability, None, None)
        post = projection.residual
        if correct:
            post = apply_correction(post, correction)
        return TeleportRecord(outcome, correction, projection.probability, post, fidelity(post, self.input_state))


def teleport_oracle(
    g: PartitionedGraph,
    input_state: StateVector,
    o: Outcome,
    apply_correction: bool = True,
) -> TeleportRecord:
    """Simulate one announced outcome end to end"""
    # fails with NotViableError before any state is built
    correction_vectors(g, o)
    return _Teleporter(g, input_state).run(o, apply_correction)


def run_all_outcomes(
    g: PartitionedGraph,
    input_state: StateVector,
    apply_correction: bool = True,
    max_workers: Optional[int] = None,
) -> TeleportSweep:
    """Sweep all 4ⁿ outcomes; records are kept in outcome order"""
    correction_vectors(g, Outcome(BitVector.zeros(g.size)))
    teleporter = _Teleporter(g, input_state)
    outcomes = all_outcomes(g.n)
    workers = max_workers if max_workers is not None else get_config().SWEEP_WORKERS

    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(lambda o: teleporter.run(o, apply_correction), outcomes))
    else:
        records = [teleporter.run(o, apply_correction) for o in outcomes]

    fidelities = [r.fidelity for r in records if r.fidelity is not None]
    sweep = TeleportSweep(
        n=g.n,
        min_fidelity=min(fidelities) if fidelities else float("nan"),
        prob_sum=sum(r.probability for r in records),
        records=records,
        corrected=apply_correction,
    )
    logger.debug("swept %d outcomes: min fidelity %.12f", len(records), sweep.min_fidelity)
    return sweep
