# stabilizers.py - Graph-state stabilizer generators checked on amplitudes
import logging
from dataclasses import dataclass
from itertools import product
from typing import FrozenSet, List, Optional, Sequence

import numpy as np

from core.config import get_config
from core.errors import OracleError
from graphs import PartitionedGraph
from linalg import BitVector
from .statevector import (
    Pauli,
    StateVector,
    _pauli_array,
    _z_pattern_array,
    build_graph_state,
    check_size,
    graph_basis_state,
    random_pure_state,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StabilizerGenerator:
    """sign · X_{x_site} ∏_{j ∈ z_sites} Z_j over 1-based vertices"""

    x_site: int
    z_sites: FrozenSet[int]
    sign: int = 1

    def __post_init__(self):
        if self.x_site in self.z_sites:
            raise OracleError(f"generator acts with both X and Z on vertex {self.x_site}")
        if self.sign not in (1, -1):
            raise OracleError(f"generator sign must be ±1, got {self.sign}")

    def label(self, size: int) -> str:
        letters = []
        for v in range(1, size + 1):
            letters.append("X" if v == self.x_site else "Z" if v in self.z_sites else "I")
        return ("+" if self.sign == 1 else "-") + "".join(letters)

    def flipped(self) -> "StabilizerGenerator":
        return StabilizerGenerator(self.x_site, self.z_sites, -self.sign)


def stabilizer_generators(g: PartitionedGraph) -> List[StabilizerGenerator]:
    """g_i = X_i ∏_{j∈N(i)} Z_j for every vertex"""
    return [StabilizerGenerator(v, g.neighbors(v)) for v in g.vertices]


def _generator_array(amps: np.ndarray, gen: StabilizerGenerator, num_qubits: int) -> np.ndarray:
    # X_i commutes with the Z's since i is not among the z_sites
    out = _z_pattern_array(amps, [v - 1 for v in gen.z_sites], num_qubits)
    out = _pauli_array(out, Pauli.X, gen.x_site - 1, num_qubits)
    return out if gen.sign == 1 else -out


def apply_generator(s: StateVector, gen: StabilizerGenerator) -> StateVector:
    return StateVector(_generator_array(s.amplitudes, gen, s.num_qubits))


def stabilizer_eigenvalue(s: StateVector, gen: StabilizerGenerator) -> Optional[int]:
    """+1 or -1 when gen·s = λ·s within tolerance; None if s is not an eigenstate"""
    tol = get_config().STATE_TOLERANCE
    out = _generator_array(s.amplitudes, gen, s.num_qubits)
    if np.allclose(out, s.amplitudes, rtol=0.0, atol=tol):
        return 1
    if np.allclose(out, -s.amplitudes, rtol=0.0, atol=tol):
        return -1
    return None


def eigenvalue_bits(s: StateVector, gens: Sequence[StabilizerGenerator]) -> Optional[BitVector]:
    """Eigenvalues (-1)^{k_i} of every generator as the bit vector k"""
    bits = []
    for gen in gens:
        value = stabilizer_eigenvalue(s, gen)
        if value is None:
            return None
        bits.append(0 if value == 1 else 1)
    return BitVector(bits)


def x_equals_neighbor_z(g: PartitionedGraph, v: int) -> bool:
    """X_v|G⟩ = ∏_{j∈N(v)} Z_j|G⟩ exactly on amplitudes"""
    state = build_graph_state(g)
    lhs = _pauli_array(state.amplitudes, Pauli.X, v - 1, g.size)
    rhs = _z_pattern_array(state.amplitudes, [w - 1 for w in g.neighbors(v)], g.size)
    return np.allclose(lhs, rhs, rtol=0.0, atol=get_config().STATE_TOLERANCE)


def graph_state_projector_check(
    g: PartitionedGraph,
    generators: Optional[Sequence[StabilizerGenerator]] = None,
    rng: Optional[np.random.Generator] = None,
) -> bool:
    """Compare 2^{-2n} ∑_j ∏_i g_i^{j_i} with |G⟩⟨G| on a random state"""
    cfg = get_config()
    num_qubits = g.size
    check_size(num_qubits, cfg.PROJECTOR_MAX_QUBITS)
    gens = list(generators) if generators is not None else stabilizer_generators(g)
    if len(gens) != num_qubits:
        raise OracleError(f"expected {num_qubits} generators, got {len(gens)}")
    rng = rng if rng is not None else np.random.default_rng(cfg.DEFAULT_SEED)

    psi = random_pure_state(num_qubits, rng).amplitudes
    total = np.zeros_like(psi)
    for exponents in product((0, 1), repeat=num_qubits):
        term = psi
        # the rightmost factor of g_1^{j_1} ... g_2n^{j_2n} acts first
        for gen, power in reversed(list(zip(gens, exponents))):
            if power:
                term = _generator_array(term, gen, num_qubits)
        total = total + term
    total = total / (1 << num_qubits)

    graph_state = build_graph_state(g).amplitudes
    expected = graph_state * np.vdot(graph_state, psi)
    agrees = np.allclose(total, expected, rtol=0.0, atol=cfg.STATE_TOLERANCE)
    if not agrees:
        logger.debug("stabilizer sum disagrees with |G><G| for %d-vertex graph", num_qubits)
    return agrees


def basis_gram_matrix(g: PartitionedGraph) -> np.ndarray:
    """Inner products ⟨k|k′⟩ over all 2^{2n} graph basis states"""
    check_size(g.size, get_config().PROJECTOR_MAX_QUBITS)
    columns = [
        graph_basis_state(g, BitVector.from_int(value, g.size)).amplitudes
        for value in range(1 << g.size)
    ]
    basis = np.column_stack(columns)
    return basis.conj().T @ basis
