"""Dense state-vector oracle.

Amplitudes are indexed with qubit site 0 as the most significant bit, and
graph vertex ``v`` lives on site ``v - 1``. States are immutable; every
operation returns a fresh StateVector. Global phases are never compared
directly, use :func:`fidelity` instead.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Sequence

import numpy as np

from core.config import get_config
from core.errors import OracleError, SiteError, SizeLimitError
from graphs import PartitionedGraph
from linalg import BitVector

logger = logging.getLogger(__name__)


class Pauli(Enum):
    X = "X"
    Y = "Y"
    Z = "Z"


@dataclass(frozen=True)
class PauliOp:
    axis: Pauli
    site: int


def check_size(num_qubits: int, limit: Optional[int] = None):
    limit = get_config().MAX_QUBITS if limit is None else limit
    if num_qubits > limit:
        raise SizeLimitError(num_qubits, limit)


def _site_bits(num_qubits: int, site: int) -> np.ndarray:
    index = np.arange(1 << num_qubits)
    return (index >> (num_qubits - 1 - site)) & 1


def _check_site(num_qubits: int, site: int):
    if not 0 <= site < num_qubits:
        raise SiteError(f"site {site} outside a {num_qubits}-qubit state")


def _pauli_array(amps: np.ndarray, axis: Pauli, site: int, num_qubits: int) -> np.ndarray:
    _check_site(num_qubits, site)
    bits = _site_bits(num_qubits, site)
    if axis is Pauli.Z:
        return np.where(bits == 1, -amps, amps)
    flipped = amps[np.arange(amps.shape[0]) ^ (1 << (num_qubits - 1 - site))]
    if axis is Pauli.X:
        return flipped
    # Y = [[0, -i], [i, 0]]
    return np.where(bits == 1, 1j * flipped, -1j * flipped)


def _z_pattern_array(amps: np.ndarray, sites: Iterable[int], num_qubits: int) -> np.ndarray:
    parity = np.zeros(amps.shape[0], dtype=np.int64)
    for site in sites:
        _check_site(num_qubits, site)
        parity ^= _site_bits(num_qubits, site)
    return np.where(parity == 1, -amps, amps)


class StateVector:
    """Normalized pure state on at most MAX_QUBITS qubits"""

    __slots__ = ("_amps",)

    def __init__(self, amplitudes, normalize: bool = False):
        amps = np.array(amplitudes, dtype=complex).reshape(-1)
        size = amps.shape[0]
        num_qubits = size.bit_length() - 1
        if size == 0 or 1 << num_qubits != size:
            raise OracleError(f"{size} amplitudes is not a power of two")
        check_size(num_qubits)
        norm = np.linalg.norm(amps)
        if normalize:
            if norm == 0:
                raise OracleError("cannot normalize the zero vector")
            amps = amps / norm
        elif abs(norm * norm - 1.0) > get_config().NORM_TOLERANCE:
            raise OracleError(f"state is not normalized (norm^2 = {norm * norm:.15f})")
        amps.setflags(write=False)
        self._amps = amps

    @classmethod
    def basis(cls, num_qubits: int, index: int = 0) -> "StateVector":
        amps = np.zeros(1 << num_qubits, dtype=complex)
        amps[index] = 1.0
        return cls(amps)

    @classmethod
    def from_bits(cls, bits: str) -> "StateVector":
        return cls.basis(len(bits), int(bits, 2) if bits else 0)

    @property
    def amplitudes(self) -> np.ndarray:
        return self._amps

    @property
    def num_qubits(self) -> int:
        return self._amps.shape[0].bit_length() - 1

    def __repr__(self) -> str:
        return f"StateVector(num_qubits={self.num_qubits})"


def apply_pauli(s: StateVector, p: PauliOp) -> StateVector:
    return StateVector(_pauli_array(s.amplitudes, p.axis, p.site, s.num_qubits))


def apply_paulis(s: StateVector, ops: Sequence[PauliOp]) -> StateVector:
    """Apply ``ops`` in sequence, first element first"""
    amps = s.amplitudes
    for op in ops:
        amps = _pauli_array(amps, op.axis, op.site, s.num_qubits)
    return StateVector(amps)


def apply_z_pattern(s: StateVector, sites: Iterable[int]) -> StateVector:
    """∏ Z over ``sites``"""
    return StateVector(_z_pattern_array(s.amplitudes, sites, s.num_qubits))


def build_graph_state(g: PartitionedGraph) -> StateVector:
    """|G⟩ = ∏_{(u,v)∈E} CZ_uv |+⟩^{⊗2n}"""
    num_qubits = g.size
    check_size(num_qubits)
    parity = np.zeros(1 << num_qubits, dtype=np.int64)
    for u, v in g.edges:
        parity ^= _site_bits(num_qubits, u - 1) & _site_bits(num_qubits, v - 1)
    amps = np.where(parity == 1, -1.0, 1.0) / np.sqrt(1 << num_qubits)
    return StateVector(amps)


def graph_basis_state(g: PartitionedGraph, k: BitVector) -> StateVector:
    """|k⟩ = ∏ Z_i^{k_i} |G⟩"""
    if len(k) != g.size:
        raise OracleError(f"outcome has {len(k)} bits, graph has {g.size} vertices")
    return apply_z_pattern(build_graph_state(g), [v - 1 for v in k.support()])


def tensor(a: StateVector, b: StateVector) -> StateVector:
    """a ⊗ b with the qubits of ``a`` first"""
    check_size(a.num_qubits + b.num_qubits)
    return StateVector(np.kron(a.amplitudes, b.amplitudes))


def random_pure_state(num_qubits: int, rng: np.random.Generator) -> StateVector:
    """Complex Gaussian amplitudes, normalized"""
    check_size(num_qubits)
    size = 1 << num_qubits
    amps = rng.normal(size=size) + 1j * rng.normal(size=size)
    return StateVector(amps, normalize=True)


def inner(a: StateVector, b: StateVector) -> complex:
    if a.num_qubits != b.num_qubits:
        raise OracleError(f"qubit counts differ: {a.num_qubits} vs {b.num_qubits}")
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def fidelity(a: StateVector, b: StateVector) -> float:
    """|⟨a|b⟩|², insensitive to global phase"""
    return min(1.0, abs(inner(a, b)) ** 2)


@dataclass(frozen=True)
class Projection:
    probability: float
    residual: Optional[StateVector]

    @property
    def zero_outcome(self) -> bool:
        return self.residual is None


def project_onto(s: StateVector, sites: Sequence[int], basis_state: StateVector) -> Projection:
    """Project ``sites`` (in the order given) onto ``basis_state``.

    The residual lives on the remaining sites in ascending order and is
    renormalized; it is None when the probability is numerically zero.
    """
    sites = list(sites)
    num_qubits = s.num_qubits
    if len(set(sites)) != len(sites):
        raise SiteError(f"repeated sites in {sites}")
    for site in sites:
        _check_site(num_qubits, site)
    if basis_state.num_qubits != len(sites):
        raise OracleError(f"basis state has {basis_state.num_qubits} qubits for {len(sites)} sites")

    rest = [q for q in range(num_qubits) if q not in sites]
    grid = s.amplitudes.reshape([2] * num_qubits).transpose(sites + rest)
    grid = grid.reshape(1 << len(sites), 1 << len(rest))
    projected = basis_state.amplitudes.conj() @ grid
    probability = float(np.vdot(projected, projected).real)
    if probability <= get_config().ZERO_PROBABILITY:
        logger.debug("zero-probability projection on sites %s", sites)
        return Projection(probability, None)
    return Projection(probability, StateVector(projected / np.sqrt(probability)))
