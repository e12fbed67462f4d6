"""Brute-force state-vector oracle"""
from .statevector import (
    Pauli,
    PauliOp,
    StateVector,
    Projection,
    check_size,
    apply_pauli,
    apply_paulis,
    apply_z_pattern,
    build_graph_state,
    graph_basis_state,
    tensor,
    random_pure_state,
    inner,
    fidelity,
    project_onto
)
from .stabilizers import (
    StabilizerGenerator,
    stabilizer_generators,
    apply_generator,
    stabilizer_eigenvalue,
    eigenvalue_bits,
    x_equals_neighbor_z,
    graph_state_projector_check,
    basis_gram_matrix
)

__all__ = [
    'Pauli',
    'PauliOp',
    'StateVector',
    'Projection',
    'check_size',
    'apply_pauli',
    'apply_paulis',
    'apply_z_pattern',
    'build_graph_state',
    'graph_basis_state',
    'tensor',
    'random_pure_state',
    'inner',
    'fidelity',
    'project_onto',
    'StabilizerGenerator',
    'stabilizer_generators',
    'apply_generator',
    'stabilizer_eigenvalue',
    'eigenvalue_bits',
    'x_equals_neighbor_z',
    'graph_state_projector_check',
    'basis_gram_matrix'
]
