"""GF(2) linear algebra"""
from .gf2 import (
    BitVector,
    BitMatrix,
    identity,
    zeros,
    rank,
    invert,
    solve,
    kernel_vector,
    matvec,
    matmul,
    add,
    transpose,
    dot,
    lower_triangle,
    upper_triangle,
)

__all__ = [
    'BitVector',
    'BitMatrix',
    'identity',
    'zeros',
    'rank',
    'invert',
    'solve',
    'kernel_vector',
    'matvec',
    'matmul',
    'add',
    'transpose',
    'dot',
    'lower_triangle',
    'upper_triangle'
]
