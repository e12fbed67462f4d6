"""Exact linear algebra over GF(2).

Vectors and matrices wrap read-only ``numpy.uint8`` arrays; addition is XOR
and products are taken modulo 2. Elimination scans columns left to right and
pivots on the first available 1, so every result is reproducible.

Indexing with ``[]`` is 0-based like numpy. The ``bit``/``entry`` accessors
are 1-based to match vertex labels.
"""
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from core.errors import DimensionError, GF2Error, NonSquareError, SingularError


def _as_bits(values, ndim: int) -> np.ndarray:
    raw = np.asarray(values)
    if raw.size and not np.isin(raw, (0, 1)).all():
        raise GF2Error("entries must be 0 or 1")
    arr = raw.astype(np.uint8)
    if ndim == 1:
        arr = arr.reshape(-1)
    elif arr.ndim != 2:
        raise DimensionError(f"expected a 2-D array, got {arr.ndim}-D")
    arr.setflags(write=False)
    return arr


class BitVector:
    """Immutable vector over GF(2)"""

    __slots__ = ("_bits",)

    def __init__(self, bits: Iterable[int]):
        self._bits = _as_bits(list(bits) if not isinstance(bits, np.ndarray) else bits, 1)

    @classmethod
    def zeros(cls, length: int) -> "BitVector":
        return cls(np.zeros(length, dtype=np.uint8))

    @classmethod
    def from_string(cls, text: str) -> "BitVector":
        text = text.strip()
        if any(ch not in "01" for ch in text):
            raise GF2Error(f"not a bit string: {text!r}")
        return cls([int(ch) for ch in text])

    @classmethod
    def from_int(cls, value: int, length: int) -> "BitVector":
        """Bits of ``value`` with the most significant bit first"""
        if value < 0 or value >= 1 << length:
            raise GF2Error(f"{value} does not fit in {length} bits")
        return cls([(value >> (length - 1 - i)) & 1 for i in range(length)])

    @property
    def array(self) -> np.ndarray:
        return self._bits

    def bit(self, position: int) -> int:
        return int(self._bits[position - 1])

    def to_string(self) -> str:
        return "".join(str(int(b)) for b in self._bits)

    def to_int(self) -> int:
        value = 0
        for b in self._bits:
            value = (value << 1) | int(b)
        return value

    def weight(self) -> int:
        return int(self._bits.sum())

    def head(self, count: int) -> "BitVector":
        return BitVector(self._bits[:count])

    def tail(self, count: int) -> "BitVector":
        return BitVector(self._bits[len(self) - count:])

    def concat(self, other: "BitVector") -> "BitVector":
        return BitVector(np.concatenate([self._bits, other.array]))

    def support(self) -> List[int]:
        """1-based positions holding a 1"""
        return [int(i) + 1 for i in np.flatnonzero(self._bits)]

    def __len__(self) -> int:
        return int(self._bits.shape[0])

    def __iter__(self):
        return (int(b) for b in self._bits)

    def __getitem__(self, index: int) -> int:
        return int(self._bits[index])

    def __xor__(self, other: "BitVector") -> "BitVector":
        return add(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BitVector):
            return NotImplemented
        return np.array_equal(self._bits, other.array)

    def __hash__(self) -> int:
        return hash(self._bits.tobytes())

    def __repr__(self) -> str:
        return f"BitVector('{self.to_string()}')"


class BitMatrix:
    """Immutable row-major matrix over GF(2)"""

    __slots__ = ("_entries",)

    def __init__(self, entries):
        self._entries = _as_bits(entries, 2)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "BitMatrix":
        if not rows:
            return cls.zeros(0, cols or 0)
        return cls(np.array(rows))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(np.zeros((rows, cols), dtype=np.uint8))

    @classmethod
    def identity(cls, size: int) -> "BitMatrix":
        return cls(np.eye(size, dtype=np.uint8))

    @property
    def array(self) -> np.ndarray:
        return self._entries

    @property
    def rows(self) -> int:
        return int(self._entries.shape[0])

    @property
    def cols(self) -> int:
        return int(self._entries.shape[1])

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def T(self) -> "BitMatrix":
        return transpose(self)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def entry(self, row: int, col: int) -> int:
        return int(self._entries[row - 1, col - 1])

    def row(self, row: int) -> BitVector:
        return BitVector(self._entries[row - 1])

    def column(self, col: int) -> BitVector:
        return BitVector(self._entries[:, col - 1])

    def is_zero(self) -> bool:
        return not self._entries.any()

    def is_symmetric(self) -> bool:
        return self.is_square() and np.array_equal(self._entries, self._entries.T)

    def to_strings(self) -> List[str]:
        return ["".join(str(int(b)) for b in row) for row in self._entries]

    def __getitem__(self, index):
        return self._entries[index]

    def __xor__(self, other: "BitMatrix") -> "BitMatrix":
        return add(self, other)

    def __matmul__(self, other):
        if isinstance(other, BitVector):
            return matvec(self, other)
        return matmul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self._entries, other.array)

    def __hash__(self) -> int:
        return hash((self.shape, self._entries.tobytes()))

    def __repr__(self) -> str:
        return f"BitMatrix({self.to_strings()})"


def identity(size: int) -> BitMatrix:
    return BitMatrix.identity(size)


def zeros(rows: int, cols: int) -> BitMatrix:
    return BitMatrix.zeros(rows, cols)


def _row_reduce(arr: np.ndarray, pivot_cols: Optional[int] = None) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form of a binary array.

    Only the first ``pivot_cols`` columns are eligible as pivots; row
    operations still act on the full width (for augmented systems).
    """
    work = np.array(arr, dtype=np.uint8)
    n_rows, n_cols = work.shape
    limit = n_cols if pivot_cols is None else pivot_cols
    pivots: List[int] = []
    row = 0
    for col in range(limit):
        if row == n_rows:
            break
        hits = np.flatnonzero(work[row:, col])
        if hits.size == 0:
            continue
        pivot = row + int(hits[0])
        if pivot != row:
            work[[row, pivot]] = work[[pivot, row]]
        mask = work[:, col].astype(bool)
        mask[row] = False
        work[mask] ^= work[row]
        pivots.append(col)
        row += 1
    return work, pivots


def rank(m: BitMatrix) -> int:
    """GF(2) row rank by Gaussian elimination"""
    if m.rows == 0 or m.cols == 0:
        return 0
    _, pivots = _row_reduce(m.array)
    return len(pivots)


def invert(m: BitMatrix) -> BitMatrix:
    """Inverse over GF(2).

    Raises:
        NonSquareError: for rectangular input
        SingularError: when rank(m) < dimension
    """
    if not m.is_square():
        raise NonSquareError(f"cannot invert a {m.rows}x{m.cols} matrix")
    size = m.rows
    augmented = np.hstack([m.array, np.eye(size, dtype=np.uint8)])
    reduced, pivots = _row_reduce(augmented, pivot_cols=size)
    if len(pivots) < size:
        raise SingularError(len(pivots), size)
    return BitMatrix(reduced[:, size:])


def solve(m: BitMatrix, v: BitVector) -> BitVector:
    """Unique x with m·x = v for invertible m"""
    return matvec(invert(m), v)


def kernel_vector(m: BitMatrix) -> Optional[BitVector]:
    """A nonzero x with m·x = 0, or None when m has full column rank"""
    reduced, pivots = _row_reduce(m.array)
    free = [c for c in range(m.cols) if c not in pivots]
    if not free:
        return None
    chosen = free[0]
    x = np.zeros(m.cols, dtype=np.uint8)
    x[chosen] = 1
    for row, col in enumerate(pivots):
        x[col] = reduced[row, chosen]
    return BitVector(x)


def matvec(m: BitMatrix, v: BitVector) -> BitVector:
    if m.cols != len(v):
        raise DimensionError(f"cannot multiply {m.rows}x{m.cols} matrix by length-{len(v)} vector")
    return BitVector((m.array.astype(np.int64) @ v.array.astype(np.int64)) % 2)


def matmul(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    return BitMatrix((a.array.astype(np.int64) @ b.array.astype(np.int64)) % 2)


def add(a, b):
    """Entrywise XOR of two vectors or two same-shape matrices"""
    if isinstance(a, BitVector) and isinstance(b, BitVector):
        if len(a) != len(b):
            raise DimensionError(f"vector lengths differ: {len(a)} vs {len(b)}")
        return BitVector(a.array ^ b.array)
    if isinstance(a, BitMatrix) and isinstance(b, BitMatrix):
        if a.shape != b.shape:
            raise DimensionError(f"matrix shapes differ: {a.shape} vs {b.shape}")
        return BitMatrix(a.array ^ b.array)
    raise GF2Error("add expects two BitVectors or two BitMatrices")


def transpose(m: BitMatrix) -> BitMatrix:
    return BitMatrix(m.array.T)


def dot(u: BitVector, v: BitVector) -> int:
    """⊕_i u_i ∧ v_i"""
    if len(u) != len(v):
        raise DimensionError(f"vector lengths differ: {len(u)} vs {len(v)}")
    return int(np.bitwise_and(u.array, v.array).sum() % 2)


def lower_triangle(m: BitMatrix) -> BitMatrix:
    """Strictly lower triangular part"""
    return BitMatrix(np.tril(m.array, k=-1))


def upper_triangle(m: BitMatrix) -> BitMatrix:
    """Strictly upper triangular part"""
    return BitMatrix(np.triu(m.array, k=1))
