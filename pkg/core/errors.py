# errors.py - Exception hierarchy shared by every package
from enum import Enum
from typing import Optional


class GraphCodeError(Exception):
    """Root of all errors raised by this toolkit"""


# GF(2) linear algebra
class GF2Error(GraphCodeError, ValueError):
    """Invalid GF(2) operation"""


class DimensionError(GF2Error):
    """Operand shapes do not line up"""


class NonSquareError(GF2Error):
    """Inversion requested for a rectangular matrix"""


class SingularError(GF2Error):
    """Matrix has no inverse over GF(2)"""

    def __init__(self, rank: int, dimension: int):
        super().__init__(f"singular matrix: rank {rank} < {dimension}")
        self.rank = rank
        self.dimension = dimension


# Graphs and the graph file format
class GraphError(GraphCodeError, ValueError):
    """Invalid partitioned graph"""


class InvalidVertexError(GraphError):
    """Vertex id outside the graph"""


class ParseReason(Enum):
    MALFORMED = "malformed line"
    SECTION_ORDER = "section out of order"
    SENDER_COUNT = "wrong sender count"
    OUT_OF_RANGE = "vertex out of range"
    SELF_LOOP = "self-loop"
    DUPLICATE_EDGE = "duplicate edge"


class ParseError(GraphError):
    """Graph file could not be parsed"""

    def __init__(self, reason: ParseReason, line: int, detail: str = ""):
        message = f"line {line}: {reason.value}"
        if detail:
            message = f"{message} ({detail})"
        super().__init__(message)
        self.reason = reason
        self.line = line


# State-vector oracle
class OracleError(GraphCodeError):
    """Invalid oracle request"""


class SizeLimitError(OracleError, ValueError):
    """Request exceeds the qubit cap"""

    def __init__(self, requested: int, limit: int):
        super().__init__(f"{requested} qubits requested, limit is {limit}")
        self.requested = requested
        self.limit = limit


class SiteError(OracleError, IndexError):
    """Qubit site outside the state"""


# Protocols
class NotViableError(GraphCodeError):
    """Graph fails the full-rank criterion on its sender/receiver block"""

    def __init__(self, rank: int, n: int, detail: Optional[str] = None):
        message = f"graph is not viable: rank(Γ_T)={rank}/{n}"
        if detail:
            message = f"{message}; {detail}"
        super().__init__(message)
        self.rank = rank
        self.n = n
