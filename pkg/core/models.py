# models.py - Report models shared by the protocols and the command line
from dataclasses import asdict, dataclass, field
from enum import Enum, IntEnum
from typing import Any, Dict, List, Optional

TOOL_VERSION = "1.0.0"

# Documented so that seeded runs can be reproduced on any platform
RNG_ALGORITHM = "numpy.random.default_rng (PCG64); complex Gaussian amplitudes, normalized"


class ExitCode(IntEnum):
    OK = 0
    ERROR = 1
    NOT_VIABLE = 2


class Command(Enum):
    CHECK = "check"
    DENSE = "dense"
    TELEPORT = "teleport"


@dataclass
class GraphSummary:
    n: int
    vertices: int
    senders: List[int]
    receivers: List[int]
    e_sr: int
    e_s: int
    e_r: int
    connected: bool = True


@dataclass
class Viability:
    viable: bool
    rank: int
    n: int

    def verdict(self) -> str:
        return "VIABLE" if self.viable else "NOT VIABLE"


@dataclass
class ProtocolReport:
    graph: GraphSummary
    viability: Viability
    matrices: Dict[str, List[str]]
    command: Command = Command.CHECK
    results: Dict[str, Any] = field(default_factory=dict)
    timing: Dict[str, float] = field(default_factory=dict)
    version: str = TOOL_VERSION
    warnings: List[str] = field(default_factory=list)
    row_labels: Optional[List[int]] = None
    column_labels: Optional[List[int]] = None

    def to_dict(self) -> Dict[str, Any]:
        """JSON-ready view with the stable top-level keys"""
        graph = asdict(self.graph)
        graph["warnings"] = list(self.warnings)
        results = {"command": self.command.value}
        results.update(self.results)
        return {
            "graph": graph,
            "viability": asdict(self.viability),
            "matrices": {
                "rows": self.row_labels,
                "columns": self.column_labels,
                **self.matrices,
            },
            "results": results,
            "timing": dict(self.timing),
            "version": self.version,
        }
