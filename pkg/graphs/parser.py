# parser.py - Reading and writing the graph file format
#
#   pairs: <n>
#   senders: <id> ... <id>
#   edges: <u>-<v> <u>-<v> ...
#
# Ids are 1-based, `#` starts a comment, blank lines are ignored and the
# three sections must appear in this order.
import logging
import re
from pathlib import Path
from typing import List, Set, Tuple, Union

from core.errors import GraphError, ParseError, ParseReason
from .model import Edge, PartitionedGraph, canonical_edge

logger = logging.getLogger(__name__)

SECTIONS = ("pairs", "senders", "edges")
VERTEX_ID = re.compile(r"^[0-9]+$")
EDGE_TOKEN = re.compile(r"^([0-9]+)-([0-9]+)$")


def _content_lines(text: str) -> List[Tuple[int, str]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((number, line))
    return lines


def _parse_int(token: str, number: int) -> int:
    if not VERTEX_ID.match(token):
        raise ParseError(ParseReason.MALFORMED, number, f"not a vertex id: {token!r}")
    return int(token)


def parse_graph(text: str) -> PartitionedGraph:
    """Parse graph text into a validated, relabeled PartitionedGraph"""
    lines = _content_lines(text)
    values = {}
    last_line = len(text.splitlines())

    for index, (number, line) in enumerate(lines):
        key, sep, rest = line.partition(":")
        key = key.strip().lower()
        if not sep or key not in SECTIONS:
            raise ParseError(ParseReason.MALFORMED, number, line)
        if index >= len(SECTIONS) or SECTIONS[index] != key:
            raise ParseError(ParseReason.SECTION_ORDER, number, f"unexpected '{key}'")
        values[key] = (number, rest.split())

    for key in SECTIONS:
        if key not in values:
            raise ParseError(ParseReason.MALFORMED, last_line, f"missing '{key}' section")

    number, tokens = values["pairs"]
    if len(tokens) != 1:
        raise ParseError(ParseReason.MALFORMED, number, "pairs takes one integer")
    n = _parse_int(tokens[0], number)
    if n < 1:
        raise ParseError(ParseReason.MALFORMED, number, "pairs must be at least 1")
    size = 2 * n

    number, tokens = values["senders"]
    senders = [_parse_int(t, number) for t in tokens]
    for s in senders:
        if not 1 <= s <= size:
            raise ParseError(ParseReason.OUT_OF_RANGE, number, f"sender {s} outside 1..{size}")
    if len(senders) != n or len(set(senders)) != n:
        raise ParseError(ParseReason.SENDER_COUNT, number, f"expected {n} distinct ids, got {len(senders)}")

    number, tokens = values["edges"]
    edges: List[Edge] = []
    seen: Set[Edge] = set()
    for token in tokens:
        match = EDGE_TOKEN.match(token)
        if not match:
            raise ParseError(ParseReason.MALFORMED, number, f"bad edge {token!r}")
        u, v = int(match.group(1)), int(match.group(2))
        if u == v:
            raise ParseError(ParseReason.SELF_LOOP, number, token)
        if not (1 <= u <= size and 1 <= v <= size):
            raise ParseError(ParseReason.OUT_OF_RANGE, number, token)
        edge = canonical_edge(u, v)
        if edge in seen:
            raise ParseError(ParseReason.DUPLICATE_EDGE, number, token)
        seen.add(edge)
        edges.append(edge)

    try:
        graph = PartitionedGraph.from_edges(n, senders, edges)
    except GraphError as e:
        raise ParseError(ParseReason.MALFORMED, number, str(e)) from e
    logger.debug("parsed graph: n=%d, %d edges", n, len(edges))
    return graph


def load_graph(path: Union[str, Path]) -> PartitionedGraph:
    raw = Path(path).read_bytes()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as e:
        line = raw[: e.start].count(b"\n") + 1
        raise ParseError(ParseReason.MALFORMED, line, "not UTF-8 text") from e
    return parse_graph(text)


def format_graph(g: PartitionedGraph) -> str:
    """Emit ``g`` in file ids with senders and edges in canonical order"""
    senders = " ".join(str(s) for s in sorted(g.sender_labels()))
    edges = " ".join(f"{u}-{v}" for u, v in g.original_edges())
    lines = [
        f"pairs: {g.n}",
        f"senders: {senders}",
        f"edges: {edges}" if edges else "edges:",
    ]
    return "\n".join(lines) + "\n"
