# reporting.py - ProtocolReport assembly and rendering
import json
from typing import Any, Dict, List, Optional

from core.models import Command, GraphSummary, ProtocolReport, Viability
from graphs import PartitionedGraph, classify_edges, connectivity_warning, gamma_t_rank, sub_matrices


def summarize_graph(g: PartitionedGraph) -> GraphSummary:
    counts = classify_edges(g).counts()
    return GraphSummary(
        n=g.n,
        vertices=g.size,
        senders=g.sender_labels(),
        receivers=g.receiver_labels(),
        e_sr=counts["e_sr"],
        e_s=counts["e_s"],
        e_r=counts["e_r"],
        connected=g.is_connected(),
    )


def viability_of(g: PartitionedGraph) -> Viability:
    r = gamma_t_rank(g)
    return Viability(viable=r == g.n, rank=r, n=g.n)


def build_report(
    g: PartitionedGraph,
    command: Command,
    results: Optional[Dict[str, Any]] = None,
    timing: Optional[Dict[str, float]] = None,
) -> ProtocolReport:
    """Graph summary, viability and matrices for ``g`` plus command results"""
    warning = connectivity_warning(g)
    return ProtocolReport(
        graph=summarize_graph(g),
        viability=viability_of(g),
        matrices=sub_matrices(g).as_strings(),
        command=command,
        results=results or {},
        timing=timing or {},
        warnings=[warning] if warning else [],
        row_labels=g.sender_labels(),
        column_labels=g.receiver_labels(),
    )


def verdict_line(report: ProtocolReport) -> str:
    v = report.viability
    return f"{v.verdict()}, rank(Γ_T)={v.rank}/{v.n}"


def _matrix_block(title: str, rows: List[str], row_labels: List[int], column_labels: List[int]) -> List[str]:
    width = max(len(str(label)) for label in row_labels + column_labels)
    header = " " * (width + 3) + " ".join(str(c).rjust(width) for c in column_labels)
    lines = [title, header]
    for label, bits in zip(row_labels, rows):
        lines.append(f"{str(label).rjust(width)} | " + " ".join(b.rjust(width) for b in bits))
    return lines


def render_matrices(report: ProtocolReport) -> List[str]:
    """Γ_T as senders × receivers, Γ_S and Γ_R on their own vertex sets, all in file ids"""
    senders, receivers = report.row_labels, report.column_labels
    lines = []
    lines += _matrix_block("Γ_T (senders × receivers)", report.matrices["gamma_t"], senders, receivers)
    lines += _matrix_block("Γ_S (senders × senders)", report.matrices["gamma_s"], senders, senders)
    lines += _matrix_block("Γ_R (receivers × receivers)", report.matrices["gamma_r"], receivers, receivers)
    return lines


def render_text(report: ProtocolReport, body: Optional[List[str]] = None) -> str:
    g = report.graph
    lines = [
        verdict_line(report),
        f"pairs: {g.n}  senders: {' '.join(map(str, g.senders))}  receivers: {' '.join(map(str, g.receivers))}",
        f"edges: E_SR={g.e_sr} E_S={g.e_s} E_R={g.e_r}",
    ]
    lines += [f"warning: {w}" for w in report.warnings]
    lines += body if body is not None else render_matrices(report)
    for name, seconds in report.timing.items():
        lines.append(f"{name}: {seconds:.6f}s")
    return "\n".join(lines)


def render_json(report: ProtocolReport) -> str:
    return json.dumps(report.to_dict(), indent=2, ensure_ascii=False)
