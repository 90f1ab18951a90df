"""Text, CSV and DOT emitters for the documents the CLI prints."""

import csv
import io
from typing import Iterable, List, Sequence

import networkx as nx

from orbitlattice.combinatorics.intersections import IntersectionReport, PairwiseTable
from orbitlattice.combinatorics.rankmatrix import format_grid
from orbitlattice.combinatorics.rscells import EdgeVsCodimReport
from orbitlattice.models.schemas import EdgeDoc, GraphDoc, VertexDoc


def _quote(name: str) -> str:
    return '"' + name.replace('"', '\\"') + '"'


def _node_name(graph: nx.Graph, node) -> str:
    return str(graph.nodes[node].get("label", node))


def graph_to_dot(graph: nx.Graph, name: str = "G") -> str:
    """DOT text; nodes and edges come out in the graph's insertion order."""
    directed = graph.is_directed()
    arrow = "->" if directed else "--"
    lines = [f"{'digraph' if directed else 'graph'} {_quote(name)} {{"]
    for node in graph.nodes:
        lines.append(f"  {_quote(_node_name(graph, node))};")
    for a, b, data in graph.edges(data=True):
        attrs = f' [label="{data["label"]}"]' if "label" in data else ""
        lines.append(f"  {_quote(_node_name(graph, a))} {arrow} {_quote(_node_name(graph, b))}{attrs};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_doc(graph: nx.Graph, kind: str) -> GraphDoc:
    vertices = [
        VertexDoc(name=_node_name(graph, node), dim=data.get("dim"), k=data.get("k"))
        for node, data in graph.nodes(data=True)
    ]
    edges = [
        EdgeDoc(
            source=_node_name(graph, a),
            target=_node_name(graph, b),
            label=str(data["label"]) if "label" in data else None,
        )
        for a, b, data in graph.edges(data=True)
    ]
    return GraphDoc(
        kind=kind,
        directed=graph.is_directed(),
        base=graph.graph.get("base"),
        vertices=vertices,
        edges=edges,
    )


def graph_text(graph: nx.Graph) -> str:
    arrow = "->" if graph.is_directed() else "--"
    lines = [f"{graph.number_of_nodes()} vertices, {graph.number_of_edges()} edges"]
    for a, b, data in graph.edges(data=True):
        suffix = f"  [{data['label']}]" if "label" in data else ""
        lines.append(f"{_node_name(graph, a)} {arrow} {_node_name(graph, b)}{suffix}")
    return "\n".join(lines) + "\n"


def rows_to_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def aligned(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    table = [list(map(str, header))] + [list(map(str, row)) for row in rows]
    widths = [max(len(row[c]) for row in table) for c in range(len(header))]
    return "\n".join(
        "  ".join(cell.ljust(widths[c]) for c, cell in enumerate(row)).rstrip()
        for row in table
    ) + "\n"


TABLE_HEADER = ("left", "right", "codim", "irreducible", "components", "max_dim")


def _table_rows(table: PairwiseTable) -> List[tuple]:
    size = len(table.tableaux)
    rows = []
    for a in range(size):
        for b in range(a, size):
            cell = table.cells[(a, b)]
            rows.append((
                table.tableaux[a].text,
                table.tableaux[b].text,
                cell.codim,
                "yes" if cell.irreducible else "no",
                cell.component_count,
                cell.max_dim,
            ))
    return rows


def table_csv(table: PairwiseTable) -> str:
    return rows_to_csv(TABLE_HEADER, _table_rows(table))


def table_text(table: PairwiseTable) -> str:
    """Codimension grid followed by the pair list."""
    size = len(table.tableaux)
    labels = [f"T{idx + 1}" for idx in range(size)]
    lines = [f"{label} = {tableau.text}" for label, tableau in zip(labels, table.tableaux)]
    grid = [[label] + [table.cells[(a, b)].codim for b in range(size)] for a, label in enumerate(labels)]
    lines.append("")
    lines.append(aligned(["codim"] + labels, grid).rstrip("\n"))
    lines.append("")
    return "\n".join(lines) + "\n" + aligned(TABLE_HEADER, _table_rows(table))


def intersection_text(report: IntersectionReport) -> str:
    left = report.left_label or report.left.text
    right = report.right_label or report.right.text
    lines = [
        f"left:  {left}  sigma={report.left.text}",
        f"right: {right}  sigma={report.right.text}",
        "meet:",
        format_grid(report.meet),
        f"irreducible: {'yes' if report.irreducible else 'no'}",
        f"ambient dim: {report.ambient_dim} ({report.baseline})",
        f"codim: {report.codim}",
        f"components ({len(report.components)}):",
    ]
    for component in report.components:
        lines.append(f"  {component.sigma.text}  k={component.k}  dim={component.dim}  codim={component.codim}")
    return "\n".join(lines) + "\n"


EDGE_HEADER = ("left", "right", "joined", "labels", "codim", "discrepancy")


def _edge_rows(report: EdgeVsCodimReport) -> List[tuple]:
    return [
        (
            pair.left.text,
            pair.right.text,
            "yes" if pair.joined else "no",
            " ".join(map(str, pair.labels)),
            pair.codim,
            "yes" if pair.discrepancy else "no",
        )
        for pair in report.pairs
    ]


def edge_vs_codim_csv(report: EdgeVsCodimReport) -> str:
    return rows_to_csv(EDGE_HEADER, _edge_rows(report))


def edge_vs_codim_text(report: EdgeVsCodimReport) -> str:
    summary = (
        f"n={report.n} k={report.k}: {len(report.pairs)} pairs, "
        f"{len(report.discrepancies)} discrepancies, {len(report.unsound_edges)} unsound edges\n"
    )
    return summary + aligned(EDGE_HEADER, _edge_rows(report))
