"""Robinson-Schensted, left cells C_T, cell graphs and the root-position sets n ∩ w(n).

Permutations are in one-line notation w(1),...,w(n). rs() row-inserts the
word w(1)...w(n): P is the insertion tableau and Q records where each step
ended. The left cell of T is C_T = {w : P(w) = T}, one permutation per
tableau Q of the same shape.

In a cell graph two tableaux Q', Q'' are joined with label k when swapping
the entries in positions k and k+1 of RS(T, Q') gives RS(T, Q''). This is
the action that keeps the insertion tableau fixed, so edges stay inside C_T.
"""

import bisect
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import networkx as nx

from orbitlattice.combinatorics.intersections import pairwise_table
from orbitlattice.combinatorics.tableaux import (
    StandardTableau,
    TwoColumnTableau,
    enumerate_standard,
    partitions,
)
from orbitlattice.errors import DomainError, ParseError, SizeMismatchError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Permutation:
    values: Tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if not values:
            raise DomainError("permutation must have at least one entry")
        if sorted(values) != list(range(1, len(values) + 1)):
            raise DomainError(f"{list(values)} is not a rearrangement of 1..{len(values)}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls(tuple(range(n, 0, -1)))

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        return self.values[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for pos, value in enumerate(self.values, start=1):
            inv[value - 1] = pos
        return Permutation(tuple(inv))

    def swap_positions(self, k: int) -> "Permutation":
        """w * s_k: exchanges the entries in positions k and k+1."""
        if not 1 <= k < self.n:
            raise DomainError(f"k must lie in 1..{self.n - 1}, got {k}")
        values = list(self.values)
        values[k - 1], values[k] = values[k], values[k - 1]
        return Permutation(tuple(values))

    def swap_values(self, k: int) -> "Permutation":
        """s_k * w: exchanges the values k and k+1."""
        if not 1 <= k < self.n:
            raise DomainError(f"k must lie in 1..{self.n - 1}, got {k}")
        swap = {k: k + 1, k + 1: k}
        return Permutation(tuple(swap.get(v, v) for v in self.values))

    @property
    def text(self) -> str:
        return ",".join(map(str, self.values))

    def __str__(self):
        return "[" + self.text + "]"


def parse_permutation(text: str) -> Permutation:
    """Parses "4,2,3,1" or "[4,2,3,1]"."""
    stripped = text.strip().strip("[]")
    try:
        values = tuple(int(part) for part in stripped.split(","))
    except ValueError as exc:
        raise ParseError(f"expected a permutation like '4,2,3,1', got '{text}'") from exc
    return Permutation(values)


def rs(w: Permutation) -> Tuple[StandardTableau, StandardTableau]:
    """(P, Q) by row insertion of w(1), ..., w(n)."""
    p_rows: List[List[int]] = []
    q_rows: List[List[int]] = []
    for step, value in enumerate(w.values, start=1):
        row = 0
        while True:
            if row == len(p_rows):
                p_rows.append([value])
                q_rows.append([step])
                break
            current = p_rows[row]
            pos = bisect.bisect_right(current, value)
            if pos == len(current):
                current.append(value)
                q_rows[row].append(step)
                break
            value, current[pos] = current[pos], value
            row += 1
    return (
        StandardTableau(tuple(tuple(r) for r in p_rows)),
        StandardTableau(tuple(tuple(r) for r in q_rows)),
    )


def rs_inverse(p: StandardTableau, q: StandardTableau) -> Permutation:
    """The permutation RS(P, Q) with insertion tableau P and recording tableau Q."""
    if p.shape != q.shape:
        raise SizeMismatchError(f"shapes differ: {p.shape} vs {q.shape}")
    p_rows = [list(row) for row in p.rows]
    q_rows = [list(row) for row in q.rows]
    values = [0] * p.n
    for step in range(p.n, 0, -1):
        row = next(r for r, entries in enumerate(q_rows) if entries and entries[-1] == step)
        q_rows[row].pop()
        value = p_rows[row].pop()
        for upper in range(row - 1, -1, -1):
            current = p_rows[upper]
            # Largest entry smaller than the bumped value goes up one row.
            pos = bisect.bisect_left(current, value) - 1
            value, current[pos] = current[pos], value
        values[step - 1] = value
        if not p_rows[row]:
            p_rows.pop()
            q_rows.pop()
    return Permutation(tuple(values))


def insertion_tableau(w: Permutation) -> StandardTableau:
    return rs(w)[0]


def cell(tableau: StandardTableau) -> List[Permutation]:
    """C_T = {RS(T, S) : S of the same shape}, sorted by one-line notation."""
    members = [rs_inverse(tableau, other) for other in enumerate_standard(tableau.shape)]
    return sorted(members, key=lambda w: w.values)


def in_knuth_class(tableau: StandardTableau, members: Sequence[Permutation]) -> bool:
    """True when every permutation in *members* has insertion tableau *tableau*."""
    return all(insertion_tableau(w) == tableau for w in members)


CellEdge = Tuple[StandardTableau, StandardTableau, int]


@dataclass(frozen=True)
class CellGraph:
    base: StandardTableau
    vertices: Tuple[StandardTableau, ...]
    edges: Tuple[CellEdge, ...]

    def labeled_edges(self) -> FrozenSet[Tuple[str, str, int]]:
        """Edges by tableau text, independent of the base."""
        return frozenset((a.text, b.text, k) for a, b, k in self.edges)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph(base=self.base.text)
        graph.add_nodes_from(vertex.text for vertex in self.vertices)
        for a, b, k in self.edges:
            if graph.has_edge(a.text, b.text):
                graph.edges[a.text, b.text]["labels"].append(k)
            else:
                graph.add_edge(a.text, b.text, labels=[k])
        for _, _, data in graph.edges(data=True):
            data["label"] = ",".join(map(str, data["labels"]))
        return graph


def cell_graph(tableau: StandardTableau) -> CellGraph:
    """Gamma_T on the tableaux of sh(T)."""
    vertices = tuple(enumerate_standard(tableau.shape))
    order = {vertex: idx for idx, vertex in enumerate(vertices)}
    edges = set()
    for vertex in vertices:
        w = rs_inverse(tableau, vertex)
        for k in range(1, w.n):
            p, q = rs(w.swap_positions(k))
            if p != tableau or q == vertex:
                continue
            a, b = sorted((vertex, q), key=order.__getitem__)
            edges.add((a, b, k))
    ordered = tuple(sorted(edges, key=lambda e: (order[e[0]], order[e[1]], e[2])))
    logger.debug("cell_graph(%s): %d vertices, %d edges", tableau.text, len(vertices), len(ordered))
    return CellGraph(base=tableau, vertices=vertices, edges=ordered)


@dataclass(frozen=True)
class RootPositionSet:
    w: Permutation
    positions: FrozenSet[Tuple[int, int]]

    def sorted_positions(self) -> List[Tuple[int, int]]:
        return sorted(self.positions)


def root_positions(w: Permutation) -> RootPositionSet:
    """Positions (i, j), i < j, with w^{-1}(i) < w^{-1}(j): the roots spanning n ∩ w(n)."""
    inv = w.inverse()
    positions = frozenset(
        (i, j)
        for i in range(1, w.n + 1)
        for j in range(i + 1, w.n + 1)
        if inv(i) < inv(j)
    )
    return RootPositionSet(w=w, positions=positions)


@dataclass(frozen=True)
class PairComparison:
    left: TwoColumnTableau
    right: TwoColumnTableau
    joined: bool
    labels: Tuple[int, ...]
    codim: int

    @property
    def discrepancy(self) -> bool:
        return self.joined != (self.codim == 1)


@dataclass(frozen=True)
class EdgeVsCodimReport:
    n: int
    k: int
    pairs: Tuple[PairComparison, ...]

    @property
    def discrepancies(self) -> List[PairComparison]:
        return [pair for pair in self.pairs if pair.discrepancy]

    @property
    def unsound_edges(self) -> List[PairComparison]:
        """Joined pairs whose intersection is not of codimension 1; expected empty."""
        return [pair for pair in self.pairs if pair.joined and pair.codim != 1]


def edge_vs_codim(n: int, k: int, threads: Optional[int] = None) -> EdgeVsCodimReport:
    """Compares 'joined in some Gamma_T' with 'intersection of codimension 1' on Tab_n(k)."""
    table = pairwise_table(n, k, threads)
    tableaux = table.tableaux
    labels: Dict[Tuple[int, int], set] = {}
    index = {tableau.to_standard(): idx for idx, tableau in enumerate(tableaux)}
    for base in tableaux:
        for a, b, label in cell_graph(base.to_standard()).edges:
            key = tuple(sorted((index[a], index[b])))
            labels.setdefault(key, set()).add(label)

    pairs = []
    for a in range(len(tableaux)):
        for b in range(a + 1, len(tableaux)):
            found = tuple(sorted(labels.get((a, b), ())))
            pairs.append(PairComparison(
                left=tableaux[a],
                right=tableaux[b],
                joined=bool(found),
                labels=found,
                codim=table.cells[(a, b)].codim,
            ))
    report = EdgeVsCodimReport(n=n, k=k, pairs=tuple(pairs))
    if report.unsound_edges:
        logger.warning("edge_vs_codim(n=%d, k=%d): %d joined pair(s) without codim 1",
                       n, k, len(report.unsound_edges))
    return report


def all_cells(n: int) -> Dict[StandardTableau, List[Permutation]]:
    """Every left cell of S_n, keyed by its tableau."""
    cells = {}
    for shape in partitions(n):
        for tableau in enumerate_standard(shape):
            cells[tableau] = cell(tableau)
    return cells
