from typing import List, Optional, Tuple

from pydantic import BaseModel, Field

from orbitlattice.combinatorics.intersections import IntersectionReport, PairwiseTable
from orbitlattice.combinatorics.involutions import Involution, orbit_dim
from orbitlattice.combinatorics.rankmatrix import UpperMatrix, ValidityReport
from orbitlattice.combinatorics.rscells import CellGraph, EdgeVsCodimReport
from orbitlattice.combinatorics.tableaux import StandardTableau, TwoColumnTableau


class TableauDoc(BaseModel):
    """Two-column tableau by its columns."""
    col1: List[int]
    col2: List[int]
    text: str

    @classmethod
    def from_tableau(cls, tableau: TwoColumnTableau) -> "TableauDoc":
        return cls(col1=list(tableau.col1), col2=list(tableau.col2), text=tableau.text)


class TableauListDoc(BaseModel):
    n: int
    k: int
    count: int
    tableaux: List[TableauDoc]


class StandardTableauDoc(BaseModel):
    rows: List[List[int]]
    text: str

    @classmethod
    def from_tableau(cls, tableau: StandardTableau) -> "StandardTableauDoc":
        return cls(rows=[list(row) for row in tableau.rows], text=tableau.text)


class InvolutionDoc(BaseModel):
    """Involution in canonical cycle form, with its rank and orbit dimension."""
    n: int
    cycles: List[Tuple[int, int]]
    text: str
    k: int = Field(..., description="Number of transpositions, the rank of N_sigma")
    dim: int = Field(..., description="Dimension of the B-orbit")

    @classmethod
    def from_involution(cls, sigma: Involution) -> "InvolutionDoc":
        return cls(
            n=sigma.n,
            cycles=list(sigma.cycles),
            text=sigma.text,
            k=sigma.k,
            dim=orbit_dim(sigma),
        )


class SigmaDoc(BaseModel):
    tableau: TableauDoc
    sigma: InvolutionDoc


class MatrixDoc(BaseModel):
    kind: str = Field(..., description="nmatrix, rankmatrix or meet")
    n: int
    rows: List[List[int]]

    @classmethod
    def from_matrix(cls, kind: str, matrix: UpperMatrix) -> "MatrixDoc":
        return cls(kind=kind, n=matrix.n, rows=matrix.rows())


class ViolationDoc(BaseModel):
    condition: str
    i: int
    j: int


class ValidityDoc(BaseModel):
    n: int
    rows: List[List[int]]
    valid: bool
    violations: List[ViolationDoc]
    sigma: Optional[InvolutionDoc] = Field(None, description="The involution the matrix is the rank matrix of")

    @classmethod
    def from_report(cls, matrix: UpperMatrix, report: ValidityReport,
                    sigma: Optional[Involution]) -> "ValidityDoc":
        return cls(
            n=matrix.n,
            rows=matrix.rows(),
            valid=report.valid,
            violations=[ViolationDoc(condition=v.condition, i=v.i, j=v.j) for v in report.violations],
            sigma=InvolutionDoc.from_involution(sigma) if sigma is not None else None,
        )


class DimensionDoc(BaseModel):
    sigma: InvolutionDoc
    r_stats: List[int] = Field(..., description="r_s(sigma) for s = 1..k")
    maximal: bool
    tableau: Optional[TableauDoc] = None


class OrderDoc(BaseModel):
    lhs: InvolutionDoc
    rhs: InvolutionDoc
    lhs_leq_rhs: bool
    rhs_leq_lhs: bool


class ClosureDoc(BaseModel):
    sigma: InvolutionDoc
    count: int
    orbits: List[InvolutionDoc]


class ComponentDoc(BaseModel):
    cycles: List[Tuple[int, int]]
    text: str
    k: int
    dim: int
    codim: int


class IntersectionDoc(BaseModel):
    left: InvolutionDoc
    right: InvolutionDoc
    left_label: Optional[str] = None
    right_label: Optional[str] = None
    n: int
    meet: List[List[int]]
    irreducible: bool
    components: List[ComponentDoc]
    ambient_dim: int
    codim: int
    baseline: str = Field(..., description="orbital_variety or left_orbit")

    @classmethod
    def from_report(cls, report: IntersectionReport) -> "IntersectionDoc":
        return cls(
            left=InvolutionDoc.from_involution(report.left),
            right=InvolutionDoc.from_involution(report.right),
            left_label=report.left_label,
            right_label=report.right_label,
            n=report.n,
            meet=report.meet.rows(),
            irreducible=report.irreducible,
            components=[
                ComponentDoc(
                    cycles=list(c.sigma.cycles),
                    text=c.sigma.text,
                    k=c.k,
                    dim=c.dim,
                    codim=c.codim,
                )
                for c in report.components
            ],
            ambient_dim=report.ambient_dim,
            codim=report.codim,
            baseline=report.baseline,
        )


class TableCellDoc(BaseModel):
    left: str
    right: str
    codim: int
    irreducible: bool
    component_count: int
    max_dim: int


class PairwiseTableDoc(BaseModel):
    n: int
    k: int
    tableaux: List[str]
    cells: List[TableCellDoc] = Field(..., description="Upper triangle, diagonal included")

    @classmethod
    def from_table(cls, table: PairwiseTable) -> "PairwiseTableDoc":
        size = len(table.tableaux)
        cells = []
        for a in range(size):
            for b in range(a, size):
                cell = table.cells[(a, b)]
                cells.append(TableCellDoc(
                    left=table.tableaux[a].text,
                    right=table.tableaux[b].text,
                    codim=cell.codim,
                    irreducible=cell.irreducible,
                    component_count=cell.component_count,
                    max_dim=cell.max_dim,
                ))
        return cls(n=table.n, k=table.k, tableaux=[t.text for t in table.tableaux], cells=cells)


class CellDoc(BaseModel):
    tableau: StandardTableauDoc
    size: int
    members: List[List[int]] = Field(..., description="Permutations in one-line notation")


class EdgeDoc(BaseModel):
    source: str
    target: str
    label: Optional[str] = None


class VertexDoc(BaseModel):
    name: str
    dim: Optional[int] = None
    k: Optional[int] = None


class GraphDoc(BaseModel):
    """Cell graph, codim-1 graph or Hasse diagram; vertex names are text encodings."""
    kind: str
    directed: bool = False
    base: Optional[str] = None
    vertices: List[VertexDoc]
    edges: List[EdgeDoc]

    @classmethod
    def from_cell_graph(cls, graph: CellGraph) -> "GraphDoc":
        return cls(
            kind="cellgraph",
            base=graph.base.text,
            vertices=[VertexDoc(name=v.text) for v in graph.vertices],
            edges=[EdgeDoc(source=a.text, target=b.text, label=str(k)) for a, b, k in graph.edges],
        )


class PairComparisonDoc(BaseModel):
    left: str
    right: str
    joined: bool
    labels: List[int]
    codim: int
    discrepancy: bool


class EdgeVsCodimDoc(BaseModel):
    n: int
    k: int
    discrepancy_count: int
    unsound_count: int
    pairs: List[PairComparisonDoc]

    @classmethod
    def from_report(cls, report: EdgeVsCodimReport) -> "EdgeVsCodimDoc":
        return cls(
            n=report.n,
            k=report.k,
            discrepancy_count=len(report.discrepancies),
            unsound_count=len(report.unsound_edges),
            pairs=[
                PairComparisonDoc(
                    left=p.left.text,
                    right=p.right.text,
                    joined=p.joined,
                    labels=list(p.labels),
                    codim=p.codim,
                    discrepancy=p.discrepancy,
                )
                for p in report.pairs
            ],
        )


class RootPositionsDoc(BaseModel):
    w: List[int]
    positions: List[Tuple[int, int]]


class LiftingsDoc(BaseModel):
    delta: InvolutionDoc
    window: Tuple[int, int]
    n: int
    liftings: List[InvolutionDoc]


class FailureDoc(BaseModel):
    case: str = Field(..., description="Minimal reproducing input")
    detail: str


class VerifySuiteDoc(BaseModel):
    name: str
    cases: int
    failures: List[FailureDoc]
    seconds: Optional[float] = Field(None, description="Wall time, only with --timings")


class VerifyDoc(BaseModel):
    n_max: int
    ok: bool
    suites: List[VerifySuiteDoc]
