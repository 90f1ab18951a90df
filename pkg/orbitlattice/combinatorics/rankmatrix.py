"""N_sigma and rank matrices R_sigma, their characterization, the order <= and projections.

Indices are 1-based in every public signature and in text output, matching
the usual (i, j) notation; numpy arrays underneath are 0-based.

(R_sigma)_{i,j} counts the transpositions (a, b) of sigma with i <= a and
b <= j, i.e. the ones of N_sigma left-below position (i, j). A matrix R is a
rank matrix R_sigma exactly when it satisfies conditions (i)-(iii) below,
evaluated with a virtual zero row n+1 and a virtual zero column 0:

  (i)   R_{i,j} = 0 for i >= j
  (ii)  R_{i+1,j} <= R_{i,j} <= R_{i+1,j} + 1 and R_{i,j-1} <= R_{i,j} <= R_{i,j-1} + 1
  (iii) if R_{i,j} = R_{i+1,j}+1 = R_{i,j-1}+1 = R_{i+1,j-1}+1 then
        (a) R_{i,k} = R_{i+1,k} for k < j and R_{i,k} = R_{i+1,k}+1 for k >= j
        (b) R_{k,j} = R_{k,j-1} for k > i and R_{k,j} = R_{k,j-1}+1 for k <= i
        (c) R_{j,k} = R_{j+1,k} and R_{k,i} = R_{k,i-1} for every k
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import networkx as nx
import numpy as np

from orbitlattice.combinatorics.involutions import (
    Involution,
    enumerate_involutions,
    orbit_dim,
)
from orbitlattice.combinatorics.tableaux import TwoColumnTableau, tableau_from_columns
from orbitlattice.errors import (
    ConsistencyError,
    DomainError,
    ParseError,
    SizeMismatchError,
)

logger = logging.getLogger(__name__)

# Tags of the conditions a violation can break.
COND_LOWER = "i"
COND_ROW = "ii-row"      # R_{i,j} against its left neighbour R_{i,j-1}
COND_COL = "ii-col"      # R_{i,j} against the entry below, R_{i+1,j}
COND_A = "iiia"
COND_B = "iiib"
COND_C = "iiic"


@dataclass(frozen=True)
class UpperMatrix:
    """Square matrix of non-negative integers.

    Zero on and below the diagonal for every rank matrix; arbitrary input is
    still representable so that validate() can report condition (i).
    """

    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.entries)
        if not rows or any(len(row) != len(rows) for row in rows):
            raise DomainError("matrix must be square and non-empty")
        if any(v < 0 for row in rows for v in row):
            raise DomainError("matrix entries must be non-negative")
        object.__setattr__(self, "entries", rows)

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self.entries[i - 1][j - 1]

    def array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64)

    @classmethod
    def from_array(cls, array: np.ndarray) -> "UpperMatrix":
        return cls(tuple(tuple(int(v) for v in row) for row in array))

    @classmethod
    def zeros(cls, n: int) -> "UpperMatrix":
        return cls(tuple((0,) * n for _ in range(n)))

    def rows(self) -> List[List[int]]:
        return [list(row) for row in self.entries]

    @property
    def is_upper(self) -> bool:
        return all(self.entries[i][j] == 0 for i in range(self.n) for j in range(i + 1))

    @property
    def text(self) -> str:
        return ";".join(",".join(str(v) for v in row) for row in self.entries)

    def __str__(self):
        return format_grid(self)


def parse_matrix(text: str) -> UpperMatrix:
    """Rows separated by ';', entries by ','."""
    try:
        rows = [tuple(int(v) for v in chunk.split(",")) for chunk in text.strip().split(";") if chunk.strip()]
    except ValueError as exc:
        raise ParseError(f"matrix: expected integers like '0,1;0,0', got '{text}'") from exc
    if not rows or any(len(row) != len(rows) for row in rows):
        raise ParseError(f"matrix must be square, got {len(rows)} rows of lengths {[len(r) for r in rows]}")
    return UpperMatrix(tuple(rows))


def format_grid(matrix: UpperMatrix) -> str:
    width = max(len(str(v)) for row in matrix.entries for v in row)
    return "\n".join(" ".join(str(v).rjust(width) for v in row) for row in matrix.entries)


def n_matrix(sigma: Involution) -> UpperMatrix:
    """(N_sigma)_{i,j} = 1 iff i < j and sigma(i) = j."""
    array = np.zeros((sigma.n, sigma.n), dtype=np.int64)
    for a, b in sigma.cycles:
        array[a - 1, b - 1] = 1
    return UpperMatrix.from_array(array)


def rank_array(sigma: Involution) -> np.ndarray:
    array = np.zeros((sigma.n, sigma.n), dtype=np.int64)
    for a, b in sigma.cycles:
        # (a, b) is counted at every (i, j) with i <= a and j >= b.
        array[:a, b - 1:] += 1
    return array


def rank_matrix(sigma: Involution) -> UpperMatrix:
    return UpperMatrix.from_array(rank_array(sigma))


def _padded(matrix: UpperMatrix) -> np.ndarray:
    """1-based copy with zero row 0, zero row n+1 and zero columns 0, n+1."""
    n = matrix.n
    padded = np.zeros((n + 2, n + 2), dtype=np.int64)
    padded[1:n + 1, 1:n + 1] = matrix.array()
    return padded


@dataclass(frozen=True)
class Violation:
    condition: str
    i: int
    j: int


@dataclass(frozen=True)
class ValidityReport:
    violations: Tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def valid(self) -> bool:
        return not self.violations

    def has(self, condition: str, i: int, j: int) -> bool:
        return Violation(condition, i, j) in self.violations


def validate(matrix: UpperMatrix) -> ValidityReport:
    """Checks conditions (i)-(iii) and reports every violated (condition, position)."""
    n = matrix.n
    P = _padded(matrix)
    ks = np.arange(1, n + 1)
    violations: List[Violation] = []

    for i in range(1, n + 1):
        for j in range(1, i + 1):
            if P[i, j] != 0:
                violations.append(Violation(COND_LOWER, i, j))

    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            value, down, left, diag = P[i, j], P[i + 1, j], P[i, j - 1], P[i + 1, j - 1]
            if not down <= value <= down + 1:
                violations.append(Violation(COND_COL, i, j))
            if not left <= value <= left + 1:
                violations.append(Violation(COND_ROW, i, j))
            if not (value == down + 1 == left + 1 == diag + 1):
                continue
            row_step = P[i, 1:n + 1] - P[i + 1, 1:n + 1]
            if not np.array_equal(row_step, (ks >= j).astype(np.int64)):
                violations.append(Violation(COND_A, i, j))
            col_step = P[1:n + 1, j] - P[1:n + 1, j - 1]
            if not np.array_equal(col_step, (ks <= i).astype(np.int64)):
                violations.append(Violation(COND_B, i, j))
            row_j_empty = np.array_equal(P[j, 1:n + 1], P[j + 1, 1:n + 1])
            col_i_empty = np.array_equal(P[1:n + 1, i], P[1:n + 1, i - 1])
            if not (row_j_empty and col_i_empty):
                violations.append(Violation(COND_C, i, j))

    return ValidityReport(tuple(violations))


def reconstruct(matrix: UpperMatrix) -> Optional[Involution]:
    """Second membership test: invert R by inclusion-exclusion.

    N_{i,j} = R_{i,j} - R_{i+1,j} - R_{i,j-1} + R_{i+1,j-1}; returns the
    involution when N is a legal partial matching whose rank matrix is R,
    otherwise None.
    """
    n = matrix.n
    P = _padded(matrix)
    N = P[1:n + 1, 1:n + 1] - P[2:n + 2, 1:n + 1] - P[1:n + 1, 0:n] + P[2:n + 2, 0:n]
    if np.any((N != 0) & (N != 1)):
        return None
    if np.any(np.tril(N) != 0):
        return None
    row_sums, col_sums = N.sum(axis=1), N.sum(axis=0)
    if np.any(row_sums + col_sums > 1):
        return None
    rows, cols = np.nonzero(N)
    sigma = Involution(n, tuple((int(a) + 1, int(b) + 1) for a, b in zip(rows, cols)))
    if not np.array_equal(rank_array(sigma), matrix.array()):
        return None
    return sigma


def sigma_of_rank_matrix(matrix: UpperMatrix) -> Involution:
    """The unique sigma with R_sigma = matrix."""
    report = validate(matrix)
    if not report.valid:
        first = report.violations[0]
        raise DomainError(
            f"not a rank matrix: {len(report.violations)} violation(s), first ({first.condition}) at ({first.i},{first.j})"
        )
    sigma = reconstruct(matrix)
    if sigma is None:
        raise ConsistencyError("matrix passes validate() but inclusion-exclusion does not rebuild it")
    return sigma


def leq(a: UpperMatrix, b: UpperMatrix) -> bool:
    """A <= B entrywise."""
    if a.n != b.n:
        raise SizeMismatchError(f"cannot compare a {a.n}x{a.n} matrix with a {b.n}x{b.n} one")
    return bool(np.all(a.array() <= b.array()))


def involution_leq(lower: Involution, upper: Involution) -> bool:
    """sigma' <= sigma, i.e. B.N_sigma' lies in the closure of B.N_sigma."""
    if lower.n != upper.n:
        raise SizeMismatchError(f"n={lower.n} vs n={upper.n}")
    return bool(np.all(rank_array(lower) <= rank_array(upper)))


def _check_window(n: int, i: int, j: int) -> None:
    if not 1 <= i <= j <= n:
        raise DomainError(f"window ({i},{j}) must satisfy 1 <= i <= j <= {n}")


def project(matrix: UpperMatrix, i: int, j: int) -> UpperMatrix:
    """pi_{i,j}: drop the first i-1 and last n-j rows and columns."""
    _check_window(matrix.n, i, j)
    return UpperMatrix.from_array(matrix.array()[i - 1:j, i - 1:j])


def project_involution(sigma: Involution, i: int, j: int) -> Involution:
    """pi_{i,j}(sigma): keep the transpositions inside {i..j}, relabelled to 1..j-i+1."""
    _check_window(sigma.n, i, j)
    kept = tuple(
        (a - i + 1, b - i + 1) for a, b in sigma.cycles if i <= a and b <= j
    )
    return Involution(j - i + 1, kept)


def embed(delta: Involution, i: int, n: int) -> Involution:
    """Regards an involution of {i..i+m-1} as an element of S_n."""
    if i < 1 or i + delta.n - 1 > n:
        raise DomainError(f"cannot place S_{delta.n} at offset {i} inside S_{n}")
    return Involution(n, tuple((a + i - 1, b + i - 1) for a, b in delta.cycles))


def liftings(delta: Involution, i: int, j: int, n: int) -> List[Involution]:
    """All sigma in S_n^2 with pi_{i,j}(sigma) = delta."""
    _check_window(n, i, j)
    if delta.n != j - i + 1:
        raise SizeMismatchError(f"delta lives in S_{delta.n}, window ({i},{j}) has size {j - i + 1}")
    return [sigma for sigma in enumerate_involutions(n) if project_involution(sigma, i, j) == delta]


def st1_tableau(matrix: UpperMatrix) -> TwoColumnTableau:
    """Column positions read off the first row: m goes to column 2 iff R_{1,m} = R_{1,m-1} + 1."""
    if not validate(matrix).valid:
        raise DomainError("st1_tableau needs a valid rank matrix")
    first_row = (0,) + matrix.entries[0]
    col2 = tuple(m for m in range(1, matrix.n + 1) if first_row[m] == first_row[m - 1] + 1)
    col1 = tuple(m for m in range(1, matrix.n + 1) if m not in col2)
    return tableau_from_columns(col1, col2)


def hasse_diagram(n: int, k: Optional[int] = None) -> nx.DiGraph:
    """Cover relations of <= on S_n^2 (or on S_n^2(k)); edges point upwards."""
    sigmas = enumerate_involutions(n, k)
    arrays = [rank_array(sigma) for sigma in sigmas]
    order = nx.DiGraph()
    for sigma in sigmas:
        order.add_node(sigma, dim=orbit_dim(sigma), k=sigma.k, label=sigma.text)
    for low, low_array in zip(sigmas, arrays):
        for high, high_array in zip(sigmas, arrays):
            if low != high and np.all(low_array <= high_array):
                order.add_edge(low, high)
    covers = nx.transitive_reduction(order)
    covers.add_nodes_from(order.nodes(data=True))
    logger.debug("hasse_diagram(n=%d, k=%s): %d nodes, %d covers", n, k, covers.number_of_nodes(), covers.number_of_edges())
    return covers
