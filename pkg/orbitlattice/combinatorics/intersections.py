"""Intersections of B-orbit closures and of orbital varieties.

The closure of B.N_sigma is the union of the B.N_s with R_s <= R_sigma, so
the intersection of two closures is the union of the B.N_s with
R_s <= meet(R_sigma, R_sigma'). Its irreducible components are the closures
of the <=-maximal such s, and it is irreducible exactly when the meet is
itself a rank matrix.
"""

import logging
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Tuple, Union

import networkx as nx
import numpy as np

from orbitlattice.combinatorics.involutions import (
    Involution,
    is_maximal_dimension,
    orbit_dim,
    sigma_of_tableau,
)
from orbitlattice.combinatorics.rankmatrix import (
    UpperMatrix,
    reconstruct,
    validate,
)
from orbitlattice.combinatorics.tableaux import TwoColumnTableau, enumerate_two_column
from orbitlattice.errors import ConsistencyError, SizeMismatchError
from orbitlattice.infrastructure.cache import RANK_CACHE
from orbitlattice.infrastructure.workers import parallel_map

logger = logging.getLogger(__name__)

Orbit = Union[Involution, TwoColumnTableau]

BASELINE_ORBITAL_VARIETY = "orbital_variety"
BASELINE_LEFT_ORBIT = "left_orbit"


def meet(a: UpperMatrix, b: UpperMatrix) -> UpperMatrix:
    """Entrywise minimum R_{sigma,sigma'}."""
    if a.n != b.n:
        raise SizeMismatchError(f"cannot meet a {a.n}x{a.n} matrix with a {b.n}x{b.n} one")
    return UpperMatrix.from_array(np.minimum(a.array(), b.array()))


def orbits_below(bound: UpperMatrix) -> List[Involution]:
    """Every s in S_n^2 with R_s <= bound, ordered by (L(s), cycles).

    Backtracks over partial matchings; adding a transposition only raises
    rank entries, so a branch is cut as soon as it leaves the bound.
    """
    n = bound.n
    limit = bound.array()
    current = np.zeros_like(limit)
    used = [False] * (n + 2)
    pairs: List[Tuple[int, int]] = []
    found: List[Involution] = []

    def _extend(a: int):
        if a > n:
            found.append(Involution(n, tuple(pairs)))
            return
        if used[a]:
            _extend(a + 1)
            return
        _extend(a + 1)
        for b in range(a + 1, n + 1):
            if used[b]:
                continue
            block = current[:a, b - 1:]
            if np.any(block >= limit[:a, b - 1:]):
                continue
            block += 1
            used[b] = True
            pairs.append((a, b))
            _extend(a + 1)
            pairs.pop()
            used[b] = False
            block -= 1

    _extend(1)
    found.sort(key=lambda sigma: (sigma.k, sigma.cycles))
    return found


def maximal_elements(sigmas: List[Involution]) -> List[Involution]:
    """The <=-maximal members of *sigmas*, sorted by cycles."""
    if not sigmas:
        return []
    arrays = np.stack([RANK_CACHE.rank_array(sigma) for sigma in sigmas])
    maximal = []
    for idx, sigma in enumerate(sigmas):
        above = np.all(arrays >= arrays[idx], axis=(1, 2))
        above[idx] = False
        if not above.any():
            maximal.append(sigma)
    return sorted(maximal, key=lambda sigma: sigma.cycles)


def closure_set(sigma: Involution) -> List[Involution]:
    """All sigma' <= sigma: the B-orbits making up the closure of B.N_sigma."""
    return orbits_below(UpperMatrix.from_array(RANK_CACHE.rank_array(sigma)))


def orbital_variety_orbits(tableau: TwoColumnTableau) -> List[Involution]:
    """The B-orbits of V_T: sigma' <= sigma_T with L(sigma') = L(sigma_T)."""
    sigma = sigma_of_tableau(tableau)
    return [other for other in closure_set(sigma) if other.k == sigma.k]


@dataclass(frozen=True)
class Component:
    sigma: Involution
    dim: int
    codim: int

    @property
    def k(self) -> int:
        return self.sigma.k


@dataclass(frozen=True)
class IntersectionReport:
    left: Involution
    right: Involution
    meet: UpperMatrix
    irreducible: bool
    components: Tuple[Component, ...]
    ambient_dim: int
    baseline: str
    left_label: Optional[str] = None
    right_label: Optional[str] = None

    @property
    def n(self) -> int:
        return self.left.n

    @property
    def max_dim(self) -> int:
        return max(component.dim for component in self.components)

    @property
    def codim(self) -> int:
        """Codimension of the intersection: ambient dimension minus the largest component."""
        return self.ambient_dim - self.max_dim


def _as_involution(value: Orbit) -> Tuple[Involution, Optional[str]]:
    if isinstance(value, TwoColumnTableau):
        return sigma_of_tableau(value), value.text
    return value, None


def intersect(left: Orbit, right: Orbit) -> IntersectionReport:
    """Components of the intersection of two B-orbit closures (or orbital varieties).

    Codimensions are measured inside the closure of the left orbit; when both
    inputs are dense orbits of the same rank this is codim inside V_T.
    """
    left_sigma, left_label = _as_involution(left)
    right_sigma, right_label = _as_involution(right)
    if left_sigma.n != right_sigma.n:
        raise SizeMismatchError(f"n={left_sigma.n} vs n={right_sigma.n}")

    left_rank = RANK_CACHE.rank_array(left_sigma)
    right_rank = RANK_CACHE.rank_array(right_sigma)
    meet_matrix = UpperMatrix.from_array(np.minimum(left_rank, right_rank))
    below = orbits_below(meet_matrix)
    tops = maximal_elements(below)

    ambient = orbit_dim(left_sigma)
    same_variety_kind = (
        left_sigma.k == right_sigma.k
        and is_maximal_dimension(left_sigma)
        and is_maximal_dimension(right_sigma)
    )
    components = tuple(
        Component(sigma, orbit_dim(sigma), ambient - orbit_dim(sigma)) for sigma in tops
    )

    meet_valid = validate(meet_matrix).valid
    irreducible = len(components) == 1
    if irreducible != meet_valid:
        raise ConsistencyError(
            f"{left_sigma} and {right_sigma}: {len(components)} component(s) but validate() says {meet_valid}"
        )
    if irreducible and reconstruct(meet_matrix) != components[0].sigma:
        raise ConsistencyError(f"{left_sigma} and {right_sigma}: unique component does not rebuild the meet")

    logger.debug(
        "intersect %s / %s: %d orbit(s) below the meet, %d component(s)",
        left_sigma, right_sigma, len(below), len(components),
    )
    return IntersectionReport(
        left=left_sigma,
        right=right_sigma,
        meet=meet_matrix,
        irreducible=irreducible,
        components=components,
        ambient_dim=ambient,
        baseline=BASELINE_ORBITAL_VARIETY if same_variety_kind else BASELINE_LEFT_ORBIT,
        left_label=left_label,
        right_label=right_label,
    )


@dataclass(frozen=True)
class TableCell:
    codim: int
    irreducible: bool
    component_count: int
    max_dim: int


@dataclass(frozen=True)
class PairwiseTable:
    n: int
    k: int
    tableaux: Tuple[TwoColumnTableau, ...]
    cells: Dict[Tuple[int, int], TableCell]

    def cell(self, a: TwoColumnTableau, b: TwoColumnTableau) -> TableCell:
        return self.cells[(self.tableaux.index(a), self.tableaux.index(b))]

    def pairs_with_codim(self, codim: int) -> List[Tuple[TwoColumnTableau, TwoColumnTableau]]:
        size = len(self.tableaux)
        return [
            (self.tableaux[a], self.tableaux[b])
            for a in range(size)
            for b in range(a + 1, size)
            if self.cells[(a, b)].codim == codim
        ]


def pairwise_table(n: int, k: int, threads: Optional[int] = None) -> PairwiseTable:
    """Intersections of all pairs of orbital varieties V_T, T of dual shape (n-k, k)."""
    tableaux = tuple(enumerate_two_column(n, k))
    index_pairs = list(combinations_with_replacement(range(len(tableaux)), 2))

    def _cell(pair: Tuple[int, int]) -> TableCell:
        report = intersect(tableaux[pair[0]], tableaux[pair[1]])
        return TableCell(
            codim=report.codim,
            irreducible=report.irreducible,
            component_count=len(report.components),
            max_dim=report.max_dim,
        )

    results = parallel_map(_cell, index_pairs, threads)
    cells: Dict[Tuple[int, int], TableCell] = {}
    for (a, b), cell in zip(index_pairs, results):
        cells[(a, b)] = cell
        cells[(b, a)] = cell
    logger.debug("pairwise_table(n=%d, k=%d): %d cells", n, k, len(index_pairs))
    return PairwiseTable(n=n, k=k, tableaux=tableaux, cells=cells)


def codim_one_graph(n: int, k: int, table: Optional[PairwiseTable] = None) -> nx.Graph:
    """Tableaux of dual shape (n-k, k), joined when V_T and V_S meet in codimension 1."""
    table = table or pairwise_table(n, k)
    graph = nx.Graph()
    graph.add_nodes_from(tableau.text for tableau in table.tableaux)
    graph.add_edges_from((a.text, b.text) for a, b in table.pairs_with_codim(1))
    return graph


@dataclass(frozen=True)
class CodimOneCase:
    n: int
    k: int
    left: TwoColumnTableau
    right: TwoColumnTableau
    irreducible: bool


def codim_one_cases(n_max: int) -> List[CodimOneCase]:
    """Every codimension-1 pair of two-column orbital varieties with n <= n_max."""
    cases = []
    for n in range(1, n_max + 1):
        for k in range(0, n // 2 + 1):
            table = pairwise_table(n, k)
            for a, b in table.pairs_with_codim(1):
                cases.append(CodimOneCase(n, k, a, b, table.cell(a, b).irreducible))
    return cases
