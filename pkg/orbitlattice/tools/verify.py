"""Verification suites run by `orbitlattice verify`.

Each suite walks a bounded family of cases and records a failure, with the
smallest input that reproduces it, whenever two computations disagree or a
known value is not reproduced. Suites never raise on a failed check.
"""

import itertools
import logging
import math
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

import numpy as np

from orbitlattice.combinatorics.intersections import (
    codim_one_cases,
    intersect,
    maximal_elements,
    orbital_variety_orbits,
    orbits_below,
    pairwise_table,
)
from orbitlattice.combinatorics.involutions import (
    Involution,
    enumerate_involutions,
    involution_number,
    orbit_dim,
    sigma_o,
    sigma_of_tableau,
    tableau_of_sigma,
)
from orbitlattice.combinatorics.rankmatrix import (
    COND_A,
    COND_C,
    UpperMatrix,
    parse_matrix,
    project,
    project_involution,
    rank_array,
    rank_matrix,
    reconstruct,
    sigma_of_rank_matrix,
    st1_tableau,
    validate,
)
from orbitlattice.combinatorics.rscells import (
    Permutation,
    all_cells,
    cell,
    cell_graph,
    edge_vs_codim,
    rs,
    rs_inverse,
)
from orbitlattice.combinatorics.tableaux import (
    StandardTableau,
    enumerate_two_column,
    parse_two_column,
)
from orbitlattice.config import HARD_N_CAP, get_n_cap
from orbitlattice.errors import CapExceededError, ConsistencyError, DomainError
from orbitlattice.infrastructure.cache import RANK_CACHE
from orbitlattice.tools.oracles import centralizer_dim_oracle

logger = logging.getLogger(__name__)


@dataclass
class SuiteFailure:
    case: str
    detail: str


@dataclass
class VerifySuiteResult:
    name: str
    cases: int = 0
    failures: List[SuiteFailure] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, passed: bool, case: str, detail: str = "") -> bool:
        self.cases += 1
        if not passed:
            self.failures.append(SuiteFailure(case, detail))
        return passed


# ----------------------------------------------------------------------------
# Known values
# ----------------------------------------------------------------------------

FIVE_POINT = {
    "left": "1,3,5|2,4",
    "right": "1,2,4|3,5",
    "left_rank": "0,1,1,2,2;0,0,0,1,1;0,0,0,1,1;0,0,0,0,0;0,0,0,0,0",
    "right_rank": "0,0,1,1,2;0,0,1,1,2;0,0,0,0,1;0,0,0,0,1;0,0,0,0,0",
    "meet": "0,0,1,1,2;0,0,0,1,1;0,0,0,0,1;0,0,0,0,0;0,0,0,0,0",
    "components": [("(1,3)(2,5)", 4, 2), ("(1,4)(3,5)", 4, 2), ("(1,5)(2,4)", 4, 2)],
}

SIX_POINT = {
    "left": "1,2,4,5|3,6",
    "right": "1,3,4,6|2,5",
    "left_rank": "0,0,1,1,1,2;0,0,1,1,1,2;0,0,0,0,0,1;0,0,0,0,0,1;0,0,0,0,0,1;0,0,0,0,0,0",
    "right_rank": "0,1,1,1,2,2;0,0,0,0,1,1;0,0,0,0,1,1;0,0,0,0,1,1;0,0,0,0,0,0;0,0,0,0,0,0",
    "meet": "0,0,1,1,1,2;0,0,0,0,1,1;0,0,0,0,0,1;0,0,0,0,0,1;0,0,0,0,0,0;0,0,0,0,0,0",
    "components": [("(1,3)(4,6)", 6, 2), ("(1,6)(2,5)", 4, 4)],
}

# Tableaux of shape (2,2,2), numbered as in the usual drawing of this example.
SHAPE_222 = {
    1: "1,2,3|4,5,6",
    2: "1,2,4|3,5,6",
    3: "1,3,4|2,5,6",
    4: "1,2,5|3,4,6",
    5: "1,3,5|2,4,6",
}
SHAPE_222_CELL_EDGES = {(1, 2, 3), (2, 4, 4), (2, 3, 2), (4, 5, 2), (3, 5, 4)}
SHAPE_222_CODIM_ONE = {(1, 2), (1, 5), (2, 3), (2, 4), (3, 5), (4, 5)}
SHAPE_222_CODIM_TWO = {(1, 3), (1, 4), (2, 5), (3, 4)}
SHAPE_222_TWO_FIVE = ["(1,3)(2,5)(4,6)", "(1,4)(2,6)(3,5)", "(1,5)(2,4)(3,6)"]

CALIBRATION_TABLEAU = "1,3/2/4"
CALIBRATION_CELL = [(2, 4, 3, 1), (4, 2, 1, 3), (4, 2, 3, 1)]
CALIBRATION_ORBITS = ["(1,3)", "(1,4)", "(2,3)", "(2,4)"]


def _components(report) -> List[tuple]:
    return [(c.sigma.text, c.dim, c.codim) for c in report.components]


# ----------------------------------------------------------------------------
# Snapshot suites
# ----------------------------------------------------------------------------

def _snapshot(known: dict, violation: str, result: VerifySuiteResult) -> None:
    left, right = parse_two_column(known["left"]), parse_two_column(known["right"])
    left_rank = rank_matrix(sigma_of_tableau(left))
    right_rank = rank_matrix(sigma_of_tableau(right))
    result.check(left_rank == parse_matrix(known["left_rank"]), known["left"], "rank matrix of left")
    result.check(right_rank == parse_matrix(known["right_rank"]), known["right"], "rank matrix of right")
    report = intersect(left, right)
    case = f"{known['left']} / {known['right']}"
    result.check(report.meet == parse_matrix(known["meet"]), case, f"meet {report.meet.text}")
    result.check(validate(report.meet).has(violation, 1, 3), case, f"expected a {violation} violation at (1,3)")
    result.check(not report.irreducible, case, "expected a reducible intersection")
    result.check(_components(report) == known["components"], case, f"components {_components(report)}")


def suite_five_point_snapshot(n_max: int, result: VerifySuiteResult) -> None:
    if n_max >= 5:
        _snapshot(FIVE_POINT, COND_C, result)


def suite_six_point_snapshot(n_max: int, result: VerifySuiteResult) -> None:
    if n_max >= 6:
        _snapshot(SIX_POINT, COND_A, result)


def suite_shape_222_snapshot(n_max: int, result: VerifySuiteResult) -> None:
    if n_max < 6:
        return
    tableaux = {idx: parse_two_column(text) for idx, text in SHAPE_222.items()}
    number = {t.to_standard(): idx for idx, t in tableaux.items()}

    for idx, base in tableaux.items():
        edges = {
            (min(number[a], number[b]), max(number[a], number[b]), k)
            for a, b, k in cell_graph(base.to_standard()).edges
        }
        result.check(edges == SHAPE_222_CELL_EDGES, f"cellgraph T{idx}", f"edges {sorted(edges)}")

    table = pairwise_table(6, 3)
    index = {t: number[t.to_standard()] for t in table.tableaux}
    for codim, expected in ((1, SHAPE_222_CODIM_ONE), (2, SHAPE_222_CODIM_TWO)):
        found = {tuple(sorted((index[a], index[b]))) for a, b in table.pairs_with_codim(codim)}
        result.check(found == expected, f"codim {codim} pairs", f"found {sorted(found)}")
    for a, b in SHAPE_222_CODIM_TWO:
        cell_ab = table.cell(tableaux[a], tableaux[b])
        result.check(cell_ab.max_dim == 7, f"T{a} / T{b}", f"max dim {cell_ab.max_dim}")

    one_five = intersect(tableaux[1], tableaux[5])
    result.check(
        _components(one_five) == [("(1,5)(2,6)(3,4)", 8, 1)],
        "T1 / T5", f"components {_components(one_five)}",
    )
    two_five = intersect(tableaux[2], tableaux[5])
    result.check(
        [c.sigma.text for c in two_five.components] == SHAPE_222_TWO_FIVE,
        "T2 / T5", f"components {_components(two_five)}",
    )


def suite_cell_calibration(n_max: int, result: VerifySuiteResult) -> None:
    if n_max < 4:
        return
    tableau = StandardTableau.from_text(CALIBRATION_TABLEAU)
    members = [w.values for w in cell(tableau)]
    result.check(members == CALIBRATION_CELL, CALIBRATION_TABLEAU, f"cell {members}")
    orbits = [s.text for s in orbital_variety_orbits(parse_two_column(tableau.text))]
    result.check(orbits == CALIBRATION_ORBITS, tableau.text, f"orbits {orbits}")


# ----------------------------------------------------------------------------
# Exhaustive suites
# ----------------------------------------------------------------------------

def suite_rank_matrix_characterization(n_max: int, result: VerifySuiteResult) -> None:
    for n in range(1, min(n_max, 7) + 1):
        sigmas, stacked = RANK_CACHE.stack(n)
        result.check(len(sigmas) == involution_number(n), f"n={n}", f"{len(sigmas)} involutions")
        flat = {arr.tobytes() for arr in stacked}
        result.check(len(flat) == len(sigmas), f"n={n}", "sigma -> R_sigma is not injective")
        for sigma in sigmas:
            matrix = rank_matrix(sigma)
            if not result.check(validate(matrix).valid, sigma.text, "validate rejects R_sigma"):
                continue
            result.check(sigma_of_rank_matrix(matrix) == sigma, sigma.text, "roundtrip through R_sigma")


def suite_meet_membership(n_max: int, result: VerifySuiteResult) -> None:
    """validate() and inclusion-exclusion agree on every meet of two rank matrices."""
    for n in range(1, min(n_max, 7) + 1):
        sigmas, stacked = RANK_CACHE.stack(n)
        for a, b in itertools.combinations(range(len(sigmas)), 2):
            matrix = UpperMatrix.from_array(np.minimum(stacked[a], stacked[b]))
            valid = validate(matrix).valid
            rebuilt = reconstruct(matrix) is not None
            result.check(valid == rebuilt, f"{sigmas[a]} / {sigmas[b]}", f"validate={valid} rebuild={rebuilt}")


def suite_dimension_oracle(n_max: int, result: VerifySuiteResult) -> None:
    for n in range(1, min(n_max, 6) + 1):
        for sigma in enumerate_involutions(n):
            formula, oracle = orbit_dim(sigma), centralizer_dim_oracle(sigma)
            result.check(formula == oracle, f"{sigma} n={n}", f"formula {formula}, oracle {oracle}")


def suite_tableau_roundtrip(n_max: int, result: VerifySuiteResult) -> None:
    for n in range(1, n_max + 1):
        for k in range(0, n // 2 + 1):
            seen = set()
            for tableau in enumerate_two_column(n, k):
                sigma = sigma_of_tableau(tableau)
                seen.add(sigma)
                result.check(tableau_of_sigma(sigma) == tableau, tableau.text, f"sigma {sigma}")
                result.check(orbit_dim(sigma) == k * (n - k), tableau.text, f"dim {orbit_dim(sigma)}")
                result.check(st1_tableau(rank_matrix(sigma)) == tableau, tableau.text, "st1 tableau")
            result.check(len(seen) == len(enumerate_two_column(n, k)), f"n={n} k={k}", "sigma_T not injective")
            if n <= 8:
                top = max(orbit_dim(sigma) for sigma in RANK_CACHE.involutions(n, k))
                result.check(top == k * (n - k), f"n={n} k={k}", f"largest orbit dim {top}")


def suite_minimal_orbit(n_max: int, result: VerifySuiteResult) -> None:
    for n in range(1, min(n_max, 8) + 1):
        for k in range(0, n // 2 + 1):
            bottom = RANK_CACHE.rank_array(sigma_o(n, k))
            for sigma in RANK_CACHE.involutions(n, k):
                result.check(bool(np.all(bottom <= RANK_CACHE.rank_array(sigma))), f"{sigma} n={n}",
                             "sigma_o(k) is not below")
            tableaux = enumerate_two_column(n, k)
            for left, right in itertools.combinations(tableaux, 2):
                report = intersect(left, right)
                below = all(np.all(bottom <= RANK_CACHE.rank_array(c.sigma)) for c in report.components)
                result.check(bool(report.components) and below, f"{left.text} / {right.text}",
                             "empty intersection or sigma_o(k) not below a component")


def suite_small_n_irreducible(n_max: int, result: VerifySuiteResult) -> None:
    """Pairs of equal rank meet irreducibly for n <= 4; mixed ranks need not."""
    for n in range(1, min(n_max, 4) + 1):
        for k in range(0, n // 2 + 1):
            for left, right in itertools.combinations(RANK_CACHE.involutions(n, k), 2):
                result.check(intersect(left, right).irreducible, f"{left} / {right} n={n}", "reducible")


def suite_main_theorem(n_max: int, result: VerifySuiteResult) -> None:
    """Irreducible iff the meet is a rank matrix; components are the maximal orbits below the meet; symmetric."""
    for n in range(1, min(n_max, 7) + 1):
        for k in range(0, n // 2 + 1):
            for left, right in itertools.combinations_with_replacement(enumerate_two_column(n, k), 2):
                case = f"{left.text} / {right.text}"
                try:
                    report = intersect(left, right)
                except ConsistencyError as exc:
                    result.check(False, case, str(exc))
                    continue
                tops = [c.sigma for c in report.components]
                result.check(tops == maximal_elements(tops), case, "components are not an antichain")
                top_arrays = np.stack([RANK_CACHE.rank_array(top) for top in tops])
                for lower in orbits_below(report.meet):
                    covered = np.all(RANK_CACHE.rank_array(lower) <= top_arrays, axis=(1, 2)).any()
                    result.check(bool(covered), case, f"{lower} is below the meet but under no component")
                swapped = [c.sigma for c in intersect(right, left).components]
                result.check(tops == swapped, case, "intersection is not symmetric")


def suite_order_axioms(n_max: int, result: VerifySuiteResult) -> None:
    """Reflexive, antisymmetric, transitive; dimension strictly increases along strict relations."""
    for n in range(1, min(n_max, 7) + 1):
        sigmas, stacked = RANK_CACHE.stack(n)
        flat = stacked.reshape(len(sigmas), -1)
        below = np.all(flat[:, None, :] <= flat[None, :, :], axis=2)
        result.check(bool(np.all(np.diag(below))), f"n={n}", "not reflexive")
        both = below & below.T
        np.fill_diagonal(both, False)
        result.check(not both.any(), f"n={n}", "not antisymmetric")
        through = (below.astype(np.int64) @ below.astype(np.int64)) > 0
        result.check(not np.any(through & ~below), f"n={n}", "not transitive")
        dims = np.array([orbit_dim(sigma) for sigma in sigmas])
        strict = below.copy()
        np.fill_diagonal(strict, False)
        low, high = np.nonzero(strict & ~(dims[:, None] < dims[None, :]))
        case = f"{sigmas[low[0]]} < {sigmas[high[0]]}" if len(low) else f"n={n}"
        result.check(len(low) == 0, case, "dimension does not increase along a strict relation")


def suite_disjoint_additivity(n_max: int, result: VerifySuiteResult) -> None:
    for n in range(1, min(n_max, 6) + 1):
        for sigma in enumerate_involutions(n):
            whole = rank_array(sigma)
            for size in range(1, sigma.k):
                for part in itertools.combinations(sigma.cycles, size):
                    rest = tuple(c for c in sigma.cycles if c not in part)
                    total = rank_array(Involution(n, part)) + rank_array(Involution(n, rest))
                    result.check(bool(np.array_equal(whole, total)), f"{sigma} = {part} * {rest}", "not additive")


def suite_projection(n_max: int, result: VerifySuiteResult) -> None:
    for n in range(1, min(n_max, 6) + 1):
        for sigma in enumerate_involutions(n):
            matrix = rank_matrix(sigma)
            for i in range(1, n + 1):
                for j in range(i, n + 1):
                    result.check(
                        project(matrix, i, j) == rank_matrix(project_involution(sigma, i, j)),
                        f"{sigma} window ({i},{j})", "projection does not commute with R",
                    )


def suite_propagation(n_max: int, result: VerifySuiteResult) -> None:
    """A rank step between columns j-1 and j persists in every higher row, and dually."""
    for n in range(1, min(n_max, 7) + 1):
        for sigma in enumerate_involutions(n):
            padded = np.zeros((n + 2, n + 2), dtype=np.int64)
            padded[1:n + 1, 1:n + 1] = rank_array(sigma)
            col_step = padded[1:n + 1, 1:n + 1] - padded[1:n + 1, 0:n]
            row_step = padded[1:n + 1, 1:n + 1] - padded[2:n + 2, 1:n + 1]
            # Column steps never grow going down, row steps never shrink going right.
            col_ok = np.all(np.minimum.accumulate(col_step, axis=0) == col_step)
            row_ok = np.all(np.maximum.accumulate(row_step, axis=1) == row_step)
            result.check(bool(col_ok and row_ok), f"{sigma} n={n}", "rank steps do not propagate")


def suite_rs_roundtrip(n_max: int, result: VerifySuiteResult) -> None:
    for n in range(1, min(n_max, 6) + 1):
        for values in itertools.permutations(range(1, n + 1)):
            w = Permutation(values)
            p, q = rs(w)
            result.check(rs_inverse(p, q) == w, w.text, "rs_inverse(rs(w)) != w")
    for n in range(1, min(n_max, 5) + 1):
        cells = all_cells(n)
        members = [w for group in cells.values() for w in group]
        result.check(len(members) == len(set(members)), f"n={n}", "cells overlap")
        result.check(len(members) == math.factorial(n), f"n={n}", "cells miss permutations")


def suite_codim_one_irreducible(n_max: int, result: VerifySuiteResult) -> None:
    for case in codim_one_cases(min(n_max, 7)):
        result.check(case.irreducible, f"{case.left.text} / {case.right.text}", "codim 1 but reducible")


def suite_cell_edge_soundness(n_max: int, result: VerifySuiteResult) -> None:
    for n in range(2, min(n_max, 6) + 1):
        for k in range(1, n // 2 + 1):
            report = edge_vs_codim(n, k)
            for pair in report.pairs:
                if pair.joined:
                    result.check(pair.codim == 1, f"{pair.left.text} / {pair.right.text}",
                                 f"joined by {pair.labels} but codim {pair.codim}")
            if k <= 2:
                result.check(not report.discrepancies, f"n={n} k={k}",
                             f"{len(report.discrepancies)} codim-1 pair(s) not joined in any cell graph")


SUITES: Dict[str, Callable[[int, VerifySuiteResult], None]] = {
    "five-point-snapshot": suite_five_point_snapshot,
    "six-point-snapshot": suite_six_point_snapshot,
    "shape-222-snapshot": suite_shape_222_snapshot,
    "cell-calibration": suite_cell_calibration,
    "rank-matrix-characterization": suite_rank_matrix_characterization,
    "meet-membership": suite_meet_membership,
    "dimension-oracle": suite_dimension_oracle,
    "tableau-roundtrip": suite_tableau_roundtrip,
    "minimal-orbit": suite_minimal_orbit,
    "small-n-irreducible": suite_small_n_irreducible,
    "main-theorem": suite_main_theorem,
    "order-axioms": suite_order_axioms,
    "disjoint-additivity": suite_disjoint_additivity,
    "projection": suite_projection,
    "propagation": suite_propagation,
    "rs-roundtrip": suite_rs_roundtrip,
    "codim-one-irreducible": suite_codim_one_irreducible,
    "cell-edge-soundness": suite_cell_edge_soundness,
}


def check_cap(n: int, unsafe: bool = False) -> None:
    """Refuses exhaustive runs above the soft cap (unless unsafe) or the hard cap."""
    if n > HARD_N_CAP:
        raise CapExceededError(f"n={n} is above the hard cap {HARD_N_CAP}")
    cap = get_n_cap()
    if n > cap and not unsafe:
        raise CapExceededError(f"n={n} is above the cap {cap}; pass --unsafe-no-cap to run anyway")


def run_verify(n_max: int, suites: Optional[List[str]] = None, unsafe: bool = False) -> List[VerifySuiteResult]:
    """Runs the named suites (all by default) in a fixed order."""
    if n_max < 1:
        raise DomainError(f"n_max must be positive, got {n_max}")
    check_cap(n_max, unsafe)
    names = list(SUITES) if not suites else suites
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        raise DomainError(f"unknown suite(s) {unknown}; known: {', '.join(SUITES)}")

    results = []
    for name in SUITES:
        if name not in names:
            continue
        result = VerifySuiteResult(name)
        started = time.perf_counter()
        SUITES[name](n_max, result)
        result.seconds = time.perf_counter() - started
        logger.info("suite %s: %d cases, %d failures, %.2fs", name, result.cases, len(result.failures), result.seconds)
        results.append(result)
    return results
