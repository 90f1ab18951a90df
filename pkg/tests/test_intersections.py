"""
Tests for closures, meets and intersection components of orbital varieties.
"""

import os
import sys
import unittest

from hypothesis import given, settings, strategies as st

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from orbitlattice.combinatorics.intersections import (
    BASELINE_LEFT_ORBIT,
    BASELINE_ORBITAL_VARIETY,
    closure_set,
    codim_one_cases,
    codim_one_graph,
    intersect,
    maximal_elements,
    meet,
    orbital_variety_orbits,
    orbits_below,
    pairwise_table,
)
from orbitlattice.combinatorics.involutions import (
    Involution,
    enumerate_involutions,
    parse_cycles,
    sigma_of_tableau,
)
from orbitlattice.combinatorics.rankmatrix import (
    UpperMatrix,
    involution_leq,
    parse_matrix,
    rank_matrix,
)
from orbitlattice.combinatorics.tableaux import enumerate_two_column, parse_two_column
from orbitlattice.errors import SizeMismatchError

T1 = parse_two_column("1,2,3|4,5,6")
T2 = parse_two_column("1,2,4|3,5,6")
T3 = parse_two_column("1,3,4|2,5,6")
T4 = parse_two_column("1,2,5|3,4,6")
T5 = parse_two_column("1,3,5|2,4,6")
SHAPE_222 = {T1: 1, T2: 2, T3: 3, T4: 4, T5: 5}


def _components(report):
    return [(c.sigma.text, c.dim, c.codim) for c in report.components]


def _numbered(pairs):
    return {tuple(sorted((SHAPE_222[a], SHAPE_222[b]))) for a, b in pairs}


# ---------------------------------------------------------------------------
# Meets and closures
# ---------------------------------------------------------------------------
class TestClosure(unittest.TestCase):

    def test_meet(self):
        a = rank_matrix(parse_cycles("(1,2)", n=3))
        b = rank_matrix(parse_cycles("(2,3)", n=3))
        self.assertEqual(meet(a, b), rank_matrix(parse_cycles("(1,3)", n=3)))
        with self.assertRaises(SizeMismatchError):
            meet(a, rank_matrix(parse_cycles("(1,2)")))

    def test_closure_of_a_transposition(self):
        self.assertEqual(
            closure_set(parse_cycles("(1,2)")),
            [Involution.identity(2), parse_cycles("(1,2)")],
        )

    def test_closure_matches_brute_force(self):
        for n in range(1, 6):
            everything = enumerate_involutions(n)
            for sigma in everything:
                expected = [other for other in everything if involution_leq(other, sigma)]
                self.assertEqual(closure_set(sigma), expected, sigma)

    def test_orbits_below_zero_matrix(self):
        self.assertEqual(orbits_below(UpperMatrix.zeros(4)), [Involution.identity(4)])

    def test_maximal_elements(self):
        sigmas = [
            Involution.identity(3),
            parse_cycles("(1,3)", n=3),
            parse_cycles("(1,2)", n=3),
            parse_cycles("(2,3)", n=3),
        ]
        self.assertEqual([s.text for s in maximal_elements(sigmas)], ["(1,2)", "(2,3)"])
        self.assertEqual(maximal_elements([]), [])

    def test_orbital_variety_orbits(self):
        found = orbital_variety_orbits(parse_two_column("1,2,4|3"))
        self.assertEqual([s.text for s in found], ["(1,3)", "(1,4)", "(2,3)", "(2,4)"])


# ---------------------------------------------------------------------------
# Single intersections
# ---------------------------------------------------------------------------
class TestIntersect(unittest.TestCase):

    def test_five_point_pair(self):
        report = intersect(parse_two_column("1,3,5|2,4"), parse_two_column("1,2,4|3,5"))
        self.assertEqual(
            report.meet,
            parse_matrix("0,0,1,1,2;0,0,0,1,1;0,0,0,0,1;0,0,0,0,0;0,0,0,0,0"),
        )
        self.assertFalse(report.irreducible)
        self.assertEqual(
            _components(report),
            [("(1,3)(2,5)", 4, 2), ("(1,4)(3,5)", 4, 2), ("(1,5)(2,4)", 4, 2)],
        )
        self.assertEqual(report.ambient_dim, 6)
        self.assertEqual(report.codim, 2)
        self.assertEqual(report.baseline, BASELINE_ORBITAL_VARIETY)
        self.assertEqual(report.left_label, "1,3,5|2,4")

    def test_six_point_pair(self):
        report = intersect(parse_two_column("1,2,4,5|3,6"), parse_two_column("1,3,4,6|2,5"))
        self.assertEqual(
            report.meet.rows(),
            [
                [0, 0, 1, 1, 1, 2],
                [0, 0, 0, 0, 1, 1],
                [0, 0, 0, 0, 0, 1],
                [0, 0, 0, 0, 0, 1],
                [0, 0, 0, 0, 0, 0],
                [0, 0, 0, 0, 0, 0],
            ],
        )
        self.assertEqual(_components(report), [("(1,3)(4,6)", 6, 2), ("(1,6)(2,5)", 4, 4)])
        self.assertEqual(report.codim, 2)

    def test_self_intersection(self):
        for tableau in enumerate_two_column(6, 2):
            report = intersect(tableau, tableau)
            self.assertTrue(report.irreducible)
            self.assertEqual(report.codim, 0)
            self.assertEqual(report.components[0].sigma, sigma_of_tableau(tableau))

    def test_shape_222_one_five(self):
        report = intersect(T1, T5)
        self.assertEqual(_components(report), [("(1,5)(2,6)(3,4)", 8, 1)])
        self.assertEqual(
            report.meet.rows()[:3],
            [[0, 0, 0, 1, 2, 3], [0, 0, 0, 1, 1, 2], [0, 0, 0, 1, 1, 1]],
        )
        self.assertTrue(report.irreducible)

    def test_shape_222_two_five(self):
        report = intersect(T2, T5)
        self.assertEqual(
            [c.sigma.text for c in report.components],
            ["(1,3)(2,5)(4,6)", "(1,4)(2,6)(3,5)", "(1,5)(2,4)(3,6)"],
        )
        self.assertEqual({c.dim for c in report.components}, {7})
        self.assertEqual(report.codim, 2)

    def test_orbits_of_different_rank(self):
        report = intersect(parse_cycles("(1,2)", n=3), Involution.identity(3))
        self.assertEqual(report.baseline, BASELINE_LEFT_ORBIT)
        self.assertEqual(report.ambient_dim, 2)
        self.assertEqual(_components(report), [("()", 0, 2)])
        self.assertTrue(report.irreducible)
        self.assertIsNone(report.left_label)

    def test_mixed_rank_meet_can_be_reducible(self):
        report = intersect(parse_cycles("(2,3)", n=4), parse_cycles("(1,2)(3,4)"))
        self.assertEqual(report.meet, parse_matrix("0,0,1,1;0,0,0,1;0,0,0,0;0,0,0,0"))
        self.assertFalse(report.irreducible)
        self.assertEqual(report.baseline, BASELINE_LEFT_ORBIT)
        self.assertEqual(_components(report), [("(1,3)", 2, 1), ("(2,4)", 2, 1)])

    def test_equal_rank_meets_are_irreducible_up_to_four(self):
        for n in range(1, 5):
            for k in range(0, n // 2 + 1):
                sigmas = enumerate_involutions(n, k)
                for left in sigmas:
                    for right in sigmas:
                        self.assertTrue(intersect(left, right).irreducible, (left.text, right.text))

    def test_components_dominate_everything_below_the_meet(self):
        for n in range(1, 7):
            for k in range(0, n // 2 + 1):
                tableaux = enumerate_two_column(n, k)
                for left in tableaux:
                    for right in tableaux:
                        report = intersect(left, right)
                        tops = [c.sigma for c in report.components]
                        for lower in orbits_below(report.meet):
                            self.assertTrue(
                                any(involution_leq(lower, top) for top in tops),
                                (left.text, right.text, lower.text),
                            )

    def test_size_mismatch(self):
        with self.assertRaises(SizeMismatchError):
            intersect(parse_cycles("(1,2)"), parse_cycles("(1,2)", n=3))

    @settings(max_examples=60, deadline=None)
    @given(st.integers(min_value=2, max_value=7).flatmap(
        lambda n: st.tuples(
            st.sampled_from(enumerate_involutions(n)),
            st.sampled_from(enumerate_involutions(n)),
        )))
    def test_symmetric_components(self, pair):
        left, right = pair
        forward = intersect(left, right)
        backward = intersect(right, left)
        self.assertEqual(
            [c.sigma for c in forward.components],
            [c.sigma for c in backward.components],
        )
        self.assertEqual(forward.meet, backward.meet)
        for component in forward.components:
            self.assertTrue(involution_leq(component.sigma, left))
            self.assertTrue(involution_leq(component.sigma, right))


# ---------------------------------------------------------------------------
# Pairwise tables
# ---------------------------------------------------------------------------
class TestPairwiseTable(unittest.TestCase):

    def test_shape_222_codimensions(self):
        table = pairwise_table(6, 3)
        self.assertEqual(
            _numbered(table.pairs_with_codim(1)),
            {(1, 2), (1, 5), (2, 3), (2, 4), (3, 5), (4, 5)},
        )
        self.assertEqual(_numbered(table.pairs_with_codim(2)), {(1, 3), (1, 4), (2, 5), (3, 4)})
        for a, b in ((T1, T3), (T1, T4), (T2, T5), (T3, T4)):
            self.assertEqual(table.cell(a, b).max_dim, 7)
            self.assertEqual(table.cell(b, a), table.cell(a, b))

    def test_four_points_always_irreducible(self):
        for k in range(0, 3):
            table = pairwise_table(4, k)
            self.assertTrue(all(cell.irreducible for cell in table.cells.values()))

    def test_threads_do_not_change_the_table(self):
        sequential = pairwise_table(6, 2, threads=1)
        threaded = pairwise_table(6, 2, threads=2)
        self.assertEqual(sequential, threaded)

    def test_codim_one_graph(self):
        graph = codim_one_graph(6, 3)
        self.assertEqual(graph.number_of_nodes(), 5)
        self.assertEqual(graph.number_of_edges(), 6)
        self.assertTrue(graph.has_edge("1,2,3|4,5,6", "1,3,5|2,4,6"))
        self.assertFalse(graph.has_edge("1,2,4|3,5,6", "1,3,5|2,4,6"))

    def test_codim_one_intersections_are_irreducible(self):
        cases = codim_one_cases(6)
        self.assertTrue(cases)
        self.assertTrue(all(case.irreducible for case in cases))
        self.assertEqual(len([c for c in cases if (c.n, c.k) == (6, 3)]), 6)


if __name__ == "__main__":
    unittest.main()
