"""
Tests for shapes, standard tableaux and two-column tableaux.
"""

import os
import sys
import unittest
from math import comb

from hypothesis import given, settings, strategies as st

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from orbitlattice.combinatorics.tableaux import (
    Shape,
    StandardTableau,
    TwoColumnTableau,
    enumerate_standard,
    enumerate_two_column,
    hook_count,
    parse_two_column,
    partitions,
    tableau_from_columns,
)
from orbitlattice.errors import DomainError, ParseError, TableauValidationError


# ---------------------------------------------------------------------------
# Shapes
# ---------------------------------------------------------------------------
class TestShape(unittest.TestCase):

    def test_two_column_shape(self):
        shape = Shape.two_column(5, 2)
        self.assertEqual(shape.parts, (2, 2, 1))
        self.assertEqual(shape.dual().parts, (3, 2))
        self.assertEqual(shape.n, 5)

    def test_invalid_parameters(self):
        with self.assertRaises(DomainError):
            Shape.two_column(3, 2)
        with self.assertRaises(DomainError):
            Shape.two_column(0, 0)
        with self.assertRaises(DomainError):
            Shape((1, 2))

    def test_partitions_of_four(self):
        self.assertEqual(
            [s.parts for s in partitions(4)],
            [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)],
        )

    def test_hook_count(self):
        self.assertEqual(hook_count(Shape((2, 2, 2))), 5)
        self.assertEqual(hook_count(Shape((2, 1, 1))), 3)
        self.assertEqual(hook_count(Shape((3, 2))), 5)
        self.assertEqual(hook_count(Shape((1,))), 1)

    def test_dual_of_dual_is_identity(self):
        for n in range(1, 13):
            for shape in partitions(n):
                self.assertEqual(shape.dual().dual(), shape, shape)
                self.assertEqual(sum(shape.dual().parts), n)

    def test_two_column_shape_is_dual_of_two_rows(self):
        for n in range(1, 13):
            for k in range(0, n // 2 + 1):
                rows = (n - k, k) if k else (n,)
                self.assertEqual(Shape.two_column(n, k).dual().parts, rows)


# ---------------------------------------------------------------------------
# Two-column tableaux
# ---------------------------------------------------------------------------
class TestTwoColumnTableau(unittest.TestCase):

    def test_valid_eight_point_tableau(self):
        tableau = tableau_from_columns((1, 2, 3, 6), (4, 5, 7, 8))
        self.assertEqual(tableau.n, 8)
        self.assertEqual(tableau.k, 4)
        self.assertEqual(tableau.shape.dual().parts, (4, 4))

    def test_row_condition_is_named(self):
        with self.assertRaises(TableauValidationError) as ctx:
            tableau_from_columns((2, 3), (1, 4))
        self.assertIn("row condition col1[1] < col2[1]", str(ctx.exception))

    def test_rejects_bad_fillings(self):
        with self.assertRaises(TableauValidationError):
            tableau_from_columns((1,), (2, 3))
        with self.assertRaises(TableauValidationError):
            tableau_from_columns((1, 2), (4,))
        with self.assertRaises(TableauValidationError):
            tableau_from_columns((3, 1), (2,))
        with self.assertRaises(TableauValidationError):
            tableau_from_columns((), ())

    def test_text_encoding(self):
        tableau = parse_two_column("1,3,5|2,4")
        self.assertEqual(tableau.col1, (1, 3, 5))
        self.assertEqual(tableau.col2, (2, 4))
        self.assertEqual(tableau.text, "1,3,5|2,4")
        self.assertEqual(parse_two_column("1,2,3").col2, ())

    def test_parse_error(self):
        with self.assertRaises(ParseError):
            parse_two_column("a,b|c")

    def test_column_of(self):
        tableau = parse_two_column("1,3,5|2,4")
        self.assertEqual([tableau.column_of(v) for v in range(1, 6)], [1, 2, 1, 2, 1])

    def test_standard_roundtrip(self):
        tableau = parse_two_column("1,2,4|3,5")
        standard = tableau.to_standard()
        self.assertEqual(standard.rows, ((1, 3), (2, 5), (4,)))
        self.assertEqual(TwoColumnTableau.from_standard(standard), tableau)


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------
class TestEnumeration(unittest.TestCase):

    def test_five_two(self):
        found = [t.text for t in enumerate_two_column(5, 2)]
        self.assertEqual(found, ["1,3,5|2,4", "1,3,4|2,5", "1,2,5|3,4", "1,2,4|3,5", "1,2,3|4,5"])

    def test_shape_222(self):
        found = [t.text for t in enumerate_two_column(6, 3)]
        self.assertEqual(
            found,
            ["1,3,5|2,4,6", "1,3,4|2,5,6", "1,2,5|3,4,6", "1,2,4|3,5,6", "1,2,3|4,5,6"],
        )

    def test_standard_matches_two_column(self):
        for n in range(1, 8):
            for k in range(0, n // 2 + 1):
                standard = enumerate_standard(Shape.two_column(n, k))
                two_column = [t.to_standard() for t in enumerate_two_column(n, k)]
                self.assertEqual(standard, two_column)

    def test_counts_follow_ballot_formula(self):
        for n in range(1, 13):
            for k in range(0, n // 2 + 1):
                expected = comb(n, k) - (comb(n, k - 1) if k else 0)
                self.assertEqual(len(enumerate_two_column(n, k)), expected, (n, k))

    def test_standard_counts_follow_hook_formula(self):
        for n in range(1, 7):
            for shape in partitions(n):
                self.assertEqual(len(enumerate_standard(shape)), hook_count(shape), shape)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=1, max_value=10).flatmap(
        lambda n: st.tuples(st.just(n), st.integers(min_value=0, max_value=n // 2))))
    def test_enumerated_tableaux_are_standard(self, params):
        n, k = params
        tableaux = enumerate_two_column(n, k)
        self.assertEqual(len(tableaux), hook_count(Shape.two_column(n, k)))
        for tableau in tableaux:
            self.assertTrue(all(a < b for a, b in zip(tableau.col1, tableau.col2)))


# ---------------------------------------------------------------------------
# General standard tableaux
# ---------------------------------------------------------------------------
class TestStandardTableau(unittest.TestCase):

    def test_rows_text(self):
        tableau = StandardTableau.from_text("1,3/2/4")
        self.assertEqual(tableau.rows, ((1, 3), (2,), (4,)))
        self.assertEqual(tableau.shape.parts, (2, 1, 1))
        self.assertEqual(tableau.text, "1,2,4|3")

    def test_three_columns_keep_row_text(self):
        tableau = StandardTableau.from_text("1,2,4/3")
        self.assertEqual(tableau.text, "1,2,4/3")
        self.assertEqual(StandardTableau.from_text(tableau.text), tableau)

    def test_rejects_non_standard(self):
        with self.assertRaises(TableauValidationError):
            StandardTableau(((2, 1),))
        with self.assertRaises(TableauValidationError):
            StandardTableau(((1, 3), (2, 4), (5, 6, 7)))
        with self.assertRaises(TableauValidationError):
            StandardTableau(((1, 2), (3, 2)))

    def test_two_column_conversion_refuses_wide_shapes(self):
        with self.assertRaises(DomainError):
            TwoColumnTableau.from_standard(StandardTableau(((1, 2, 3),)))


if __name__ == "__main__":
    unittest.main()
