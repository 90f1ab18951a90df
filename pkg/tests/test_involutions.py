"""
Tests for involutions, sigma_T and the orbit dimension formula.
"""

import os
import sys
import unittest

from hypothesis import given, settings, strategies as st

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from orbitlattice.combinatorics.involutions import (
    Involution,
    count_involutions,
    enumerate_involutions,
    involution_number,
    is_maximal_dimension,
    orbit_dim,
    parse_cycles,
    r_stat,
    sigma_o,
    sigma_of_tableau,
    tableau_of_sigma,
)
from orbitlattice.combinatorics.tableaux import enumerate_two_column, parse_two_column
from orbitlattice.errors import DomainError, NotASigmaImageError, ParseError


@st.composite
def involutions(draw, max_n=9):
    n = draw(st.integers(min_value=1, max_value=max_n))
    order = draw(st.permutations(list(range(1, n + 1))))
    k = draw(st.integers(min_value=0, max_value=n // 2))
    return Involution(n, tuple((order[2 * s], order[2 * s + 1]) for s in range(k)))


# ---------------------------------------------------------------------------
# Values and parsing
# ---------------------------------------------------------------------------
class TestInvolution(unittest.TestCase):

    def test_canonical_form(self):
        sigma = Involution(6, ((4, 3), (6, 1)))
        self.assertEqual(sigma.cycles, ((1, 6), (3, 4)))
        self.assertEqual(sigma.text, "(1,6)(3,4)")
        self.assertEqual(sigma(6), 1)
        self.assertEqual(sigma(2), 2)

    def test_rejects_overlapping_cycles(self):
        with self.assertRaises(DomainError):
            Involution(4, ((1, 2), (2, 3)))
        with self.assertRaises(DomainError):
            Involution(3, ((1, 4),))
        with self.assertRaises(DomainError):
            Involution(3, ((2, 2),))

    def test_parse_cycles(self):
        self.assertEqual(parse_cycles("(3,1)"), Involution(3, ((1, 3),)))
        self.assertEqual(parse_cycles("(1, 4) (2,3)", n=6).n, 6)
        self.assertEqual(parse_cycles("()", n=4), Involution.identity(4))
        self.assertEqual(Involution.identity(4).text, "()")

    def test_parse_errors(self):
        with self.assertRaises(ParseError):
            parse_cycles("()")
        with self.assertRaises(ParseError):
            parse_cycles("(1,2")
        with self.assertRaises(ParseError):
            parse_cycles("(1,2)x")


# ---------------------------------------------------------------------------
# sigma_T
# ---------------------------------------------------------------------------
class TestSigmaOfTableau(unittest.TestCase):

    def test_eight_point_example(self):
        tableau = parse_two_column("1,2,3,6|4,5,7,8")
        self.assertEqual(sigma_of_tableau(tableau), parse_cycles("(1,8)(2,5)(3,4)(6,7)"))

    def test_five_point_examples(self):
        self.assertEqual(sigma_of_tableau(parse_two_column("1,3,5|2,4")).text, "(1,2)(3,4)")
        self.assertEqual(sigma_of_tableau(parse_two_column("1,2,4|3,5")).text, "(2,3)(4,5)")

    def test_inverse(self):
        sigma = parse_cycles("(1,8)(2,5)(3,4)(6,7)")
        self.assertEqual(tableau_of_sigma(sigma).text, "1,2,3,6|4,5,7,8")

    def test_not_an_image(self):
        with self.assertRaises(NotASigmaImageError):
            tableau_of_sigma(parse_cycles("(1,3)(2,4)"))

    def test_roundtrip_and_injectivity(self):
        for n in range(1, 10):
            for k in range(0, n // 2 + 1):
                tableaux = enumerate_two_column(n, k)
                images = {sigma_of_tableau(t) for t in tableaux}
                self.assertEqual(len(images), len(tableaux))
                for tableau in tableaux:
                    self.assertEqual(tableau_of_sigma(sigma_of_tableau(tableau)), tableau)


# ---------------------------------------------------------------------------
# Dimension formula
# ---------------------------------------------------------------------------
class TestOrbitDimension(unittest.TestCase):

    def test_r_stat_seven_point(self):
        sigma = parse_cycles("(1,6)(3,4)(5,7)")
        self.assertEqual([r_stat(sigma, s) for s in (1, 2, 3)], [0, 0, 3])
        self.assertEqual(orbit_dim(sigma), 10)

    def test_r_stat_counts_both_terms(self):
        # (1,3) and (2,5) are nested under (4,6), and (1,3) also ends before 4.
        sigma = parse_cycles("(1,3)(2,5)(4,6)")
        self.assertEqual(r_stat(sigma, 3), 3)
        self.assertEqual(orbit_dim(sigma), 7)

    def test_r_stat_range(self):
        with self.assertRaises(DomainError):
            r_stat(parse_cycles("(1,2)"), 2)

    def test_known_dimensions(self):
        self.assertEqual(orbit_dim(parse_cycles("(1,5)(2,6)(3,4)")), 8)
        self.assertEqual(orbit_dim(parse_cycles("(1,3)(4,6)")), 6)
        self.assertEqual(orbit_dim(parse_cycles("(1,6)(2,5)")), 4)
        self.assertEqual(orbit_dim(parse_cycles("(1,5)(2,4)(3,6)")), 7)
        self.assertEqual(orbit_dim(parse_cycles("(1,4)(2,6)(3,5)")), 7)
        self.assertEqual(orbit_dim(Involution.identity(5)), 0)

    def test_dense_orbits_are_exactly_sigma_t(self):
        for n in range(1, 8):
            for k in range(0, n // 2 + 1):
                images = {sigma_of_tableau(t) for t in enumerate_two_column(n, k)}
                for sigma in enumerate_involutions(n, k):
                    self.assertLessEqual(orbit_dim(sigma), k * (n - k))
                    self.assertEqual(is_maximal_dimension(sigma), sigma in images, sigma)

    @settings(max_examples=200, deadline=None)
    @given(involutions())
    def test_first_statistic_vanishes(self, sigma):
        if sigma.k:
            self.assertEqual(r_stat(sigma, 1), 0)
        self.assertGreaterEqual(orbit_dim(sigma), 0)
        self.assertLessEqual(orbit_dim(sigma), sigma.k * (sigma.n - sigma.k))


# ---------------------------------------------------------------------------
# Minimal involution and enumeration
# ---------------------------------------------------------------------------
class TestEnumeration(unittest.TestCase):

    def test_sigma_o(self):
        self.assertEqual(sigma_o(5, 2).text, "(1,4)(2,5)")
        self.assertEqual(sigma_o(4, 0), Involution.identity(4))
        self.assertEqual(sigma_o(6, 3).text, "(1,4)(2,5)(3,6)")
        with self.assertRaises(DomainError):
            sigma_o(3, 2)

    def test_four_two(self):
        found = [s.text for s in enumerate_involutions(4, 2)]
        self.assertEqual(found, ["(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)"])
        self.assertEqual(enumerate_involutions(3, 0), [Involution.identity(3)])

    def test_involution_numbers(self):
        expected = [1, 2, 4, 10, 26, 76, 232, 764]
        self.assertEqual([involution_number(n) for n in range(1, 9)], expected)
        for n in range(1, 8):
            self.assertEqual(len(enumerate_involutions(n)), expected[n - 1])
            for k in range(0, n // 2 + 1):
                self.assertEqual(len(enumerate_involutions(n, k)), count_involutions(n, k))

    def test_invalid_parameters(self):
        with self.assertRaises(DomainError):
            enumerate_involutions(0)
        with self.assertRaises(DomainError):
            enumerate_involutions(4, 3)


if __name__ == "__main__":
    unittest.main()
