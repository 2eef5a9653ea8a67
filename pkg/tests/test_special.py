"""Tests for permutahedra, the cube and other named examples."""

import pytest

from equivariant_ehrhart.arith import Polynomial
from equivariant_ehrhart.equivariant import equivariant_series, hstar
from equivariant_ehrhart.errors import HypothesisViolated, NotPrime, TooLarge
from equivariant_ehrhart.groups import ClassFunction
from equivariant_ehrhart.hypersimplex import hypersimplex_action
from equivariant_ehrhart.special import (
    hstar_trivial_fixed,
    permutahedron,
    permutahedron_action,
    prime_permutahedron_report,
)


class TestPermutahedron:
    """Tests for the permutahedron builders."""

    def test_vertices(self):
        assert len(permutahedron(4).vertices) == 24
        assert permutahedron(4).dim == 3

    def test_single_point(self):
        assert permutahedron(1).count_lattice_points(5) == 1

    def test_nonpositive(self):
        with pytest.raises(ValueError):
            permutahedron(0)

    def test_actions(self):
        assert permutahedron_action(4).group.order == 4
        assert permutahedron_action(4, symmetric=True).group.order == 24


class TestTrivialFixed:
    """Tests for H* when every rotation fixes a single lattice point."""

    def test_pi3(self, pi3_action, pi3_table):
        expected = Polynomial(
            ClassFunction(pi3_action.group, row) for row in [[1, 1, 1], [4, 1, 1], [1, 1, 1]]
        )
        assert hstar_trivial_fixed(pi3_action, pi3_table) == expected

    def test_default_table(self, pi3_action):
        assert hstar_trivial_fixed(pi3_action)[1].values[0] == 4

    @pytest.mark.parametrize(
        "make_action,clause",
        [
            (lambda: permutahedron_action(3, symmetric=True), "cyclic-rotation"),
            (lambda: permutahedron_action(4), "trivial-fixed"),
            (lambda: hypersimplex_action(2, 4), "trivial-fixed"),
        ],
    )
    def test_hypothesis_clauses(self, make_action, clause):
        with pytest.raises(HypothesisViolated) as exc_info:
            hstar_trivial_fixed(make_action())
        assert exc_info.value.details["clause"] == clause

    def test_full_dimensional(self, square_action):
        with pytest.raises(HypothesisViolated) as exc_info:
            hstar_trivial_fixed(square_action)
        assert exc_info.value.details["clause"] == "codimension-one"


class TestPrimePermutahedron:
    """Tests for h*(Pi_p) rebuilt from rotation orbits of forests."""

    def test_three(self):
        report = prime_permutahedron_report(3)
        assert report.hstar == (1, 4, 1)
        assert report.closed_form == ((1, 0), (1, 1), (1, 0))
        assert report.forest_orbits == 2

    def test_five(self):
        report = prime_permutahedron_report(5)
        assert report.hstar == (1, 286, 1636, 1026, 51)
        assert report.closed_form[1] == (1, 57)
        assert all(h % 5 == 1 for h in report.hstar)

    def test_not_prime(self):
        with pytest.raises(NotPrime):
            prime_permutahedron_report(4)

    def test_too_large(self):
        with pytest.raises(TooLarge):
            prime_permutahedron_report(11)

    @pytest.mark.slow
    def test_five_matches_equivariant_hstar(self):
        action = permutahedron_action(5)
        report = hstar(equivariant_series(action))
        assert report.is_polynomial
        assert report.polynomial == hstar_trivial_fixed(action)
