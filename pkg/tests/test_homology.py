"""
Tests for first homology and the Kneser bound.
"""

import itertools

from normalcut.triangulation.homology import Coefficients, homology_h1, kneser_bound
from normalcut.triangulation.model import build_triangulation


class TestHomology:
    """Test H_1 with integer and mod-2 coefficients."""

    def test_solid_torus(self, solid_torus):
        """H_1 of the solid torus is Z."""
        h1 = homology_h1(solid_torus)
        assert h1.free_rank == 1
        assert h1.torsion == ()
        assert h1.describe() == "Z"

    def test_solid_torus_mod2(self, solid_torus):
        """H_1 with Z/2 coefficients has dimension 1."""
        h1 = homology_h1(solid_torus, Coefficients.MOD2)
        assert h1.coefficient_field_dim == 1
        assert h1.describe() == "Z/2"

    def test_ball_is_trivial(self, ball):
        """A single tetrahedron has trivial H_1."""
        h1 = homology_h1(ball)
        assert h1.free_rank == 0
        assert h1.describe() == "0"

    def test_closed_sphere_is_trivial(self, closed_sphere):
        """The doubled tetrahedron is the 3-sphere."""
        assert homology_h1(closed_sphere).describe() == "0"
        assert homology_h1(closed_sphere, Coefficients.MOD2).coefficient_field_dim == 0

    def test_trefoil_complement(self, trefoil_complement):
        """Every knot exterior has H_1 = Z, which cross-checks the shipped file."""
        assert homology_h1(trefoil_complement).describe() == "Z"
        assert homology_h1(trefoil_complement, Coefficients.MOD2).coefficient_field_dim == 1

    def test_relabel_invariance(self, closed_sphere):
        """Renumbering tetrahedra should not change homology."""
        relabelled = closed_sphere.relabel([1, 0])
        assert homology_h1(relabelled) == homology_h1(closed_sphere)


class TestKneserBound:
    """Test the bound dim H_1(Z/2) + rank H_1(Z) + 6t."""

    def test_solid_torus(self, solid_torus):
        assert kneser_bound(solid_torus) == 8

    def test_ball(self, ball):
        assert kneser_bound(ball) == 6

    def test_closed_sphere(self, closed_sphere):
        assert kneser_bound(closed_sphere) == 12

    def test_trefoil_complement(self, trefoil_complement):
        assert kneser_bound(trefoil_complement) == 26


def _one_tetrahedron_closings():
    """Every way to glue the four faces of one tetrahedron in two pairs."""
    for (a, b), (c, d) in (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))):
        for first in itertools.permutations(range(3)):
            for second in itertools.permutations(range(3)):
                yield build_triangulation(1, [[0, a, 0, b, list(first)], [0, c, 0, d, list(second)]])


class TestTorsion:
    """Test torsion over the census of closed one-tetrahedron gluings."""

    def test_mod2_dimension_counts_even_factors(self):
        """dim H_1(Z/2) = rank H_1 + number of even invariant factors."""
        for tri in _one_tetrahedron_closings():
            integral = homology_h1(tri)
            mod2 = homology_h1(tri, Coefficients.MOD2)
            even = sum(1 for factor in integral.torsion if factor % 2 == 0)
            assert mod2.coefficient_field_dim == integral.free_rank + even

    def test_lens_spaces_appear(self):
        """L(4,1) and L(5,2) both have one-tetrahedron triangulations."""
        seen = {homology_h1(tri).describe() for tri in _one_tetrahedron_closings()}
        assert {"Z/4", "Z/5"} <= seen
