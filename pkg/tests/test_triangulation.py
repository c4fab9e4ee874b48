"""
Tests for triangulation parsing, the skeleton and the boundary surface.
"""

import json

import pytest

from normalcut.triangulation.boundary import boundary_surface, coherent
from normalcut.triangulation.model import Gluing, TriangulationError, parse_triangulation
from normalcut.triangulation.skeleton import build_skeleton, edge_index


def _document(tets, gluings):
    return json.dumps({"tets": tets, "gluings": gluings})


class TestParsing:
    """Test document validation."""

    def test_parse_solid_torus(self, solid_torus):
        """Should store both directions of one identification."""
        assert solid_torus.tet_count == 1
        assert len(solid_torus.gluings) == 2
        assert len(solid_torus.interior_identifications) == 1
        assert solid_torus.boundary_facets == [(0, 1), (0, 2)]

    def test_partner_lookup(self, solid_torus):
        """Should find the gluing leaving a face, None on the boundary."""
        g = solid_torus.partner(0, 3)
        assert (g.tet_b, g.face_b) == (0, 0)
        assert solid_torus.partner(0, 1) is None

    def test_missing_reverse_row_is_filled(self):
        """A single row should define both directions."""
        tri = parse_triangulation(_document(1, [[0, 3, 0, 0, [0, 1, 2]]]))
        assert tri.partner(0, 0) is not None
        assert tri.partner(0, 0).perm() == (3, 0, 1, 2)

    def test_inverse_round_trip(self):
        """Inverting twice should give the original gluing."""
        g = Gluing(0, 1, 2, 3, (2, 0, 1))
        assert g.inverse().inverse() == g

    def test_zero_tetrahedra(self):
        """Should reject an empty triangulation."""
        with pytest.raises(TriangulationError) as exc_info:
            parse_triangulation(_document(0, []))
        assert exc_info.value.location == "tets"

    def test_unknown_key(self):
        """Should reject keys outside the schema."""
        with pytest.raises(TriangulationError):
            parse_triangulation('{"tets": 1, "gluings": [], "name": "x"}')

    def test_not_json(self):
        """Should reject text that is not JSON."""
        with pytest.raises(TriangulationError):
            parse_triangulation("tets: 1")

    def test_tet_out_of_range(self):
        """Should name the offending row."""
        with pytest.raises(TriangulationError) as exc_info:
            parse_triangulation(_document(1, [[0, 0, 1, 0, [0, 1, 2]]]))
        assert exc_info.value.location == "gluings[0]"
        assert "out of range" in exc_info.value.reason

    def test_face_out_of_range(self):
        """Should reject face index 4."""
        with pytest.raises(TriangulationError):
            parse_triangulation(_document(1, [[0, 4, 0, 0, [0, 1, 2]]]))

    def test_vertex_map_not_bijective(self):
        """Should reject a vertex map that repeats an entry."""
        with pytest.raises(TriangulationError) as exc_info:
            parse_triangulation(_document(2, [[0, 0, 1, 0, [0, 0, 1]]]))
        assert "bijection" in exc_info.value.reason

    def test_self_glued_face(self):
        """A face cannot be glued to itself."""
        with pytest.raises(TriangulationError) as exc_info:
            parse_triangulation(_document(1, [[0, 1, 0, 1, [0, 1, 2]]]))
        assert exc_info.value.reason == "self-glued face"

    def test_non_involutive(self):
        """Reverse row must invert the forward row."""
        rows = [[0, 0, 1, 0, [0, 1, 2]], [1, 0, 0, 0, [1, 0, 2]]]
        with pytest.raises(TriangulationError) as exc_info:
            parse_triangulation(_document(2, rows))
        assert exc_info.value.reason == "non-involutive gluing"

    def test_duplicate_gluing(self):
        """A face cannot be glued twice."""
        rows = [[0, 0, 1, 0, [0, 1, 2]], [0, 0, 1, 1, [0, 1, 2]]]
        with pytest.raises(TriangulationError) as exc_info:
            parse_triangulation(_document(2, rows))
        assert "duplicate" in exc_info.value.reason

    def test_document_round_trip(self, closed_sphere):
        """Serialising and parsing should give an equal triangulation."""
        again = parse_triangulation(json.dumps(closed_sphere.to_document()))
        assert again == closed_sphere

    def test_relabel_rejects_bad_order(self, closed_sphere):
        """Order must be a permutation."""
        with pytest.raises(ValueError):
            closed_sphere.relabel([0, 0])


class TestSkeleton:
    """Test identification classes."""

    def test_solid_torus_classes(self, solid_torus):
        """One vertex, three edges of degree 3, 2, 1, three faces."""
        skeleton = build_skeleton(solid_torus)
        assert len(skeleton.vertex_classes) == 1
        assert [e.degree for e in skeleton.edge_classes] == [3, 2, 1]
        assert len(skeleton.face_classes) == 3

    def test_solid_torus_edge_membership(self, solid_torus):
        """Edges 01, 12 and 23 are identified."""
        skeleton = build_skeleton(solid_torus)
        members = {slot for slot, _ in skeleton.edge_classes[0].slots}
        assert members == {(0, edge_index(0, 1)), (0, edge_index(1, 2)), (0, edge_index(2, 3))}

    def test_edge_direction(self, solid_torus):
        """Reversing an edge flips its alignment."""
        skeleton = build_skeleton(solid_torus)
        index, aligned = skeleton.edge_class_of(0, 1, 2)
        back_index, back_aligned = skeleton.edge_class_of(0, 2, 1)
        assert index == back_index
        assert aligned != back_aligned

    def test_trefoil_complement_classes(self, trefoil_complement):
        """One vertex, six edges and nine faces: Euler characteristic 0."""
        skeleton = build_skeleton(trefoil_complement)
        assert len(skeleton.vertex_classes) == 1
        assert len(skeleton.edge_classes) == 6
        assert len(skeleton.face_classes) == 9
        assert sum(e.degree for e in skeleton.edge_classes) == 24

    def test_closed_sphere_classes(self, closed_sphere):
        """Doubling a tetrahedron keeps its 4 vertices and 6 edges."""
        skeleton = build_skeleton(closed_sphere)
        assert len(skeleton.vertex_classes) == 4
        assert len(skeleton.edge_classes) == 6
        assert all(e.degree == 2 for e in skeleton.edge_classes)
        assert len(skeleton.face_classes) == 4

    def test_euler_characteristic_of_ball(self, ball):
        """V - E + F - T of a single tetrahedron is 1."""
        skeleton = build_skeleton(ball)
        chi = (
            len(skeleton.vertex_classes)
            - len(skeleton.edge_classes)
            + len(skeleton.face_classes)
            - ball.tet_count
        )
        assert chi == 1


class TestBoundary:
    """Test the boundary surface."""

    def test_solid_torus_boundary_is_torus(self, solid_torus):
        """Two boundary triangles form one torus."""
        surface = boundary_surface(solid_torus)
        assert len(surface.components) == 1
        component = surface.components[0]
        assert len(component.triangles) == 2
        assert component.euler == 0
        assert component.is_torus

    def test_ball_boundary_is_sphere(self, ball):
        """Four triangles form one sphere."""
        surface = boundary_surface(ball)
        assert len(surface.components) == 1
        assert surface.components[0].euler == 2
        assert surface.components[0].orientable

    def test_trefoil_complement(self, trefoil_complement):
        surface = boundary_surface(trefoil_complement)
        assert len(surface.components) == 1
        assert len(surface.components[0].triangles) == 2
        assert surface.components[0].is_torus

    def test_closed_has_empty_boundary(self, closed_sphere):
        """A closed manifold has no boundary triangles."""
        assert boundary_surface(closed_sphere).is_empty

    def test_coherent_detects_odd_cycle(self):
        """Three pairwise-opposite cells cannot be oriented."""
        constraints = [("a", "b", False), ("b", "c", False), ("c", "a", False)]
        assert coherent(["a", "b", "c"], constraints) is False

    def test_coherent_self_constraint(self):
        """A cell glued to itself with reversed orientation is incoherent."""
        assert coherent(["a"], [("a", "a", False)]) is False
        assert coherent(["a"], [("a", "a", True)]) is True


class TestSkeletonOracles:
    """Cross-check the skeleton against direct recomputation."""

    def test_one_face_glued(self):
        """Eight faces with one identification leave seven classes."""
        tri = parse_triangulation(_document(2, [[0, 0, 1, 0, [0, 1, 2]]]))
        skeleton = build_skeleton(tri)
        assert len(skeleton.face_classes) == 7
        assert len(tri.boundary_facets) == 6

    def test_edge_classes_match_union_find(self, solid_torus):
        """Merge edge slots along each gluing by hand and compare."""
        parent = {(t, e): (t, e) for t in range(solid_torus.tet_count) for e in range(6)}

        def find(slot):
            while parent[slot] != slot:
                slot = parent[slot]
            return slot

        for g in solid_torus.gluings:
            perm = g.perm()
            face = [v for v in range(4) if v != g.face_a]
            for i, u in enumerate(face):
                for v in face[i + 1 :]:
                    a = find((g.tet_a, edge_index(u, v)))
                    b = find((g.tet_b, edge_index(perm[u], perm[v])))
                    parent[a] = b

        expected = {}
        for slot in parent:
            expected.setdefault(find(slot), set()).add(slot)
        skeleton = build_skeleton(solid_torus)
        actual = [{slot for slot, _ in e.slots} for e in skeleton.edge_classes]
        assert sorted(map(sorted, actual)) == sorted(map(sorted, expected.values()))
