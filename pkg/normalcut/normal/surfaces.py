"""
Weight, Euler characteristic and trivial surfaces.

Counts are taken on the cell structure a normal surface inherits from the
triangulation: one vertex per point on an edge class, one edge per normal
arc after identification across interior faces, one face per disc.
"""

from enum import Enum
from typing import Optional

from normalcut.normal.coordinates import DISC_TYPES, NormalVector, arc_count, corner_count
from normalcut.normal.matching import MatchingSystem, NotAdmissibleError, is_admissible, matching_system
from normalcut.triangulation.model import Triangulation
from normalcut.triangulation.skeleton import EDGE_VERTICES, SkeletonIndex, build_skeleton


def weight(tri: Triangulation, x: NormalVector, skeleton: Optional[SkeletonIndex] = None) -> int:
    """
    Number of points where the surface meets the 1-skeleton.

    Args:
        tri: Triangulation the vector lives on
        x: Non-negative normal vector (admissibility not required)
        skeleton: Precomputed skeleton (optional)

    Returns:
        Sum over edge classes of the corner count per slot; exact when x
        satisfies the matching equations
    """
    skeleton = skeleton or build_skeleton(tri)
    total = 0
    for edge in skeleton.edge_classes:
        corners = 0
        for (tet, e), _ in edge.slots:
            u, v = EDGE_VERTICES[e]
            corners += corner_count(x, tet, u, v)
        total += corners // edge.degree
    return total


def euler_characteristic(
    tri: Triangulation,
    x: NormalVector,
    sys: Optional[MatchingSystem] = None,
    skeleton: Optional[SkeletonIndex] = None,
) -> int:
    """
    Euler characteristic ``V - E + F`` of the surface described by ``x``.

    Args:
        tri: Triangulation the vector lives on
        x: Admissible normal vector
        sys: Precomputed matching system (optional)
        skeleton: Precomputed skeleton (optional)

    Returns:
        The Euler characteristic

    Raises:
        NotAdmissibleError: If x fails the matching equations or quad condition
    """
    sys = sys or matching_system(tri)
    if not is_admissible(sys, x):
        raise NotAdmissibleError("Euler characteristic needs an admissible vector")

    vertices = weight(tri, x, skeleton)
    faces = sum(x.coords)
    edges = 0
    for tet, face in tri.facets:
        arcs = arc_count(x, tet, face)
        if tri.partner(tet, face) is None:
            edges += 2 * arcs
        else:
            edges += arcs
    return vertices - edges // 2 + faces


def vertex_link(tri: Triangulation, vertex_class: int) -> NormalVector:
    """
    The normal surface linking a vertex class.

    Args:
        tri: A validated triangulation
        vertex_class: Index of the vertex class

    Returns:
        One triangle of type v at every tetrahedron corner in the class
    """
    skeleton = build_skeleton(tri)
    coords = [0] * (DISC_TYPES * tri.tet_count)
    for tet, v in skeleton.vertex_classes[vertex_class]:
        coords[DISC_TYPES * tet + v] += 1
    return NormalVector(tuple(coords))


def is_vertex_linking(tri: Triangulation, x: NormalVector) -> bool:
    """Whether ``x`` has no quads and is a sum of vertex links."""
    if x.is_zero() or any(x.count(t, q) for t in range(x.tet_count) for q in range(4, 7)):
        return False
    skeleton = build_skeleton(tri)
    for members in skeleton.vertex_classes:
        values = {x.count(tet, v) for tet, v in members}
        if len(values) != 1:
            return False
    return True


class SurfaceKind(Enum):
    """Topological type of a connected compact surface."""

    DISK = "disk"
    SPHERE = "sphere"
    PROJECTIVE_PLANE = "projective_plane"
    ANNULUS = "annulus"
    MOBIUS_BAND = "mobius_band"
    TORUS = "torus"
    KLEIN_BOTTLE = "klein_bottle"
    OTHER = "other"


def surface_kind(euler: int, orientable: bool, boundary_curves: int) -> SurfaceKind:
    """
    Classify a connected surface by Euler characteristic, orientability and
    number of boundary curves.
    """
    key = (euler, orientable, boundary_curves)
    table = {
        (1, True, 1): SurfaceKind.DISK,
        (2, True, 0): SurfaceKind.SPHERE,
        (1, False, 0): SurfaceKind.PROJECTIVE_PLANE,
        (0, True, 2): SurfaceKind.ANNULUS,
        (0, False, 1): SurfaceKind.MOBIUS_BAND,
        (0, True, 0): SurfaceKind.TORUS,
        (0, False, 0): SurfaceKind.KLEIN_BOTTLE,
    }
    return table.get(key, SurfaceKind.OTHER)
