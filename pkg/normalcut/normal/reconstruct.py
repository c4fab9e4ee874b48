"""
Rebuild the surface from its normal coordinates.

Every disc is materialised as ``(tet, disc type, copy)``. Copies of one type
are stacked in a fixed order: triangle copy 0 is nearest its vertex, quad
copy 0 is nearest the edge joining the quad's first vertex pair (the pair
containing vertex 0). A point of the surface on the 1-skeleton is
``(edge class, position)`` with positions counted from the start of the class.
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple

import networkx as nx
from sympy import GF

from normalcut.normal.coordinates import (
    DISC_TYPES,
    QUAD_PAIRS,
    NormalVector,
    corner_count,
    is_triangle,
    quad_separates,
    quad_type,
)
from normalcut.normal.matching import NotAdmissibleError, is_admissible, matching_system
from normalcut.normal.surfaces import SurfaceKind, surface_kind
from normalcut.triangulation.boundary import boundary_surface, coherent
from normalcut.triangulation.homology import matrix_rank
from normalcut.triangulation.model import Triangulation, face_vertices
from normalcut.triangulation.skeleton import SkeletonIndex, build_skeleton

logger = logging.getLogger(__name__)

Disc = Tuple[int, int, int]  # (tet, disc type, copy)
Point = Tuple[int, int]  # (edge class, position along the class)
Corner = Tuple[int, int]  # tetrahedron edge as a vertex pair


@dataclass(frozen=True)
class BoundaryCurve:
    """A boundary circle of the surface and its mod-2 class on the boundary."""

    component: int
    arcs: int
    intersections: Tuple[Tuple[int, int], ...]  # (edge class, points)
    nonzero: bool

    @property
    def parity(self) -> Tuple[Tuple[int, int], ...]:
        return tuple((edge, count % 2) for edge, count in self.intersections)


@dataclass(frozen=True)
class SurfaceComponent:
    """One connected piece of a reconstructed surface."""

    vector: NormalVector
    euler: int
    weight: int
    orientable: bool
    boundary_curves: Tuple[BoundaryCurve, ...]

    @property
    def kind(self) -> SurfaceKind:
        return surface_kind(self.euler, self.orientable, len(self.boundary_curves))


@dataclass(frozen=True)
class SurfaceReport:
    """Topology of the surface described by an admissible vector."""

    vector: NormalVector
    euler: int
    weight: int
    components: Tuple[SurfaceComponent, ...]

    @property
    def component_count(self) -> int:
        return len(self.components)

    @property
    def boundary_curves(self) -> Tuple[BoundaryCurve, ...]:
        return tuple(c for comp in self.components for c in comp.boundary_curves)


def disc_corners(disc: int) -> List[Corner]:
    """Corners of a disc type in cyclic order around its boundary."""
    if is_triangle(disc):
        return [(disc, w) for w in range(4) if w != disc]
    (p, q), (r, s) = QUAD_PAIRS[disc - 4]
    return [(p, r), (p, s), (q, s), (q, r)]


def _arc_in_face(disc: int, face: int) -> Optional[Tuple[Corner, Corner]]:
    """The directed arc a disc cuts in ``face``, following its corner order."""
    corners = disc_corners(disc)
    for i, first in enumerate(corners):
        second = corners[(i + 1) % len(corners)]
        if face not in first and face not in second:
            return first, second
    return None


class _Layout:
    """Disc stacking inside each tetrahedron of one admissible vector."""

    def __init__(self, x: NormalVector, skeleton: SkeletonIndex) -> None:
        self.x = x
        self.skeleton = skeleton

    def _quad(self, tet: int) -> Tuple[int, int]:
        for q in range(4, DISC_TYPES):
            if self.x.count(tet, q):
                return q, self.x.count(tet, q)
        return 0, 0

    def local_position(self, tet: int, disc: int, copy: int, u: int, v: int) -> int:
        """Position of a disc corner on edge ``uv`` counted from ``u``."""
        if disc == u:
            return copy
        t_u = self.x.count(tet, u)
        quad, n_q = self._quad(tet)
        if quad and not quad_separates(quad, u, v):
            n_q = 0
        if disc == v:
            return t_u + n_q + (self.x.count(tet, v) - 1 - copy)
        first_pair = QUAD_PAIRS[disc - 4][0]
        return t_u + (copy if u in first_pair else n_q - 1 - copy)

    def point(self, tet: int, disc: int, copy: int, corner: Corner) -> Point:
        u, v = corner
        position = self.local_position(tet, disc, copy, u, v)
        edge, aligned = self.skeleton.edge_class_of(tet, u, v)
        if not aligned:
            position = corner_count(self.x, tet, u, v) - 1 - position
        return edge, position

    def arcs_at(self, tet: int, face: int, corner: int) -> List[Disc]:
        """Discs cutting ``corner`` in ``face``, nearest the corner first."""
        discs = [(tet, corner, k) for k in range(self.x.count(tet, corner))]
        quad = quad_type(corner, face)
        n_q = self.x.count(tet, quad)
        order = range(n_q) if 0 in (corner, face) else range(n_q - 1, -1, -1)
        discs.extend((tet, quad, k) for k in order)
        return discs

    def arc_points(self, disc: Disc, face: int) -> Tuple[Point, Point]:
        tet, kind, copy = disc
        arc = _arc_in_face(kind, face)
        assert arc is not None
        return self.point(tet, kind, copy, arc[0]), self.point(tet, kind, copy, arc[1])


def _coboundary_rows(tri: Triangulation, skeleton: SkeletonIndex) -> Tuple[List[int], List[List[int]]]:
    boundary = boundary_surface(tri, skeleton)
    edges = list(boundary.edges)
    vertices = list(boundary.vertices)
    column = {v: i for i, v in enumerate(vertices)}
    rows = []
    for e in edges:
        row = [0] * len(vertices)
        edge = skeleton.edge_classes[e]
        row[column[edge.start]] += 1
        row[column[edge.end]] += 1
        rows.append([value % 2 for value in row])
    return edges, rows


def _is_coboundary(cochain: List[int], rows: List[List[int]]) -> bool:
    """Whether an edge cochain is the mod-2 coboundary of a vertex cochain."""
    if not any(cochain):
        return True
    if not rows or not rows[0]:
        return False
    extended = [row + [c] for row, c in zip(rows, cochain)]
    return matrix_rank(extended, GF(2)) == matrix_rank(rows, GF(2))


def reconstruct(tri: Triangulation, x: NormalVector) -> SurfaceReport:
    """
    Glue the discs of ``x`` into a surface and describe its topology.

    Args:
        tri: A validated triangulation
        x: Admissible normal vector

    Returns:
        Euler characteristic, weight and per-component orientability,
        boundary curves and their mod-2 boundary classes

    Raises:
        NotAdmissibleError: If x fails the matching equations or quad condition
    """
    if not is_admissible(matching_system(tri), x):
        raise NotAdmissibleError("only admissible vectors describe embedded surfaces")

    skeleton = build_skeleton(tri)
    layout = _Layout(x, skeleton)

    discs: List[Disc] = [
        (tet, kind, copy)
        for tet in range(tri.tet_count)
        for kind in range(DISC_TYPES)
        for copy in range(x.count(tet, kind))
    ]
    points_of: Dict[Disc, FrozenSet[Point]] = {
        disc: frozenset(layout.point(disc[0], disc[1], disc[2], c) for c in disc_corners(disc[1]))
        for disc in discs
    }

    graph = nx.Graph()
    graph.add_nodes_from(discs)
    constraints: List[Tuple[object, object, bool]] = []
    interior_arcs: Dict[Disc, int] = {}

    for g in tri.interior_identifications:
        perm = g.perm()
        for corner in face_vertices(g.face_a):
            ours = layout.arcs_at(g.tet_a, g.face_a, corner)
            theirs = layout.arcs_at(g.tet_b, g.face_b, perm[corner])
            for first, second in zip(ours, theirs):
                graph.add_edge(first, second)
                interior_arcs[first] = interior_arcs.get(first, 0) + 1
                arc_a = _arc_in_face(first[1], g.face_a)
                arc_b = _arc_in_face(second[1], g.face_b)
                assert arc_a is not None and arc_b is not None
                image = frozenset(perm[i] for i in arc_a[0])
                constraints.append((first, second, image != frozenset(arc_b[0])))

    curves = nx.MultiGraph()
    for tet, face in tri.boundary_facets:
        for corner in face_vertices(face):
            for disc in layout.arcs_at(tet, face, corner):
                start, end = layout.arc_points(disc, face)
                curves.add_edge(start, end, disc=disc)

    edges, rows = _coboundary_rows(tri, skeleton)
    parts = sorted((sorted(c) for c in nx.connected_components(graph)), key=lambda c: c[0])
    component_of = {disc: i for i, part in enumerate(parts) for disc in part}

    curve_lists: Dict[int, List[BoundaryCurve]] = {}
    for nodes in sorted((sorted(c) for c in nx.connected_components(curves)), key=lambda c: c[0]):
        sub = curves.subgraph(nodes)
        disc = next(iter(sub.edges(data="disc")))[2]
        counts: Dict[int, int] = {}
        for edge, _ in nodes:
            counts[edge] = counts.get(edge, 0) + 1
        cochain = [counts.get(e, 0) % 2 for e in edges]
        index = component_of[disc]
        curve_lists.setdefault(index, []).append(
            BoundaryCurve(
                component=index,
                arcs=sub.number_of_edges(),
                intersections=tuple(sorted(counts.items())),
                nonzero=not _is_coboundary(cochain, rows),
            )
        )

    components = []
    for index, part in enumerate(parts):
        members = set(part)
        coords = [0] * len(x.coords)
        for tet, kind, _ in part:
            coords[DISC_TYPES * tet + kind] += 1
        points = frozenset().union(*(points_of[d] for d in part))
        own_curves = tuple(curve_lists.get(index, []))
        arc_total = sum(interior_arcs.get(d, 0) for d in part) + sum(c.arcs for c in own_curves)
        components.append(
            SurfaceComponent(
                vector=NormalVector(tuple(coords)),
                euler=len(points) - arc_total + len(part),
                weight=len(points),
                orientable=coherent(
                    part, [c for c in constraints if c[0] in members]
                ),
                boundary_curves=own_curves,
            )
        )

    report = SurfaceReport(
        vector=x,
        euler=sum(c.euler for c in components),
        weight=sum(c.weight for c in components),
        components=tuple(components),
    )
    logger.debug(
        "reconstructed surface: chi=%d weight=%d components=%d",
        report.euler,
        report.weight,
        report.component_count,
    )
    return report
