"""
Identification classes of vertices, edges and faces.

Classes are numbered by their lexicographically smallest representative.
Edge slots are indexed 0..5 in the order 01, 02, 03, 12, 13, 23.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

import networkx as nx
from networkx.utils import UnionFind

from normalcut.triangulation.model import Triangulation, face_vertices

EDGE_VERTICES: Tuple[Tuple[int, int], ...] = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
EDGE_INDEX: Dict[Tuple[int, int], int] = {pair: i for i, pair in enumerate(EDGE_VERTICES)}

VertexSlot = Tuple[int, int]  # (tet, vertex)
EdgeSlot = Tuple[int, int]  # (tet, edge index)
FaceSlot = Tuple[int, int]  # (tet, face)


def edge_index(u: int, v: int) -> int:
    """Edge slot index of the tetrahedron edge joining ``u`` and ``v``."""
    return EDGE_INDEX[(min(u, v), max(u, v))]


@dataclass(frozen=True)
class EdgeClass:
    """An edge of the quotient complex.

    ``slots`` maps every member slot to True when its increasing vertex order
    agrees with the class direction fixed by the representative slot.
    """

    index: int
    slots: Tuple[Tuple[EdgeSlot, bool], ...]
    start: int  # vertex class
    end: int  # vertex class

    @property
    def degree(self) -> int:
        return len(self.slots)

    @property
    def representative(self) -> EdgeSlot:
        return self.slots[0][0]


@dataclass(frozen=True)
class SkeletonIndex:
    """Partition of per-tetrahedron simplices into identification classes."""

    vertex_classes: Tuple[Tuple[VertexSlot, ...], ...]
    edge_classes: Tuple[EdgeClass, ...]
    face_classes: Tuple[Tuple[FaceSlot, ...], ...]
    vertex_of: Dict[VertexSlot, int]
    edge_of: Dict[EdgeSlot, Tuple[int, bool]]
    face_of: Dict[FaceSlot, int]

    def edge_class_of(self, tet: int, u: int, v: int) -> Tuple[int, bool]:
        """Class of edge ``uv`` in ``tet`` and whether ``u -> v`` runs along the class."""
        index, aligned = self.edge_of[(tet, edge_index(u, v))]
        return index, aligned == (u < v)


def _numbered(groups: List[List[Tuple[int, int]]]) -> List[Tuple[Tuple[int, int], ...]]:
    return sorted((tuple(sorted(group)) for group in groups), key=lambda group: group[0])


def _edge_graph(tri: Triangulation) -> nx.Graph:
    """Edge slots joined across face gluings; ``flip`` marks reversed direction."""
    graph = nx.Graph()
    for tet in range(tri.tet_count):
        for e in range(6):
            graph.add_node((tet, e))
    for g in tri.gluings:
        perm = g.perm()
        for u, v in _face_edges(g.face_a):
            image_u, image_v = perm[u], perm[v]
            graph.add_edge(
                (g.tet_a, edge_index(u, v)),
                (g.tet_b, edge_index(image_u, image_v)),
                flip=(image_u > image_v),
            )
    return graph


def _face_edges(face: int) -> List[Tuple[int, int]]:
    a, b, c = face_vertices(face)
    return [(a, b), (a, c), (b, c)]


@lru_cache(maxsize=64)
def build_skeleton(tri: Triangulation) -> SkeletonIndex:
    """
    Compute vertex, edge and face identification classes.

    Args:
        tri: A validated triangulation

    Returns:
        The skeleton index with deterministic class numbering
    """
    vertices = UnionFind((t, v) for t in range(tri.tet_count) for v in range(4))
    for g in tri.gluings:
        perm = g.perm()
        for v in face_vertices(g.face_a):
            vertices.union((g.tet_a, v), (g.tet_b, perm[v]))
    vertex_classes = _numbered([list(group) for group in vertices.to_sets()])
    vertex_of = {slot: i for i, group in enumerate(vertex_classes) for slot in group}

    graph = _edge_graph(tri)
    components = _numbered([list(c) for c in nx.connected_components(graph)])
    edge_classes: List[EdgeClass] = []
    edge_of: Dict[EdgeSlot, Tuple[int, bool]] = {}
    for index, component in enumerate(components):
        root = component[0]
        aligned = {root: True}
        for parent, child in nx.bfs_edges(graph, root):
            aligned[child] = aligned[parent] != graph.edges[parent, child]["flip"]
        slots = tuple((slot, aligned[slot]) for slot in component)
        tet, e = root
        u, v = EDGE_VERTICES[e]
        edge_classes.append(
            EdgeClass(index, slots, vertex_of[(tet, u)], vertex_of[(tet, v)])
        )
        for slot, flag in slots:
            edge_of[slot] = (index, flag)

    face_groups: List[List[FaceSlot]] = []
    for tet, face in tri.facets:
        g = tri.partner(tet, face)
        if g is None:
            face_groups.append([(tet, face)])
        elif (tet, face) < (g.tet_b, g.face_b):
            face_groups.append([(tet, face), (g.tet_b, g.face_b)])
    face_classes = _numbered(face_groups)
    face_of = {slot: i for i, group in enumerate(face_classes) for slot in group}

    return SkeletonIndex(
        vertex_classes=tuple(vertex_classes),
        edge_classes=tuple(edge_classes),
        face_classes=tuple(face_classes),
        vertex_of=vertex_of,
        edge_of=edge_of,
        face_of=face_of,
    )
