"""
The triangulated boundary surface of a 3-manifold.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import networkx as nx

from normalcut.triangulation.model import Triangulation, face_vertices
from normalcut.triangulation.skeleton import SkeletonIndex, build_skeleton

FaceSlot = Tuple[int, int]


@dataclass(frozen=True)
class BoundaryComponent:
    """One connected component of the boundary surface."""

    triangles: Tuple[FaceSlot, ...]
    vertices: Tuple[int, ...]  # vertex classes
    edges: Tuple[int, ...]  # edge classes
    euler: int
    orientable: bool

    @property
    def is_torus(self) -> bool:
        return self.euler == 0 and self.orientable


@dataclass(frozen=True)
class BoundarySurface:
    """Boundary triangles and their components."""

    triangles: Tuple[FaceSlot, ...]
    components: Tuple[BoundaryComponent, ...]

    @property
    def is_empty(self) -> bool:
        return not self.triangles

    @property
    def edges(self) -> Tuple[int, ...]:
        return tuple(sorted(e for c in self.components for e in c.edges))

    @property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(sorted(v for c in self.components for v in c.vertices))


def triangle_edges(
    skeleton: SkeletonIndex, tet: int, face: int
) -> List[Tuple[int, int]]:
    """
    Edge classes of a face with the sign induced by the cycle ``a -> b -> c``.

    Args:
        skeleton: Skeleton of the triangulation
        tet: Tetrahedron index
        face: Face index (its vertices a < b < c)

    Returns:
        ``(edge class, +1 or -1)`` for the sides ab, bc, ca
    """
    a, b, c = face_vertices(face)
    result = []
    for u, v in ((a, b), (b, c), (c, a)):
        index, aligned = skeleton.edge_class_of(tet, u, v)
        result.append((index, 1 if aligned else -1))
    return result


def _orientable(
    skeleton: SkeletonIndex, triangles: List[FaceSlot]
) -> bool:
    """Two triangles sharing an edge must induce opposite directions on it."""
    sides: Dict[int, List[Tuple[FaceSlot, int]]] = {}
    for tet, face in triangles:
        for edge, sign in triangle_edges(skeleton, tet, face):
            sides.setdefault(edge, []).append(((tet, face), sign))

    constraints: List[Tuple[FaceSlot, FaceSlot, bool]] = []
    for incidences in sides.values():
        for (first, s1), (second, s2) in zip(incidences, incidences[1:]):
            constraints.append((first, second, s1 != s2))
    return coherent(triangles, constraints)


def coherent(nodes: List, constraints: List[Tuple[object, object, bool]]) -> bool:
    """
    Check that a two-colouring of ``nodes`` satisfies every constraint.

    Args:
        nodes: Cells to orient
        constraints: ``(a, b, same)``; ``same`` demands equal orientations of
            a and b, otherwise opposite ones

    Returns:
        True iff a consistent orientation exists
    """
    graph = nx.Graph()
    graph.add_nodes_from(nodes)
    for first, second, same in constraints:
        if first == second:
            if not same:
                return False
            continue
        graph.add_edge(first, second, same=same)

    orientation: Dict[object, bool] = {}
    for root in nodes:
        if root in orientation:
            continue
        orientation[root] = True
        for parent, child in nx.bfs_edges(graph, root):
            orientation[child] = orientation[parent] == graph.edges[parent, child]["same"]
    return all(
        (orientation[first] == orientation[second]) == same
        for first, second, same in constraints
    )


def boundary_surface(
    tri: Triangulation, skeleton: Optional[SkeletonIndex] = None
) -> BoundarySurface:
    """
    Compute the boundary surface with per-component Euler characteristic.

    Args:
        tri: A validated triangulation
        skeleton: Precomputed skeleton (optional)

    Returns:
        The boundary surface; empty for closed triangulations
    """
    skeleton = skeleton or build_skeleton(tri)
    triangles = tri.boundary_facets

    graph = nx.Graph()
    graph.add_nodes_from(triangles)
    by_edge: Dict[int, List[FaceSlot]] = {}
    for tet, face in triangles:
        for edge, _ in triangle_edges(skeleton, tet, face):
            by_edge.setdefault(edge, []).append((tet, face))
    for members in by_edge.values():
        for first, second in zip(members, members[1:]):
            graph.add_edge(first, second)

    components = []
    for nodes in sorted(
        (sorted(c) for c in nx.connected_components(graph)), key=lambda c: c[0]
    ):
        vertices = sorted(
            {skeleton.vertex_of[(tet, v)] for tet, face in nodes for v in face_vertices(face)}
        )
        edges = sorted(
            {edge for tet, face in nodes for edge, _ in triangle_edges(skeleton, tet, face)}
        )
        components.append(
            BoundaryComponent(
                triangles=tuple(nodes),
                vertices=tuple(vertices),
                edges=tuple(edges),
                euler=len(vertices) - len(edges) + len(nodes),
                orientable=_orientable(skeleton, nodes),
            )
        )

    return BoundarySurface(triangles=tuple(triangles), components=tuple(components))
