"""
Triangulation data model and document parsing.

A triangulation is a set of tetrahedra with face gluings. Face i of a
tetrahedron is the face opposite vertex i; its canonical vertex order is the
increasing order of the remaining three vertices.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError

FacetKey = Tuple[int, int]  # (tetrahedron, face)
Perm4 = Tuple[int, int, int, int]


def face_vertices(face: int) -> Tuple[int, int, int]:
    """Canonical vertex order of the face opposite ``face``."""
    return tuple(v for v in range(4) if v != face)  # type: ignore[return-value]


@dataclass
class TriangulationError(ValueError):
    """Raised when a triangulation document is malformed or inconsistent."""

    location: str
    reason: str

    def __str__(self) -> str:
        return f"{self.location}: {self.reason}"


@dataclass(frozen=True)
class Gluing:
    """One directed face gluing.

    ``vertex_map[k]`` is the index, in the canonical order of ``face_b``, of the
    vertex that the k-th canonical vertex of ``face_a`` is glued to.
    """

    tet_a: int
    face_a: int
    tet_b: int
    face_b: int
    vertex_map: Tuple[int, int, int]

    def perm(self) -> Perm4:
        """Full vertex map from tetrahedron ``tet_a`` to tetrahedron ``tet_b``."""
        image = [0, 0, 0, 0]
        image[self.face_a] = self.face_b
        target = face_vertices(self.face_b)
        for k, v in enumerate(face_vertices(self.face_a)):
            image[v] = target[self.vertex_map[k]]
        return tuple(image)  # type: ignore[return-value]

    def inverse(self) -> "Gluing":
        """The same gluing seen from ``(tet_b, face_b)``."""
        perm = self.perm()
        back = {perm[v]: v for v in range(4)}
        source = face_vertices(self.face_a)
        vertex_map = tuple(source.index(back[v]) for v in face_vertices(self.face_b))
        return Gluing(self.tet_b, self.face_b, self.tet_a, self.face_a, vertex_map)  # type: ignore[arg-type]

    def as_row(self) -> List[Any]:
        """Document form ``[tet_a, face_a, tet_b, face_b, [p0, p1, p2]]``."""
        return [self.tet_a, self.face_a, self.tet_b, self.face_b, list(self.vertex_map)]


@dataclass(frozen=True)
class Triangulation:
    """A validated triangulated 3-manifold (possibly with boundary).

    ``gluings`` holds both directions of every identification, sorted by
    ``(tet_a, face_a)``. Instances are immutable.
    """

    tet_count: int
    gluings: Tuple[Gluing, ...] = field(default_factory=tuple)

    @cached_property
    def _partners(self) -> Dict[FacetKey, Gluing]:
        return {(g.tet_a, g.face_a): g for g in self.gluings}

    def partner(self, tet: int, face: int) -> Optional[Gluing]:
        """The gluing leaving ``(tet, face)``, or None for a boundary face."""
        return self._partners.get((tet, face))

    @property
    def facets(self) -> List[FacetKey]:
        """All ``(tet, face)`` slots in lexicographic order."""
        return [(t, f) for t in range(self.tet_count) for f in range(4)]

    @property
    def boundary_facets(self) -> List[FacetKey]:
        """Unglued face slots."""
        return [key for key in self.facets if key not in self._partners]

    @property
    def interior_identifications(self) -> List[Gluing]:
        """One directed gluing per identified face pair, from the smaller slot."""
        return [
            g for g in self.gluings if (g.tet_a, g.face_a) < (g.tet_b, g.face_b)
        ]

    def relabel(self, order: List[int]) -> "Triangulation":
        """Renumber tetrahedra: old tetrahedron ``i`` becomes ``order[i]``."""
        if sorted(order) != list(range(self.tet_count)):
            raise ValueError("order must be a permutation of the tetrahedra")
        moved = [
            Gluing(order[g.tet_a], g.face_a, order[g.tet_b], g.face_b, g.vertex_map)
            for g in self.gluings
        ]
        return Triangulation(self.tet_count, tuple(sorted(moved, key=_gluing_key)))

    def to_document(self) -> Dict[str, Any]:
        """Document form with one row per identification."""
        return {
            "tets": self.tet_count,
            "gluings": [g.as_row() for g in self.interior_identifications],
        }


def _gluing_key(g: Gluing) -> Tuple[int, int]:
    return (g.tet_a, g.face_a)


class TriangulationDocument(BaseModel):
    """Schema of the JSON triangulation file."""

    model_config = ConfigDict(extra="forbid", strict=True)

    tets: int = Field(ge=1)
    gluings: List[Tuple[int, int, int, int, Tuple[int, int, int]]] = Field(default_factory=list)


def build_triangulation(tet_count: int, rows: List[Any]) -> Triangulation:
    """
    Validate gluing rows and assemble a Triangulation.

    Args:
        tet_count: Number of tetrahedra
        rows: Gluing rows ``[tet_a, face_a, tet_b, face_b, [p0, p1, p2]]``;
            one or both directions of each identification

    Returns:
        The validated triangulation

    Raises:
        TriangulationError: On range errors, self-glued faces, duplicate or
            non-involutive gluings
    """
    if tet_count < 1:
        raise TriangulationError("tets", "at least one tetrahedron is required")

    directed: Dict[FacetKey, Gluing] = {}
    for index, row in enumerate(rows):
        location = f"gluings[{index}]"
        tet_a, face_a, tet_b, face_b, vertex_map = row
        for name, tet in (("tet_a", tet_a), ("tet_b", tet_b)):
            if not 0 <= tet < tet_count:
                raise TriangulationError(location, f"{name} {tet} out of range 0..{tet_count - 1}")
        for name, face in (("face_a", face_a), ("face_b", face_b)):
            if not 0 <= face <= 3:
                raise TriangulationError(location, f"{name} {face} out of range 0..3")
        if sorted(vertex_map) != [0, 1, 2]:
            raise TriangulationError(location, f"vertex map {list(vertex_map)} is not a bijection")
        if (tet_a, face_a) == (tet_b, face_b):
            raise TriangulationError(location, "self-glued face")

        forward = Gluing(tet_a, face_a, tet_b, face_b, tuple(vertex_map))
        for g in (forward, forward.inverse()):
            key = (g.tet_a, g.face_a)
            existing = directed.get(key)
            if existing is None:
                directed[key] = g
            elif existing != g:
                if (existing.tet_b, existing.face_b) == (g.tet_b, g.face_b):
                    raise TriangulationError(location, "non-involutive gluing")
                raise TriangulationError(location, f"duplicate gluing on face {key}")

    return Triangulation(tet_count, tuple(sorted(directed.values(), key=_gluing_key)))


def parse_triangulation(text: str) -> Triangulation:
    """
    Parse a JSON triangulation document.

    Args:
        text: UTF-8 JSON with keys ``tets`` and ``gluings``

    Returns:
        The validated triangulation

    Raises:
        TriangulationError: With the offending location on any error
    """
    try:
        document = TriangulationDocument.model_validate_json(text)
    except ValidationError as exc:
        first = exc.errors()[0]
        location = ".".join(str(part) for part in first["loc"]) or "document"
        raise TriangulationError(location, first["msg"]) from exc

    return build_triangulation(document.tets, [list(row) for row in document.gluings])
