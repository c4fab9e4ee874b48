"""
Normal coordinates.

Per tetrahedron the seven coordinates are ordered
``[tri_0, tri_1, tri_2, tri_3, quad_01|23, quad_02|13, quad_03|12]``:
``tri_v`` cuts off vertex v, ``quad_ab|cd`` separates edge ab from edge cd.
"""

from dataclasses import dataclass
from typing import Iterable, List, Tuple

DISC_TYPES = 7
QUAD_PAIRS: Tuple[Tuple[Tuple[int, int], Tuple[int, int]], ...] = (
    ((0, 1), (2, 3)),
    ((0, 2), (1, 3)),
    ((0, 3), (1, 2)),
)


def quad_type(u: int, v: int) -> int:
    """Coordinate index (4..6) of the quad that keeps ``u`` and ``v`` together."""
    w = max(u, v) if min(u, v) == 0 else max({0, 1, 2, 3} - {u, v})
    return 3 + w


def quad_separates(quad: int, u: int, v: int) -> bool:
    """Whether quad type ``quad`` meets the edge ``uv``."""
    return quad != quad_type(u, v)


def is_triangle(disc: int) -> bool:
    return disc < 4


class NormalVectorError(ValueError):
    """Raised for coordinate vectors of the wrong shape or sign."""


@dataclass(frozen=True)
class NormalVector:
    """A length-7t non-negative integer vector."""

    coords: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coords) % DISC_TYPES != 0 or not self.coords:
            raise NormalVectorError(f"length {len(self.coords)} is not a positive multiple of 7")
        if any(c < 0 for c in self.coords):
            raise NormalVectorError("normal coordinates must be non-negative")

    @classmethod
    def of(cls, values: Iterable[int]) -> "NormalVector":
        return cls(tuple(int(v) for v in values))

    @classmethod
    def zero(cls, tet_count: int) -> "NormalVector":
        return cls((0,) * (DISC_TYPES * tet_count))

    @property
    def tet_count(self) -> int:
        return len(self.coords) // DISC_TYPES

    def count(self, tet: int, disc: int) -> int:
        """Number of discs of type ``disc`` in tetrahedron ``tet``."""
        return self.coords[DISC_TYPES * tet + disc]

    def block(self, tet: int) -> Tuple[int, ...]:
        return self.coords[DISC_TYPES * tet : DISC_TYPES * (tet + 1)]

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __add__(self, other: "NormalVector") -> "NormalVector":
        if len(other.coords) != len(self.coords):
            raise NormalVectorError("cannot add vectors of different lengths")
        return NormalVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def scaled(self, factor: int) -> "NormalVector":
        return NormalVector(tuple(factor * c for c in self.coords))

    def dominated_by(self, other: "NormalVector") -> bool:
        """Pointwise ``self <= other``."""
        return all(a <= b for a, b in zip(self.coords, other.coords))

    def to_list(self) -> List[int]:
        return list(self.coords)


def satisfies_quad_condition(x: NormalVector) -> bool:
    """
    At most one quadrilateral type per tetrahedron.

    Args:
        x: Normal coordinate vector

    Returns:
        True iff no tetrahedron carries two quad types
    """
    return all(
        sum(1 for q in range(4, 7) if x.count(tet, q)) <= 1 for tet in range(x.tet_count)
    )


def corner_count(x: NormalVector, tet: int, u: int, v: int) -> int:
    """Disc corners on the edge ``uv`` of ``tet``."""
    quads = sum(x.count(tet, q) for q in range(4, 7) if quad_separates(q, u, v))
    return x.count(tet, u) + x.count(tet, v) + quads


def arc_count(x: NormalVector, tet: int, face: int) -> int:
    """Normal arcs in face ``face`` of ``tet``: every disc except ``tri_face`` has one."""
    triangles = sum(x.count(tet, v) for v in range(4) if v != face)
    return triangles + sum(x.count(tet, q) for q in range(4, 7))
