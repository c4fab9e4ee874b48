"""
Matching equations, admissibility and Haken sums.
"""

from dataclasses import dataclass
from typing import List, Tuple

from normalcut.normal.coordinates import (
    DISC_TYPES,
    NormalVector,
    quad_type,
    satisfies_quad_condition,
)
from normalcut.triangulation.model import Gluing, Triangulation, face_vertices


class NotAdmissibleError(ValueError):
    """Raised when an operation needs an admissible normal vector."""


@dataclass(frozen=True)
class MatchingSystem:
    """The matching equations ``A x = 0`` over the 7t coordinates.

    ``face_pair_index[r]`` is ``(identification, corner)`` for row r: which
    interior face identification produced it, and which canonical vertex of
    the first face the arc type cuts off.
    """

    coordinate_count: int
    rows: Tuple[Tuple[int, ...], ...]
    face_pair_index: Tuple[Tuple[int, int], ...]
    identifications: Tuple[Gluing, ...]

    @property
    def tet_count(self) -> int:
        return self.coordinate_count // DISC_TYPES

    def residual(self, x: NormalVector) -> List[int]:
        """``A x`` row by row."""
        if len(x.coords) != self.coordinate_count:
            raise ValueError(
                f"vector length {len(x.coords)} does not match {self.coordinate_count}"
            )
        return [sum(a * c for a, c in zip(row, x.coords) if a) for row in self.rows]

    def satisfied_by(self, x: NormalVector) -> bool:
        return not any(self.residual(x))


def matching_system(tri: Triangulation) -> MatchingSystem:
    """
    Build the matching equations: three per interior face identification.

    Args:
        tri: A validated triangulation

    Returns:
        The matching system; boundary faces contribute no rows
    """
    size = DISC_TYPES * tri.tet_count
    rows: List[Tuple[int, ...]] = []
    index: List[Tuple[int, int]] = []
    identifications = tuple(tri.interior_identifications)

    for number, g in enumerate(identifications):
        perm = g.perm()
        for corner, v in enumerate(face_vertices(g.face_a)):
            row = [0] * size
            w = perm[v]
            row[DISC_TYPES * g.tet_a + v] += 1
            row[DISC_TYPES * g.tet_a + quad_type(v, g.face_a)] += 1
            row[DISC_TYPES * g.tet_b + w] -= 1
            row[DISC_TYPES * g.tet_b + quad_type(w, g.face_b)] -= 1
            rows.append(tuple(row))
            index.append((number, corner))

    return MatchingSystem(size, tuple(rows), tuple(index), identifications)


def is_admissible(sys: MatchingSystem, x: NormalVector) -> bool:
    """
    Whether ``x`` satisfies the matching equations and the quad condition.

    Args:
        sys: Matching system of the triangulation
        x: Candidate normal vector

    Returns:
        True iff ``x`` describes an embedded normal surface
    """
    return sys.satisfied_by(x) and satisfies_quad_condition(x)


@dataclass(frozen=True)
class HakenSum:
    """Coordinate-wise sum and whether it is realised by an embedded surface."""

    vector: NormalVector
    admissible: bool


def haken_sum(sys: MatchingSystem, a: NormalVector, b: NormalVector) -> HakenSum:
    """
    Haken sum of two solutions of the matching equations.

    Args:
        sys: Matching system
        a: First summand
        b: Second summand

    Returns:
        The sum with its admissibility flag; the quad condition fails when
        the summands carry different quad types in one tetrahedron
    """
    total = a + b
    return HakenSum(vector=total, admissible=is_admissible(sys, total))
