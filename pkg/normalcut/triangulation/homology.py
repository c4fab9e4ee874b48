"""
First homology of the quotient cell complex and the Kneser bound.

All arithmetic is exact: ranks over QQ and GF(2), invariant factors over ZZ.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, List, Optional, Tuple

from sympy import GF, QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

from normalcut.triangulation.boundary import triangle_edges
from normalcut.triangulation.model import Triangulation
from normalcut.triangulation.skeleton import SkeletonIndex, build_skeleton

logger = logging.getLogger(__name__)


class Coefficients(Enum):
    """Coefficient ring for homology."""

    INTEGERS = "integers"
    MOD2 = "mod2"


@dataclass(frozen=True)
class HomologyResult:
    """H_1 as free rank plus invariant factors, or a GF(2) dimension."""

    coefficients: Coefficients
    free_rank: int = 0
    torsion: Tuple[int, ...] = field(default_factory=tuple)
    coefficient_field_dim: int = 0

    def describe(self) -> str:
        """Human-readable group, e.g. ``Z + Z/2``."""
        if self.coefficients is Coefficients.MOD2:
            return " + ".join(["Z/2"] * self.coefficient_field_dim) or "0"
        parts = ["Z"] * self.free_rank + [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) or "0"


def boundary_matrices(
    skeleton: SkeletonIndex,
) -> Tuple[List[List[int]], List[List[int]]]:
    """
    Cellular boundary maps of the quotient complex.

    Args:
        skeleton: Skeleton of the triangulation

    Returns:
        ``(d1, d2)`` with d1 of shape vertices x edges and d2 of shape
        edges x faces
    """
    vertex_count = len(skeleton.vertex_classes)
    edge_count = len(skeleton.edge_classes)

    d1 = [[0] * edge_count for _ in range(vertex_count)]
    for edge in skeleton.edge_classes:
        d1[edge.end][edge.index] += 1
        d1[edge.start][edge.index] -= 1

    d2 = [[0] * len(skeleton.face_classes) for _ in range(edge_count)]
    for index, members in enumerate(skeleton.face_classes):
        tet, face = members[0]
        for edge, sign in triangle_edges(skeleton, tet, face):
            d2[edge][index] += sign
    return d1, d2


def _matrix(rows: List[List[int]], domain: Any) -> Optional[DomainMatrix]:
    if not rows or not rows[0]:
        return None
    return DomainMatrix([[domain(v) for v in row] for row in rows], (len(rows), len(rows[0])), domain)


def matrix_rank(rows: List[List[int]], domain: Any) -> int:
    """Rank of an integer matrix over ``domain`` (QQ or a finite field)."""
    matrix = _matrix(rows, domain)
    return 0 if matrix is None else matrix.rank()


def homology_h1(
    tri: Triangulation,
    coeffs: Coefficients = Coefficients.INTEGERS,
    skeleton: Optional[SkeletonIndex] = None,
) -> HomologyResult:
    """
    Compute H_1 of the triangulated manifold.

    Args:
        tri: A validated triangulation
        coeffs: Integer or mod-2 coefficients
        skeleton: Precomputed skeleton (optional)

    Returns:
        Free rank and torsion (integers) or field dimension (mod 2)
    """
    skeleton = skeleton or build_skeleton(tri)
    d1, d2 = boundary_matrices(skeleton)
    edge_count = len(skeleton.edge_classes)

    if coeffs is Coefficients.MOD2:
        dim = edge_count - matrix_rank(d1, GF(2)) - matrix_rank(d2, GF(2))
        return HomologyResult(coeffs, coefficient_field_dim=dim)

    free_rank = edge_count - matrix_rank(d1, QQ) - matrix_rank(d2, QQ)
    matrix = _matrix(d2, ZZ)
    factors = [] if matrix is None else [abs(int(f)) for f in invariant_factors(matrix)]
    torsion = tuple(f for f in factors if f > 1)
    logger.debug("H_1 free rank %d torsion %s", free_rank, torsion)
    return HomologyResult(coeffs, free_rank=free_rank, torsion=torsion)


def kneser_bound(tri: Triangulation) -> int:
    """
    Kneser's bound ``dim H_1(M; Z/2) + rank H_1(M; Z) + 6t``.

    Args:
        tri: A validated triangulation

    Returns:
        The bound on the number of pieces of a non-trivial sphere
        decomposition, and on disjoint non-parallel incompressible surfaces
    """
    skeleton = build_skeleton(tri)
    mod2 = homology_h1(tri, Coefficients.MOD2, skeleton)
    integral = homology_h1(tri, Coefficients.INTEGERS, skeleton)
    return mod2.coefficient_field_dim + integral.free_rank + 6 * tri.tet_count
