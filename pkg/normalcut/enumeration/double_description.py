"""
Vertex solutions by the double description method.

The cone ``{x >= 0, A x = 0}`` starts as the positive orthant, generated by
the unit vectors, and is cut by one equation at a time. Rays are kept as
primitive integer vectors, so every step is exact.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import AbstractSet, FrozenSet, List, Sequence, Tuple

from normalcut.normal.coordinates import NormalVector
from normalcut.normal.matching import MatchingSystem

logger = logging.getLogger(__name__)

Ray = Tuple[int, ...]


@dataclass(frozen=True)
class RationalPoint:
    """A point of the projective solution space ``sum(x) = 1``."""

    numerators: Tuple[int, ...]
    common_denominator: int

    def __post_init__(self) -> None:
        if self.common_denominator <= 0:
            raise ValueError("denominator must be positive")
        if any(n < 0 for n in self.numerators):
            raise ValueError("numerators must be non-negative")
        if reduce(gcd, self.numerators, self.common_denominator) != 1:
            raise ValueError("numerators and denominator share a factor")

    @classmethod
    def from_fractions(cls, values: Sequence[Fraction]) -> "RationalPoint":
        denominator = reduce(lcm, (v.denominator for v in values), 1)
        numerators = tuple(int(v * denominator) for v in values)
        common = reduce(gcd, numerators, denominator)
        return cls(tuple(n // common for n in numerators), denominator // common)

    def as_fractions(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(n, self.common_denominator) for n in self.numerators)

    def integer_scaling(self) -> NormalVector:
        """The minimal integer multiple ``V = lambda * v``."""
        common = reduce(gcd, self.numerators, 0)
        return NormalVector(tuple(n // common for n in self.numerators))


@dataclass(frozen=True)
class VertexSolutionSet:
    """Vertices of the projective solution polytope and their integer scalings."""

    points: Tuple[RationalPoint, ...]
    vertices: Tuple[NormalVector, ...]

    def __len__(self) -> int:
        return len(self.vertices)


def _primitive(values: Sequence[int]) -> Ray:
    common = reduce(gcd, values, 0)
    return tuple(v // common for v in values) if common > 1 else tuple(values)


def _zero_set(ray: Ray, free: Sequence[int]) -> FrozenSet[int]:
    return frozenset(i for i in free if ray[i] == 0)


def _adjacent(first: Ray, second: Ray, rays: List[Ray], free: Sequence[int]) -> bool:
    """Combinatorial test: no third ray vanishes wherever both do."""
    common = _zero_set(first, free) & _zero_set(second, free)
    for other in rays:
        if other is first or other is second:
            continue
        if common <= _zero_set(other, free):
            return False
    return True


def extreme_rays(
    rows: Sequence[Sequence[int]], dimension: int, forced_zero: AbstractSet[int] = frozenset()
) -> List[Ray]:
    """
    Extreme rays of ``{x >= 0, A x = 0, x_i = 0 for i in forced_zero}``.

    Args:
        rows: Equations as integer coefficient rows
        dimension: Number of coordinates
        forced_zero: Coordinates fixed to zero

    Returns:
        Primitive integer rays in lexicographic order
    """
    free = [i for i in range(dimension) if i not in forced_zero]
    rays: List[Ray] = [tuple(1 if j == i else 0 for j in range(dimension)) for i in free]

    for row in rows:
        if not any(row[i] for i in free):
            continue
        values = [sum(row[i] * ray[i] for i in free) for ray in rays]
        zero = [r for r, v in zip(rays, values) if v == 0]
        positive = [(r, v) for r, v in zip(rays, values) if v > 0]
        negative = [(r, v) for r, v in zip(rays, values) if v < 0]

        combined = set(zero)
        for p, pv in positive:
            for n, nv in negative:
                if not _adjacent(p, n, rays, free):
                    continue
                combined.add(_primitive([pv * a - nv * b for a, b in zip(n, p)]))
        rays = sorted(combined)
        if not rays:
            break

    return sorted(rays)


def vertex_solutions(
    sys: MatchingSystem, forced_zero: AbstractSet[int] = frozenset()
) -> VertexSolutionSet:
    """
    Compute the vertex solutions of the normal surface equations.

    Args:
        sys: Matching system
        forced_zero: Coordinates restricted to zero (a face of the cone)

    Returns:
        Extreme rays intersected with ``sum(x) = 1`` and their minimal
        integer scalings; empty when the cone is the origin
    """
    rays = extreme_rays(sys.rows, sys.coordinate_count, forced_zero)
    points = tuple(
        RationalPoint.from_fractions([Fraction(v, sum(ray)) for v in ray]) for ray in rays
    )
    vertices = tuple(point.integer_scaling() for point in points)
    logger.debug("double description: %d vertex solutions", len(vertices))
    return VertexSolutionSet(points=points, vertices=vertices)
