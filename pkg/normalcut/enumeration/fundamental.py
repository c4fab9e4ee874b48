"""
Fundamental solutions of the normal surface equations.

A nonzero solution is fundamental when no other nonzero solution lies below
it pointwise. Every fundamental solution lies in the box bounded by the sum
of the vertex solutions, so the search scans that box for lattice points of
the solution cone and keeps the pointwise-minimal ones.

With ``admissible_only`` the scan runs once per quadrilateral pattern (one
permitted quad type per tetrahedron), each on a face of the cone.
"""

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import prod
from typing import Iterator, List, Optional, Sequence, Tuple

from normalcut.enumeration.double_description import extreme_rays
from normalcut.normal.coordinates import DISC_TYPES, NormalVector, satisfies_quad_condition
from normalcut.normal.matching import MatchingSystem, matching_system
from normalcut.normal.reconstruct import reconstruct
from normalcut.normal.surfaces import SurfaceKind, is_vertex_linking
from normalcut.triangulation.model import Triangulation

logger = logging.getLogger(__name__)

DEFAULT_BOX_VOLUME_CAP = 10**7

Rows = Tuple[Tuple[int, ...], ...]


class EnumerationLimitExceeded(RuntimeError):
    """The search box is larger than the configured cap."""

    def __init__(self, volume: int, cap: int) -> None:
        super().__init__(f"search box volume {volume} exceeds cap {cap}")
        self.volume = volume
        self.cap = cap

    def __reduce__(self):  # type: ignore[no-untyped-def]
        return type(self), (self.volume, self.cap)


@dataclass(frozen=True)
class FundamentalSet:
    """Fundamental solutions in lexicographic order."""

    solutions: Tuple[NormalVector, ...]
    admissible_subset: Tuple[int, ...]

    @classmethod
    def of(cls, solutions: Sequence[NormalVector]) -> "FundamentalSet":
        ordered = tuple(sorted(set(solutions), key=lambda x: x.coords))
        subset = tuple(i for i, x in enumerate(ordered) if satisfies_quad_condition(x))
        return cls(ordered, subset)

    def admissible(self) -> List[NormalVector]:
        return [self.solutions[i] for i in self.admissible_subset]

    def __len__(self) -> int:
        return len(self.solutions)


def _lattice_points(rows: Rows, bounds: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    """
    All integer ``x`` with ``0 <= x_i <= bounds[i]`` and ``A x = 0``.

    A row whose last nonzero coefficient sits at position k forces x_k once
    the earlier positions are set; partial sums are pruned against the range
    the remaining positions can still reach.
    """
    size = len(bounds)
    closing: List[List[int]] = [[] for _ in range(size)]
    for r, row in enumerate(rows):
        last = max((i for i, a in enumerate(row) if a), default=None)
        if last is not None:
            closing[last].append(r)

    # reach[r][k]: (min, max) of row r over positions k.. within bounds
    reach = []
    for row in rows:
        low, high = [0] * (size + 1), [0] * (size + 1)
        for k in range(size - 1, -1, -1):
            span = (row[k] * bounds[k], 0)
            low[k] = low[k + 1] + min(span)
            high[k] = high[k + 1] + max(span)
        reach.append((low, high))

    partial = [0] * len(rows)
    x = [0] * size

    def assign(k: int, value: int) -> bool:
        x[k] = value
        for r, row in enumerate(rows):
            partial[r] += row[k] * value
        ok = all(
            reach[r][0][k + 1] <= -partial[r] <= reach[r][1][k + 1] for r in range(len(rows))
        )
        return ok

    def unassign(k: int) -> None:
        for r, row in enumerate(rows):
            partial[r] -= row[k] * x[k]
        x[k] = 0

    def candidates(k: int) -> Sequence[int]:
        if not closing[k]:
            return range(bounds[k] + 1)
        forced = set()
        for r in closing[k]:
            coefficient = rows[r][k]
            if partial[r] % coefficient:
                return ()
            forced.add(-partial[r] // coefficient)
        if len(forced) != 1:
            return ()
        value = forced.pop()
        return (value,) if 0 <= value <= bounds[k] else ()

    def search(k: int) -> Iterator[Tuple[int, ...]]:
        if k == size:
            yield tuple(x)
            return
        for value in candidates(k):
            if assign(k, value):
                yield from search(k + 1)
            unassign(k)

    yield from search(0)


def minimal_elements(points: Sequence[Tuple[int, ...]]) -> List[Tuple[int, ...]]:
    """Nonzero points with no other nonzero point pointwise below them."""
    kept: List[Tuple[int, ...]] = []
    for point in sorted((p for p in points if any(p)), key=lambda p: (sum(p), p)):
        if not any(all(a <= b for a, b in zip(small, point)) for small in kept):
            kept.append(point)
    return sorted(kept)


def _scan(job: Tuple[Rows, int, Tuple[int, ...], int]) -> List[Tuple[int, ...]]:
    """Minimal lattice points of one cone face; picklable for process pools."""
    rows, size, forced_zero, cap = job
    vertices = extreme_rays(rows, size, frozenset(forced_zero))
    if not vertices:
        return []
    bounds = [sum(v[i] for v in vertices) for i in range(size)]
    volume = prod(b + 1 for b in bounds)
    if volume > cap:
        raise EnumerationLimitExceeded(volume, cap)

    free = [i for i in range(size) if bounds[i]]
    reduced = tuple(tuple(row[i] for i in free) for row in rows)
    found = []
    for point in _lattice_points(reduced, [bounds[i] for i in free]):
        full = [0] * size
        for i, value in zip(free, point):
            full[i] = value
        found.append(tuple(full))
    logger.debug("box volume %d: %d lattice points", volume, len(found))
    return minimal_elements(found)


def _patterns(tet_count: int) -> Iterator[Tuple[int, ...]]:
    """Coordinates to zero for each choice of one quad type per tetrahedron."""
    for choice in itertools.product(range(4, DISC_TYPES), repeat=tet_count):
        yield tuple(
            DISC_TYPES * tet + q
            for tet, kept in enumerate(choice)
            for q in range(4, DISC_TYPES)
            if q != kept
        )


def _run(jobs_list: List[Tuple[Rows, int, Tuple[int, ...], int]], jobs: int) -> List[List[Tuple[int, ...]]]:
    if jobs <= 1 or len(jobs_list) <= 1:
        return [_scan(job) for job in jobs_list]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_scan, jobs_list))


def fundamental_solutions(
    sys: MatchingSystem,
    box_volume_cap: int = DEFAULT_BOX_VOLUME_CAP,
    admissible_only: bool = False,
    jobs: int = 1,
) -> FundamentalSet:
    """
    Enumerate the fundamental solutions of ``A x = 0, x >= 0``.

    Args:
        sys: Matching system
        box_volume_cap: Largest search box scanned before giving up
        admissible_only: Only return solutions satisfying the quad condition,
            scanning one quadrilateral pattern at a time
        jobs: Worker processes for independent scans

    Returns:
        The fundamental set in lexicographic order

    Raises:
        EnumerationLimitExceeded: If a search box exceeds ``box_volume_cap``
    """
    size = sys.coordinate_count
    if admissible_only:
        work = [(sys.rows, size, zeros, box_volume_cap) for zeros in _patterns(sys.tet_count)]
    else:
        work = [(sys.rows, size, (), box_volume_cap)]
    logger.info("scanning %d search box(es) with %d job(s)", len(work), jobs)

    results = _run(work, jobs)
    solutions = {point for part in results for point in part}
    found = FundamentalSet.of([NormalVector(p) for p in solutions])
    logger.info(
        "%d fundamental solutions, %d admissible", len(found), len(found.admissible_subset)
    )
    return found


def admissible_fundamentals(
    sys: MatchingSystem,
    fundamentals: Optional[FundamentalSet] = None,
    box_volume_cap: int = DEFAULT_BOX_VOLUME_CAP,
    jobs: int = 1,
) -> FundamentalSet:
    """
    Fundamental solutions that satisfy the quadrilateral condition.

    Args:
        sys: Matching system
        fundamentals: A computed fundamental set to filter; when omitted the
            admissible ones are enumerated pattern by pattern
        box_volume_cap: Search box cap for the enumeration
        jobs: Worker processes

    Returns:
        A fundamental set whose members are all admissible
    """
    if fundamentals is None:
        fundamentals = fundamental_solutions(
            sys, box_volume_cap=box_volume_cap, admissible_only=True, jobs=jobs
        )
    return FundamentalSet.of(fundamentals.admissible())


def normal_spheres(
    tri: Triangulation,
    sys: Optional[MatchingSystem] = None,
    box_volume_cap: int = DEFAULT_BOX_VOLUME_CAP,
    jobs: int = 1,
) -> List[NormalVector]:
    """
    Admissible fundamental solutions that are embedded 2-spheres other than
    vertex links.
    """
    sys = sys or matching_system(tri)
    spheres = []
    for x in admissible_fundamentals(sys, box_volume_cap=box_volume_cap, jobs=jobs).solutions:
        report = reconstruct(tri, x)
        if report.component_count != 1 or report.components[0].kind is not SurfaceKind.SPHERE:
            continue
        if not is_vertex_linking(tri, x):
            spheres.append(x)
    return spheres
