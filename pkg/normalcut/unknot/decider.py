"""
Unknot decision by normal surface enumeration.

A knot is trivial exactly when its complement contains a disk whose
boundary is essential on the boundary torus. A least-weight such disk can be
normalised and is then a fundamental solution, so scanning the admissible
fundamental solutions decides the question.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional

from normalcut.enumeration.fundamental import DEFAULT_BOX_VOLUME_CAP, fundamental_solutions
from normalcut.normal.coordinates import NormalVector
from normalcut.normal.matching import matching_system
from normalcut.normal.reconstruct import SurfaceReport, reconstruct
from normalcut.normal.surfaces import SurfaceKind
from normalcut.provenance.trail import DecisionTrail
from normalcut.triangulation.boundary import boundary_surface
from normalcut.triangulation.homology import homology_h1
from normalcut.triangulation.model import Triangulation

logger = logging.getLogger(__name__)


class PreconditionError(ValueError):
    """The input is not a knot complement."""


class ClosedSurfaceError(ValueError):
    """A boundary test was asked of a surface with no boundary."""


class Verdict(Enum):
    UNKNOT = "unknot"
    KNOTTED = "knotted"


@dataclass(frozen=True)
class UnknotDiagnostics:
    """Counts behind a verdict; each count bounds the next from above."""

    fundamental_count: int
    admissible_count: int
    disk_count: int
    essential_disk_count: int
    min_spanning_genus: Optional[int]  # upper bound from fundamentals only
    trail_head: str


@dataclass(frozen=True)
class UnknotVerdict:
    verdict: Verdict
    certificate: Optional[NormalVector]
    diagnostics: UnknotDiagnostics

    @property
    def is_unknot(self) -> bool:
        return self.verdict is Verdict.UNKNOT


def knot_complement_problems(tri: Triangulation) -> List[str]:
    """Reasons ``tri`` fails to look like a knot complement (empty if none)."""
    problems: List[str] = []
    boundary = boundary_surface(tri)
    if len(boundary.components) != 1:
        problems.append(f"boundary has {len(boundary.components)} components, expected 1")
    elif not boundary.components[0].is_torus:
        problems.append("boundary component is not a torus")
    h1 = homology_h1(tri)
    if h1.free_rank != 1 or h1.torsion:
        problems.append(f"H_1 is {h1.describe()}, expected Z")
    return problems


def check_knot_complement(tri: Triangulation) -> bool:
    """
    Whether ``tri`` has one torus boundary component and ``H_1 = Z``.

    Args:
        tri: A validated triangulation

    Returns:
        True if the precondition of ``decide_unknot`` holds
    """
    return not knot_complement_problems(tri)


def is_essential_boundary(tri: Triangulation, x: NormalVector) -> bool:
    """
    Whether every boundary curve of the surface is essential on the boundary.

    Args:
        tri: A validated triangulation
        x: Admissible normal vector

    Returns:
        True iff each boundary curve has a nonzero mod-2 class

    Raises:
        ClosedSurfaceError: If the surface has no boundary
        NotAdmissibleError: If x is not admissible
    """
    report = reconstruct(tri, x)
    return _essential(report)


def _essential(report: SurfaceReport) -> bool:
    curves = report.boundary_curves
    if not curves:
        raise ClosedSurfaceError("surface has no boundary curve")
    return all(curve.nonzero for curve in curves)


def _spanning_genus(report: SurfaceReport) -> Optional[int]:
    """Genus of a connected orientable surface with one essential boundary curve."""
    if report.component_count != 1:
        return None
    component = report.components[0]
    if not component.orientable or len(component.boundary_curves) != 1:
        return None
    if not component.boundary_curves[0].nonzero:
        return None
    return (1 - component.euler) // 2


def decide_unknot(
    tri: Triangulation,
    box_volume_cap: int = DEFAULT_BOX_VOLUME_CAP,
    jobs: int = 1,
    prune: bool = True,
    trail: Optional[DecisionTrail] = None,
) -> UnknotVerdict:
    """
    Decide whether the knot with complement ``tri`` is the unknot.

    Args:
        tri: Triangulated knot complement
        box_volume_cap: Search box cap passed to the enumeration
        jobs: Worker processes for the enumeration
        prune: Enumerate only admissible solutions, one quadrilateral
            pattern at a time (the fundamental count then equals the
            admissible count)
        trail: Decision trail to record into (a fresh one when omitted)

    Returns:
        UNKNOT with the lexicographically least essential disk as
        certificate, or KNOTTED

    Raises:
        PreconditionError: If ``tri`` is not a knot complement
        EnumerationLimitExceeded: If the search box is over the cap
    """
    problems = knot_complement_problems(tri)
    if problems:
        raise PreconditionError("; ".join(problems))

    trail = trail if trail is not None else DecisionTrail()
    fundamentals = fundamental_solutions(
        matching_system(tri), box_volume_cap=box_volume_cap, admissible_only=prune, jobs=jobs
    )
    candidates = fundamentals.admissible()
    trail.record(
        "enumerate",
        f"{tri.tet_count} tetrahedra",
        {"fundamental": len(fundamentals), "admissible": len(candidates)},
    )

    disks = 0
    essential = []
    genus: Optional[int] = None
    for x in candidates:
        report = reconstruct(tri, x)
        g = _spanning_genus(report)
        if g is not None:
            genus = g if genus is None else min(genus, g)
        if report.component_count != 1 or report.components[0].kind is not SurfaceKind.DISK:
            continue
        disks += 1
        is_essential = _essential(report)
        trail.record("candidate", str(list(x.coords)), {"essential": is_essential})
        if is_essential:
            essential.append(x)

    certificate = min(essential, key=lambda v: v.coords) if essential else None
    verdict = Verdict.UNKNOT if certificate is not None else Verdict.KNOTTED
    trail.record(
        "verdict",
        verdict.value,
        {"certificate": certificate.to_list() if certificate else None},
    )
    logger.info(
        "decide_unknot: %s (%d disks, %d essential)", verdict.value, disks, len(essential)
    )
    return UnknotVerdict(
        verdict=verdict,
        certificate=certificate,
        diagnostics=UnknotDiagnostics(
            fundamental_count=len(fundamentals),
            admissible_count=len(candidates),
            disk_count=disks,
            essential_disk_count=len(essential),
            min_spanning_genus=genus,
            trail_head=trail.head,
        ),
    )
