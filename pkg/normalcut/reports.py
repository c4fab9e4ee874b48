"""
Versioned report models for CLI output.

Every report carries ``schema_version`` and serialises with sorted keys, so
equal inputs give byte-identical JSON.
"""

import json
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict

from normalcut import SCHEMA_VERSION
from normalcut.normal.coordinates import NormalVector, satisfies_quad_condition
from normalcut.normal.matching import MatchingSystem, is_admissible
from normalcut.normal.reconstruct import reconstruct
from normalcut.normal.surfaces import euler_characteristic, weight
from normalcut.provenance.hashing import triangulation_checksum
from normalcut.triangulation.boundary import boundary_surface
from normalcut.triangulation.homology import Coefficients, homology_h1, kneser_bound
from normalcut.triangulation.model import Triangulation
from normalcut.triangulation.skeleton import build_skeleton
from normalcut.unknot.decider import UnknotVerdict
from normalcut.wirtinger.diagram import KnotDiagram
from normalcut.wirtinger.presentation import WirtingerPresentation
from normalcut.wirtinger.search import PermutationAssignment


class Report(BaseModel):
    """Base of all reports."""

    model_config = ConfigDict(extra="forbid")

    schema_version: int = SCHEMA_VERSION

    def to_json(self) -> str:
        return json.dumps(self.model_dump(mode="json"), sort_keys=True, indent=2) + "\n"

    def to_text(self) -> str:
        return self.to_json()


class _Part(BaseModel):
    model_config = ConfigDict(extra="forbid")


class ValidationReport(Report):
    kind: str  # "triangulation" or "pd"
    ok: bool
    message: str
    details: Dict[str, int] = {}

    def to_text(self) -> str:
        return self.message + "\n"


class BoundaryComponentModel(_Part):
    triangles: int
    euler: int
    orientable: bool
    torus: bool


class AnalysisReport(Report):
    checksum: str
    tets: int
    vertices: int
    edges: int
    faces: int
    boundary: List[BoundaryComponentModel]
    h1: str
    h1_free_rank: int
    h1_torsion: List[int]
    h1_mod2_dim: int
    kneser_bound: int
    spheres: Optional[List[List[int]]] = None

    def to_text(self) -> str:
        lines = [
            f"tetrahedra: {self.tets}",
            f"vertices/edges/faces: {self.vertices}/{self.edges}/{self.faces}",
            f"H_1: {self.h1} (mod 2 dimension {self.h1_mod2_dim})",
            f"Kneser bound: {self.kneser_bound}",
        ]
        if not self.boundary:
            lines.append("boundary: empty")
        for i, comp in enumerate(self.boundary):
            kind = "torus" if comp.torus else ("orientable" if comp.orientable else "non-orientable")
            lines.append(f"boundary[{i}]: {comp.triangles} triangles, chi={comp.euler}, {kind}")
        if self.spheres is not None:
            lines.append(f"normal 2-spheres (non-vertex-linking): {len(self.spheres)}")
        return "\n".join(lines) + "\n"


class SolutionModel(_Part):
    vector: List[int]
    weight: int
    admissible: bool
    euler: Optional[int] = None
    components: Optional[List[str]] = None


class EnumerationReport(Report):
    checksum: str
    mode: str  # "vertex" or "fundamental"
    admissible_only: bool
    solutions: List[SolutionModel]

    def to_text(self) -> str:
        lines = [f"{len(self.solutions)} {self.mode} solution(s)"]
        for s in self.solutions:
            chi = "-" if s.euler is None else str(s.euler)
            kinds = ",".join(s.components or [])
            lines.append(f"{s.vector} w={s.weight} chi={chi} {kinds}".rstrip())
        return "\n".join(lines) + "\n"


class DiagnosticsModel(_Part):
    fundamental: int
    admissible: int
    disks: int
    essential_disks: int
    min_spanning_genus: Optional[int]
    trail_head: str


class VerdictReport(Report):
    verdict: str
    checksum: str
    certificate: Optional[List[int]]
    diagnostics: DiagnosticsModel

    def to_text(self) -> str:
        text = f"{self.verdict}"
        if self.certificate is not None:
            text += f", essential disk {self.certificate}"
        return text + "\n"


class RepresentationReport(Report):
    found: bool
    n_max: int
    generators: int
    relations: int
    n: Optional[int] = None
    images: Optional[List[str]] = None
    image_order: Optional[int] = None

    def to_text(self) -> str:
        if not self.found:
            return f"no non-cyclic representation up to S_{self.n_max} (inconclusive)\n"
        images = ", ".join(self.images or [])
        return f"knotted: S_{self.n} image of order {self.image_order}: {images}\n"


class DovetailReport(Report):
    verdict: str  # "unknot", "knotted" or "inconsistent"
    unknot: Optional[VerdictReport]
    representation: RepresentationReport
    decider_error: Optional[str] = None

    def to_text(self) -> str:
        decider = self.unknot.to_text() if self.unknot else f"decider failed: {self.decider_error}\n"
        return self.verdict + "\n" + decider + self.representation.to_text()


class ErrorReport(Report):
    error: str
    detail: str

    def to_text(self) -> str:
        return f"error: {self.error}: {self.detail}\n"


def triangulation_validation(tri: Triangulation) -> ValidationReport:
    interior = len(tri.interior_identifications)
    return ValidationReport(
        kind="triangulation",
        ok=True,
        message=f"ok, {tri.tet_count} tetrahedra, {len(tri.boundary_facets)} boundary faces",
        details={
            "tets": tri.tet_count,
            "identifications": interior,
            "boundary_faces": len(tri.boundary_facets),
        },
    )


def diagram_validation(diagram: KnotDiagram) -> ValidationReport:
    return ValidationReport(
        kind="pd",
        ok=True,
        message=f"ok, {diagram.crossing_count} crossings",
        details={"crossings": diagram.crossing_count},
    )


def analysis_report(
    tri: Triangulation, spheres: Optional[List[NormalVector]] = None
) -> AnalysisReport:
    skeleton = build_skeleton(tri)
    integral = homology_h1(tri, Coefficients.INTEGERS, skeleton)
    mod2 = homology_h1(tri, Coefficients.MOD2, skeleton)
    boundary = boundary_surface(tri, skeleton)
    return AnalysisReport(
        checksum=triangulation_checksum(tri),
        tets=tri.tet_count,
        vertices=len(skeleton.vertex_classes),
        edges=len(skeleton.edge_classes),
        faces=len(skeleton.face_classes),
        boundary=[
            BoundaryComponentModel(
                triangles=len(c.triangles), euler=c.euler, orientable=c.orientable, torus=c.is_torus
            )
            for c in boundary.components
        ],
        h1=integral.describe(),
        h1_free_rank=integral.free_rank,
        h1_torsion=list(integral.torsion),
        h1_mod2_dim=mod2.coefficient_field_dim,
        kneser_bound=kneser_bound(tri),
        spheres=None if spheres is None else [s.to_list() for s in spheres],
    )


def solution_model(tri: Triangulation, sys: MatchingSystem, x: NormalVector) -> SolutionModel:
    """Annotate a solution with weight and, when admissible, its topology."""
    admissible = is_admissible(sys, x)
    if not admissible:
        return SolutionModel(vector=x.to_list(), weight=weight(tri, x), admissible=False)
    report = reconstruct(tri, x)
    return SolutionModel(
        vector=x.to_list(),
        weight=report.weight,
        admissible=True,
        euler=euler_characteristic(tri, x, sys),
        components=[c.kind.value for c in report.components],
    )


def enumeration_report(
    tri: Triangulation,
    sys: MatchingSystem,
    solutions: List[NormalVector],
    mode: str,
    admissible_only: bool,
) -> EnumerationReport:
    shown = [x for x in solutions if satisfies_quad_condition(x)] if admissible_only else solutions
    return EnumerationReport(
        checksum=triangulation_checksum(tri),
        mode=mode,
        admissible_only=admissible_only,
        solutions=[solution_model(tri, sys, x) for x in shown],
    )


def verdict_report(tri: Triangulation, verdict: UnknotVerdict) -> VerdictReport:
    d = verdict.diagnostics
    return VerdictReport(
        verdict=verdict.verdict.value,
        checksum=triangulation_checksum(tri),
        certificate=verdict.certificate.to_list() if verdict.certificate else None,
        diagnostics=DiagnosticsModel(
            fundamental=d.fundamental_count,
            admissible=d.admissible_count,
            disks=d.disk_count,
            essential_disks=d.essential_disk_count,
            min_spanning_genus=d.min_spanning_genus,
            trail_head=d.trail_head,
        ),
    )


def representation_report(
    presentation: WirtingerPresentation, assignment: Optional[PermutationAssignment], n_max: int
) -> RepresentationReport:
    fields: Dict[str, Any] = {
        "found": assignment is not None,
        "n_max": n_max,
        "generators": presentation.generator_count,
        "relations": len(presentation.relations),
    }
    if assignment is not None:
        fields.update(
            n=assignment.n,
            images=assignment.cycle_notation(),
            image_order=assignment.image_order,
        )
    return RepresentationReport(**fields)
