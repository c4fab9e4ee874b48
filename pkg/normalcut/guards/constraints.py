"""
Re-verification of certificates.

Checks are recomputed from scratch from the triangulation or presentation;
nothing from the search that produced the certificate is trusted.
"""

from dataclasses import dataclass

from normalcut.normal.coordinates import NormalVector
from normalcut.normal.matching import is_admissible, matching_system
from normalcut.normal.reconstruct import reconstruct
from normalcut.normal.surfaces import SurfaceKind
from normalcut.provenance.hashing import triangulation_checksum, verify_checksum
from normalcut.triangulation.model import Triangulation
from normalcut.wirtinger.presentation import WirtingerPresentation
from normalcut.wirtinger.search import PermutationAssignment, cycle_type, satisfies


@dataclass
class ConstraintViolation(Exception):
    """Raised when a certificate fails re-verification."""

    constraint: str
    details: str

    def __str__(self) -> str:
        return f"Certificate constraint violated: {self.constraint} - {self.details}"


class CertificateGuard:
    """Enforces certificate validity on all reported verdicts."""

    @staticmethod
    def validate_checksum(tri: Triangulation, expected: str) -> None:
        """
        Check that a saved certificate was issued for this triangulation.

        Raises:
            ConstraintViolation: If the recorded checksum differs
        """
        if not verify_checksum(tri, expected):
            raise ConstraintViolation(
                constraint="checksum",
                details=f"recorded {expected[:12]}..., triangulation has {triangulation_checksum(tri)[:12]}...",
            )

    @staticmethod
    def validate_certificate(tri: Triangulation, certificate: NormalVector) -> None:
        """
        Re-verify an essential disk certificate.

        Args:
            tri: The knot complement
            certificate: Claimed essential normal disk

        Raises:
            ConstraintViolation: If the vector is not an admissible connected
                disk with one essential boundary curve
        """
        if certificate.tet_count != tri.tet_count:
            raise ConstraintViolation(
                constraint="shape",
                details=f"vector has {certificate.tet_count} tetrahedra, triangulation {tri.tet_count}",
            )
        if not is_admissible(matching_system(tri), certificate):
            raise ConstraintViolation(
                constraint="admissible",
                details="vector fails the matching equations or quad condition",
            )

        report = reconstruct(tri, certificate)
        if report.component_count != 1:
            raise ConstraintViolation(
                constraint="connected", details=f"{report.component_count} components"
            )
        component = report.components[0]
        if component.kind is not SurfaceKind.DISK:
            raise ConstraintViolation(
                constraint="disk",
                details=(
                    f"chi={component.euler}, orientable={component.orientable}, "
                    f"boundary curves={len(component.boundary_curves)}"
                ),
            )
        if not component.boundary_curves[0].nonzero:
            raise ConstraintViolation(
                constraint="essential_boundary",
                details="boundary curve bounds a disk on the boundary torus",
            )

    @staticmethod
    def validate_representation(
        presentation: WirtingerPresentation, assignment: PermutationAssignment
    ) -> None:
        """
        Re-verify a permutation representation certificate.

        Args:
            presentation: Wirtinger presentation
            assignment: Claimed images of the generators

        Raises:
            ConstraintViolation: If a relation fails, the images are not
                conjugate, or the image is cyclic
        """
        if len(assignment.images) != presentation.generator_count:
            raise ConstraintViolation(
                constraint="shape",
                details=f"{len(assignment.images)} images for {presentation.generator_count} generators",
            )
        if any(sorted(p) != list(range(assignment.n)) for p in assignment.images):
            raise ConstraintViolation(constraint="shape", details="images are not permutations")
        if len({cycle_type(p) for p in assignment.images}) > 1:
            raise ConstraintViolation(
                constraint="conjugate_images", details="images have different cycle types"
            )
        if not satisfies(presentation.relations, assignment.images):
            raise ConstraintViolation(
                constraint="relations", details="a Wirtinger relation does not hold"
            )
        if not assignment.is_noncyclic():
            raise ConstraintViolation(
                constraint="noncyclic", details=f"image of order {assignment.image_order} is cyclic"
            )

