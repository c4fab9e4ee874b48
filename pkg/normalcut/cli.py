"""
Command-line interface.

Exit codes: 0 for a definitive positive answer (valid input, unknot,
knottedness certificate found, saved verdict re-verified), 1 for a definitive
negative one (invalid input semantics, knotted, no certificate found, verdict
rejected), 2 for operational errors.
"""

import argparse
import asyncio
import logging
import os
import sys
import tempfile
from pathlib import Path
from typing import Any, Dict, Optional, Sequence, Tuple

from pydantic import ValidationError

from normalcut import __version__
from normalcut.config import Command, RunConfig
from normalcut.dovetail import dovetail
from normalcut.enumeration.double_description import vertex_solutions
from normalcut.enumeration.fundamental import EnumerationLimitExceeded, fundamental_solutions, normal_spheres
from normalcut.guards.constraints import CertificateGuard, ConstraintViolation
from normalcut.normal.coordinates import NormalVector, NormalVectorError
from normalcut.normal.matching import matching_system
from normalcut.reports import (
    DovetailReport,
    ErrorReport,
    Report,
    ValidationReport,
    VerdictReport,
    analysis_report,
    diagram_validation,
    enumeration_report,
    representation_report,
    triangulation_validation,
    verdict_report,
)
from normalcut.triangulation.model import Triangulation, TriangulationError, parse_triangulation
from normalcut.unknot.decider import PreconditionError, Verdict, decide_unknot
from normalcut.wirtinger.diagram import DiagramError, KnotDiagram, parse_pd
from normalcut.wirtinger.presentation import wirtinger_presentation
from normalcut.wirtinger.search import find_noncyclic_rep

logger = logging.getLogger(__name__)

EXIT_POSITIVE = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2

Outcome = Tuple[Report, int]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", dest="json_output", help="Emit JSON")
    common.add_argument("--out", type=Path, dest="output", help="Write the report to a file")
    common.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    common.add_argument("--n-max", type=int, help="Largest S_n searched (default 5)")
    common.add_argument("--box-cap", type=int, dest="box_volume_cap", help="Search box volume cap")
    common.add_argument("--jobs", type=int, help="Worker processes (default $NORMALCUT_JOBS or 1)")

    parser = argparse.ArgumentParser(
        prog="normalcut",
        description="Normal surface computations on triangulated 3-manifolds.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    cmd = commands.add_parser(
        "validate", parents=[common], help="Check a triangulation or PD file."
    )
    cmd.add_argument("file", type=Path)

    cmd = commands.add_parser(
        "analyze", parents=[common], help="Homology, boundary and the Kneser bound."
    )
    cmd.add_argument("file", type=Path)
    cmd.add_argument(
        "--spheres", action="store_true", help="Also list normal 2-spheres that are not vertex links"
    )

    cmd = commands.add_parser("enumerate", parents=[common], help="List solution sets.")
    cmd.add_argument("file", type=Path)
    mode = cmd.add_mutually_exclusive_group()
    mode.add_argument("--fundamental", action="store_const", const="fundamental", dest="mode")
    mode.add_argument("--vertex", action="store_const", const="vertex", dest="mode")
    cmd.add_argument(
        "--admissible", action="store_true", dest="admissible_only", help="Admissible ones only"
    )

    cmd = commands.add_parser("unknot", parents=[common], help="Decide whether a knot is trivial.")
    cmd.add_argument("file", type=Path, help="Triangulated knot complement")
    cmd.add_argument("--pd", type=Path, help="PD diagram of the same knot, searched concurrently")

    cmd = commands.add_parser(
        "certify-knotted", parents=[common], help="Search for a non-cyclic S_n representation."
    )
    cmd.add_argument("file", type=Path, help="PD diagram")

    cmd = commands.add_parser(
        "verify", parents=[common], help="Re-check a saved unknot verdict against a triangulation."
    )
    cmd.add_argument("file", type=Path, help="Triangulation the verdict was issued for")
    cmd.add_argument("report", type=Path, help="JSON verdict written by 'unknot --json'")
    return parser


def _config(opts: argparse.Namespace) -> RunConfig:
    inputs = [opts.file]
    for extra in ("pd", "report"):
        if getattr(opts, extra, None):
            inputs.append(getattr(opts, extra))
    fields: Dict[str, Any] = {
        "command": Command(opts.command),
        "inputs": inputs,
        "output": opts.output,
        "json_output": opts.json_output,
        "verbose": opts.verbose,
        "admissible_only": getattr(opts, "admissible_only", False),
        "spheres": getattr(opts, "spheres", False),
    }
    for name in ("n_max", "box_volume_cap", "jobs", "mode"):
        value = getattr(opts, name, None)
        if value is not None:
            fields[name] = value
    return RunConfig(**fields)


def _read_triangulation(path: Path) -> Triangulation:
    return parse_triangulation(path.read_text(encoding="utf-8"))


def _read_diagram(path: Path) -> KnotDiagram:
    return parse_pd(path.read_text(encoding="utf-8"))


def cmd_validate(config: RunConfig) -> Outcome:
    text = config.inputs[0].read_text(encoding="utf-8")
    if text.lstrip().startswith("{"):
        try:
            return triangulation_validation(parse_triangulation(text)), EXIT_POSITIVE
        except TriangulationError as exc:
            return ValidationReport(kind="triangulation", ok=False, message=str(exc)), EXIT_NEGATIVE
    try:
        return diagram_validation(parse_pd(text)), EXIT_POSITIVE
    except DiagramError as exc:
        return ValidationReport(kind="pd", ok=False, message=exc.reason), EXIT_NEGATIVE


def cmd_analyze(config: RunConfig) -> Outcome:
    tri = _read_triangulation(config.inputs[0])
    spheres = None
    if config.spheres:
        spheres = normal_spheres(tri, box_volume_cap=config.box_volume_cap, jobs=config.jobs)
    return analysis_report(tri, spheres), EXIT_POSITIVE


def cmd_enumerate(config: RunConfig) -> Outcome:
    tri = _read_triangulation(config.inputs[0])
    sys_ = matching_system(tri)
    if config.mode == "vertex":
        solutions = list(vertex_solutions(sys_).vertices)
    else:
        found = fundamental_solutions(
            sys_,
            box_volume_cap=config.box_volume_cap,
            admissible_only=config.admissible_only,
            jobs=config.jobs,
        )
        solutions = list(found.solutions)
    report = enumeration_report(tri, sys_, solutions, config.mode, config.admissible_only)
    return report, EXIT_POSITIVE


def cmd_unknot(config: RunConfig) -> Outcome:
    tri = _read_triangulation(config.inputs[0])
    if len(config.inputs) > 1:
        presentation = wirtinger_presentation(_read_diagram(config.inputs[1]))
        result = asyncio.run(
            dovetail(
                tri,
                presentation,
                n_max=config.n_max,
                box_volume_cap=config.box_volume_cap,
                jobs=config.jobs,
            )
        )
        if result.verdict is not None and result.verdict.certificate is not None:
            CertificateGuard.validate_certificate(tri, result.verdict.certificate)
        if result.representation is not None:
            CertificateGuard.validate_representation(presentation, result.representation)
        report = DovetailReport(
            verdict=result.combined,
            unknot=verdict_report(tri, result.verdict) if result.verdict else None,
            representation=representation_report(presentation, result.representation, config.n_max),
            decider_error=result.decider_error,
        )
        if not result.consistent:
            return report, EXIT_ERROR
        return report, EXIT_POSITIVE if result.combined == "unknot" else EXIT_NEGATIVE

    verdict = decide_unknot(tri, box_volume_cap=config.box_volume_cap, jobs=config.jobs)
    if verdict.certificate is not None:
        CertificateGuard.validate_certificate(tri, verdict.certificate)
    return verdict_report(tri, verdict), EXIT_POSITIVE if verdict.is_unknot else EXIT_NEGATIVE


def cmd_certify_knotted(config: RunConfig) -> Outcome:
    presentation = wirtinger_presentation(_read_diagram(config.inputs[0]))
    assignment = find_noncyclic_rep(presentation, config.n_max)
    if assignment is not None:
        CertificateGuard.validate_representation(presentation, assignment)
    report = representation_report(presentation, assignment, config.n_max)
    return report, EXIT_POSITIVE if assignment is not None else EXIT_NEGATIVE


def cmd_verify(config: RunConfig) -> Outcome:
    """Check a saved verdict's checksum and re-verify its disk certificate."""
    tri = _read_triangulation(config.inputs[0])
    try:
        saved = VerdictReport.model_validate_json(config.inputs[1].read_text(encoding="utf-8"))
    except ValidationError as exc:
        message = f"not a verdict report: {exc.errors()[0]['msg']}"
        return ValidationReport(kind="verdict", ok=False, message=message), EXIT_NEGATIVE

    try:
        CertificateGuard.validate_checksum(tri, saved.checksum)
        if saved.certificate is None:
            if saved.verdict == Verdict.UNKNOT.value:
                raise ConstraintViolation(
                    constraint="certificate", details="unknot verdict without a disk"
                )
            message = f"ok, checksum matches, {saved.verdict} verdict carries no disk"
        else:
            CertificateGuard.validate_certificate(tri, NormalVector.of(saved.certificate))
            message = "ok, essential disk re-verified"
    except ConstraintViolation as exc:
        return ValidationReport(kind="verdict", ok=False, message=str(exc)), EXIT_NEGATIVE
    except NormalVectorError as exc:
        return ValidationReport(kind="verdict", ok=False, message=str(exc)), EXIT_NEGATIVE
    return ValidationReport(kind="verdict", ok=True, message=message), EXIT_POSITIVE


COMMANDS = {
    Command.VALIDATE: cmd_validate,
    Command.ANALYZE: cmd_analyze,
    Command.ENUMERATE: cmd_enumerate,
    Command.UNKNOT: cmd_unknot,
    Command.CERTIFY_KNOTTED: cmd_certify_knotted,
    Command.VERIFY: cmd_verify,
}


def _emit(report: Report, json_output: bool, output: Optional[Path]) -> None:
    """Write the report; files are replaced atomically so no partial output remains."""
    text = report.to_json() if json_output else report.to_text()
    if output is None:
        sys.stdout.write(text)
        return
    directory = output.resolve().parent
    handle = tempfile.NamedTemporaryFile(
        "w", encoding="utf-8", dir=directory, prefix=f".{output.name}.", delete=False
    )
    try:
        with handle:
            handle.write(text)
        os.replace(handle.name, output)
    except Exception:
        Path(handle.name).unlink(missing_ok=True)
        raise


def main(argv: Optional[Sequence[str]] = None) -> int:
    opts = build_parser().parse_args(argv)
    logging.basicConfig(
        format="%(name)s %(levelname)s :: %(message)s",
        level=logging.DEBUG if opts.verbose else logging.WARNING,
    )

    try:
        config = _config(opts)
    except ValidationError as exc:
        first = exc.errors()[0]
        detail = f"{'.'.join(str(p) for p in first['loc'])}: {first['msg']}"
        _emit(ErrorReport(error="configuration", detail=detail), opts.json_output, None)
        return EXIT_ERROR

    try:
        report, code = COMMANDS[config.command](config)
    except (TriangulationError, DiagramError, PreconditionError) as exc:
        report, code = ErrorReport(error="invalid input", detail=str(exc)), EXIT_NEGATIVE
    except EnumerationLimitExceeded as exc:
        report, code = ErrorReport(error="limit exceeded", detail=str(exc)), EXIT_ERROR
    except ConstraintViolation as exc:
        logger.error("certificate failed re-verification: %s", exc)
        report, code = ErrorReport(error="inconsistency", detail=str(exc)), EXIT_ERROR
    except OSError as exc:
        report, code = ErrorReport(error="io", detail=str(exc)), EXIT_ERROR

    try:
        _emit(report, config.json_output, config.output)
    except OSError as exc:
        logger.error("cannot write report: %s", exc)
        return EXIT_ERROR
    return code


if __name__ == "__main__":
    sys.exit(main())
