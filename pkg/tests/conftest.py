"""Test configuration and fixtures."""

from pathlib import Path

import pytest

from normalcut.normal.coordinates import NormalVector
from normalcut.normal.matching import matching_system
from normalcut.triangulation.model import parse_triangulation
from normalcut.wirtinger.diagram import parse_pd
from normalcut.wirtinger.presentation import wirtinger_presentation

SAMPLES = Path(__file__).resolve().parent.parent / "samples"


def _load(name: str):
    return parse_triangulation((SAMPLES / name).read_text())


@pytest.fixture
def samples_dir():
    """Directory of the shipped sample files."""
    return SAMPLES


@pytest.fixture
def ball():
    """One unglued tetrahedron."""
    return _load("ball.json")


@pytest.fixture
def solid_torus():
    """One-tetrahedron layered solid torus."""
    return _load("solid_torus.json")


@pytest.fixture
def closed_sphere():
    """Two tetrahedra glued by the identity on every face: the 3-sphere."""
    return _load("closed_example.json")


@pytest.fixture
def solid_torus_system(solid_torus):
    """Matching equations of the solid torus."""
    return matching_system(solid_torus)


@pytest.fixture
def meridian_disk():
    """Essential disk of the solid torus: tri_0, tri_3 and the 01|23 quad."""
    return NormalVector.of([1, 0, 0, 1, 1, 0, 0])


@pytest.fixture
def trefoil():
    """Wirtinger presentation of the trefoil."""
    return wirtinger_presentation(parse_pd((SAMPLES / "pd" / "trefoil.json").read_text()))


@pytest.fixture
def figure_eight():
    """Wirtinger presentation of the figure-eight knot."""
    return wirtinger_presentation(parse_pd((SAMPLES / "pd" / "figure8.json").read_text()))


@pytest.fixture
def layered_solid_torus():
    """Two-tetrahedron layered solid torus."""
    return _load("solid_torus_2.json")


@pytest.fixture
def trefoil_complement():
    """Four-tetrahedron triangulation of the trefoil exterior with one boundary torus."""
    return _load("trefoil_complement.json")
